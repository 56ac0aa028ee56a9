#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "lapcoef/tree.hpp"

namespace lapcoef {

// Text format, one tree per line: n followed by 2(n-1) vertex labels giving
// the edge endpoints, e.g. "4 0 1 1 2 2 3" for the path on four vertices.
// Blank lines and lines starting with '#' are skipped by read_trees.

/// Throws ParseError carrying line_no on malformed input.
Tree parse_tree_line(std::string_view line, std::size_t line_no = 1);

std::vector<Tree> read_trees(std::istream& in);

std::string format_tree(const Tree& t);

}  // namespace lapcoef
