#include "lapcoef/io.hpp"

#include <charconv>
#include <istream>

#include "lapcoef/error.hpp"

namespace lapcoef {

Tree parse_tree_line(std::string_view line, std::size_t line_no) {
  std::vector<long long> values;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    if (pos >= line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r') ++end;
    long long value = 0;
    auto token = line.substr(pos, end - pos);
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError(line_no, "not an integer: '" + std::string(token) + "'");
    }
    values.push_back(value);
    pos = end;
  }
  if (values.empty()) throw ParseError(line_no, "empty tree line");
  const long long n = values.front();
  if (n < 1 || n > 1'000'000) throw ParseError(line_no, "vertex count must be positive");
  if (values.size() != static_cast<std::size_t>(2 * n - 1)) {
    throw ParseError(line_no, "expected " + std::to_string(2 * (n - 1)) + " edge endpoints after n, got " +
                                  std::to_string(values.size() - 1));
  }
  std::vector<Edge> edges;
  for (std::size_t i = 1; i + 1 < values.size(); i += 2) {
    if (values[i] < 0 || values[i] >= n || values[i + 1] < 0 || values[i + 1] >= n) {
      throw ParseError(line_no, "vertex label out of range 0.." + std::to_string(n - 1));
    }
    edges.push_back({static_cast<Vertex>(values[i]), static_cast<Vertex>(values[i + 1])});
  }
  try {
    return Tree(static_cast<int>(n), std::move(edges));
  } catch (const InvalidTree& e) {
    throw ParseError(line_no, e.what());
  }
}

std::vector<Tree> read_trees(std::istream& in) {
  std::vector<Tree> trees;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    trees.push_back(parse_tree_line(line, line_no));
  }
  return trees;
}

std::string format_tree(const Tree& t) {
  std::string out = std::to_string(t.order());
  for (const auto& e : t.edges()) {
    out += ' ';
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
  }
  return out;
}

}  // namespace lapcoef
