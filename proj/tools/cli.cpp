#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <thread>

#include "lapcoef/analysis.hpp"
#include "lapcoef/canonical.hpp"
#include "lapcoef/coeffs.hpp"
#include "lapcoef/enumerate.hpp"
#include "lapcoef/error.hpp"
#include "lapcoef/io.hpp"
#include "lapcoef/order.hpp"
#include "lapcoef/verify.hpp"

namespace lapcoef::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { Text, Csv, Json };

struct RunConfig {
  std::string subcommand;
  int jobs = 1;
  bool force = false;
  Format format = Format::Text;
  std::string input;
  std::string output;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

void guard(int n, int limit, const RunConfig& config) {
  if (n > limit && !config.force) {
    throw ResourceLimitError("n = " + std::to_string(n) + " exceeds the default limit " + std::to_string(limit) +
                             " for '" + config.subcommand + "'; pass --force to override");
  }
}

std::vector<Tree> input_trees(const RunConfig& config, std::istream& in) {
  if (config.input.empty() || config.input == "-") return read_trees(in);
  std::ifstream file(config.input);
  if (!file) throw UsageError("cannot read input file '" + config.input + "'");
  return read_trees(file);
}

std::string optional_int(const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); }

Json tree_json(const Tree& t) {
  Json j;
  j["n"] = t.order();
  j["tree"] = format_tree(t);
  return j;
}

// Each handler writes to `out` and returns an exit status.

int cmd_coeffs(const RunConfig& config, const std::string& engine, std::istream& in, std::ostream& out) {
  const auto trees = input_trees(config, in);
  Json rows = Json::array();
  int status = kExitOk;
  for (const auto& t : trees) {
    CoeffVector c;
    if (engine == "charpoly") {
      c = coeffs_via_charpoly(t);
    } else {
      c = coeffs_via_matchings(t);
      if (engine == "both" && coeffs_via_charpoly(t) != c) {
        status = kExitViolation;
        if (config.format != Format::Json) out << "# engines disagree on: " << format_tree(t) << '\n';
      }
    }
    if (config.format == Format::Json) {
      Json j = tree_json(t);
      j["coeffs"] = to_string(c);
      rows.push_back(std::move(j));
    } else {
      out << to_string(c) << '\n';
    }
  }
  if (config.format == Format::Json) out << rows.dump(2) << '\n';
  return status;
}

int cmd_compare(const RunConfig& config, std::istream& in, std::ostream& out) {
  const auto trees = input_trees(config, in);
  if (trees.size() % 2 != 0) throw UsageError("compare expects trees in pairs (an even number of lines)");
  Json rows = Json::array();
  if (config.format != Format::Json) out << "pair,class,r,s,sign_r,sign_s\n";
  for (std::size_t i = 0; i + 1 < trees.size(); i += 2) {
    const auto pc = classify(coeffs(trees[i]), coeffs(trees[i + 1]));
    if (config.format == Format::Json) {
      Json j;
      j["pair"] = i / 2;
      j["class"] = to_string(pc.tag);
      j["r"] = pc.r ? Json(*pc.r) : Json(nullptr);
      j["s"] = pc.s ? Json(*pc.s) : Json(nullptr);
      j["sign_r"] = pc.sign_at_r;
      j["sign_s"] = pc.sign_at_s;
      rows.push_back(std::move(j));
    } else {
      out << i / 2 << ',' << to_string(pc.tag) << ',' << optional_int(pc.r) << ',' << optional_int(pc.s) << ','
          << pc.sign_at_r << ',' << pc.sign_at_s << '\n';
    }
  }
  if (config.format == Format::Json) out << rows.dump(2) << '\n';
  return kExitOk;
}

int cmd_enumerate(const RunConfig& config, int n, const TreeFilter& filter, std::ostream& out) {
  guard(n, kPerTreeMaxN, config);
  const auto trees = enumerate_filtered(n, filter);
  if (config.format == Format::Json) {
    Json rows = Json::array();
    for (const auto& t : trees) rows.push_back(format_tree(t));
    out << rows.dump(2) << '\n';
  } else {
    for (const auto& t : trees) out << format_tree(t) << '\n';
  }
  return kExitOk;
}

int cmd_classify_pairs(const RunConfig& config, int n, bool all_pairs, std::ostream& out) {
  guard(n, kPairwiseMaxN, config);
  const auto trees = all_trees(n);
  std::vector<CoeffVector> vectors;
  vectors.reserve(trees.size());
  for (const auto& t : trees) vectors.push_back(coeffs(t));
  Json rows = Json::array();
  if (config.format != Format::Json) out << "i,j,class,r,s\n";
  for (std::size_t i = 0; i < trees.size(); ++i) {
    for (std::size_t j = i + 1; j < trees.size(); ++j) {
      const auto pc = classify(vectors[i], vectors[j]);
      const bool incomparable = pc.tag == PairTag::IncomparableType1 || pc.tag == PairTag::IncomparableType2;
      if (!all_pairs && !incomparable) continue;
      if (config.format == Format::Json) {
        Json row;
        row["i"] = i;
        row["j"] = j;
        row["class"] = to_string(pc.tag);
        row["r"] = pc.r ? Json(*pc.r) : Json(nullptr);
        row["s"] = pc.s ? Json(*pc.s) : Json(nullptr);
        row["first"] = format_tree(trees[i]);
        row["second"] = format_tree(trees[j]);
        rows.push_back(std::move(row));
      } else {
        out << i << ',' << j << ',' << to_string(pc.tag) << ',' << optional_int(pc.r) << ',' << optional_int(pc.s)
            << '\n';
      }
    }
  }
  if (config.format == Format::Json) out << rows.dump(2) << '\n';
  return kExitOk;
}

void emit_rows(const std::vector<ClassificationRow>& rows, Format format, std::ostream& out) {
  if (format == Format::Json) {
    Json arr = Json::array();
    for (const auto& r : rows) {
      Json j;
      j["n"] = r.n;
      j["trees"] = r.tree_count;
      j["type1"] = r.type1_pairs;
      j["type2"] = r.type2_pairs;
      j["incomparable"] = r.incomparable_pairs;
      j["percent"] = r.percent();
      j["equal_pairs"] = r.equal_pairs;
      arr.push_back(std::move(j));
    }
    out << arr.dump(2) << '\n';
    return;
  }
  out << csv_header() << '\n';
  for (const auto& r : rows) out << to_csv(r) << '\n';
}

int cmd_table1(const RunConfig& config, int min_n, int max_n, std::ostream& out) {
  guard(max_n, kPairwiseMaxN, config);
  if (min_n < 3) throw UsageError("--min-n must be at least 3");
  std::vector<ClassificationRow> rows;
  for (int n = min_n; n <= max_n; ++n) {
    rows.push_back(classify_all(n, SweepOptions{config.jobs, kPairwiseMaxN, config.force}));
  }
  emit_rows(rows, config.format, out);
  return kExitOk;
}

int cmd_chain(const RunConfig& config, int n, bool verify, std::ostream& out) {
  guard(n, kPerTreeMaxN, config);
  const auto chain = build_chain(n);
  std::optional<ChainCheck> check;
  if (verify) check = check_chain(chain);
  if (config.format == Format::Json) {
    Json j;
    j["n"] = n;
    j["steps"] = chain.length();
    Json trees = Json::array();
    for (const auto& t : chain.trees) trees.push_back(format_tree(t));
    j["trees"] = std::move(trees);
    if (check) {
      j["starts_at_star"] = check->starts_at_star;
      j["ends_at_path"] = check->ends_at_path;
      j["strictly_increasing"] = check->strictly_increasing;
    }
    out << j.dump(2) << '\n';
  } else {
    for (const auto& t : chain.trees) out << format_tree(t) << '\n';
    if (check) {
      out << "# steps " << chain.length() << '\n';
      out << "# starts at star: " << (check->starts_at_star ? "yes" : "no") << '\n';
      out << "# ends at path: " << (check->ends_at_path ? "yes" : "no") << '\n';
      out << "# strictly increasing: " << (check->strictly_increasing ? "yes" : "no") << '\n';
    }
  }
  if (check && !(check->starts_at_star && check->ends_at_path && check->strictly_increasing)) return kExitViolation;
  return kExitOk;
}

int cmd_verify(const RunConfig& config, const std::string& theorem_name, int max_n, std::ostream& out) {
  const auto theorem = parse_theorem(theorem_name);
  if (!theorem) throw UsageError("unknown theorem '" + theorem_name + "'");
  guard(max_n, kPerTreeMaxN, config);
  const auto report = verify_monotonicity(*theorem, max_n, config.jobs);
  if (config.format == Format::Json) {
    Json j;
    j["theorem"] = to_string(report.theorem);
    j["max_n"] = report.max_n;
    j["trees_examined"] = report.trees_examined;
    j["instances"] = report.instances;
    Json v = Json::array();
    for (const auto& viol : report.violations) {
      Json w;
      w["before"] = format_tree(viol.step.before);
      w["after"] = format_tree(viol.step.after);
      w["index"] = viol.index;
      w["detail"] = viol.detail;
      v.push_back(std::move(w));
    }
    j["violations"] = std::move(v);
    out << j.dump(2) << '\n';
  } else {
    out << "theorem " << to_string(report.theorem) << '\n'
        << "max_n " << report.max_n << '\n'
        << "trees_examined " << report.trees_examined << '\n'
        << "instances " << report.instances << '\n'
        << "violations " << report.violations.size() << '\n';
    for (const auto& viol : report.violations) {
      out << "violation k=" << viol.index << " (" << viol.detail << "): " << format_tree(viol.step.before) << " -> "
          << format_tree(viol.step.after) << '\n';
    }
  }
  return report.ok() ? kExitOk : kExitViolation;
}

// "diameter=4", "max_degree=3", "starlike=3", "perfect_matching", joined by ','.
TreeFilter parse_class(const std::string& spec) {
  TreeFilter filter;
  std::stringstream ss(spec);
  std::string part;
  bool any = false;
  while (std::getline(ss, part, ',')) {
    any = true;
    const auto eq = part.find('=');
    const std::string key = part.substr(0, eq);
    if (key == "perfect_matching" && eq == std::string::npos) {
      filter.perfect_matching = true;
      continue;
    }
    if (eq == std::string::npos) throw UsageError("class term '" + part + "' needs a value");
    int value = 0;
    try {
      std::size_t used = 0;
      value = std::stoi(part.substr(eq + 1), &used);
      if (used != part.size() - eq - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw UsageError("class term '" + part + "' needs an integer value");
    }
    if (key == "diameter") {
      filter.diameter = value;
    } else if (key == "max_degree") {
      filter.max_degree = value;
    } else if (key == "starlike") {
      filter.starlike_legs = value;
    } else {
      throw UsageError("unknown class term '" + key + "'");
    }
  }
  if (!any) throw UsageError("empty --class");
  return filter;
}

int cmd_extremal(const RunConfig& config, int n, const std::string& cls, const std::string& mode_name,
                 std::ostream& out) {
  guard(n, kPerTreeMaxN, config);
  const auto filter = parse_class(cls);
  const ExtremeMode mode = mode_name == "max" ? ExtremeMode::Max : ExtremeMode::Min;
  const auto result = extremal_sweep(n, filter, mode, config.jobs);
  if (config.format == Format::Json) {
    Json j;
    j["n"] = n;
    j["class"] = cls;
    j["mode"] = mode_name;
    j["class_size"] = result.members.size();
    Json per_k = Json::array();
    for (std::size_t k = 0; k < result.winners.size(); ++k) {
      Json row;
      row["k"] = k;
      row["value"] = result.coefficients[result.winners[k].front()].c[k].get_str();
      Json winners = Json::array();
      for (std::size_t idx : result.winners[k]) {
        Json w;
        w["code"] = canonical_code(result.members[idx]).code;
        w["tree"] = format_tree(result.members[idx]);
        winners.push_back(std::move(w));
      }
      row["winners"] = std::move(winners);
      per_k.push_back(std::move(row));
    }
    j["per_k"] = std::move(per_k);
    j["simultaneous"] = result.simultaneous ? Json(format_tree(result.members[*result.simultaneous])) : Json(nullptr);
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  if (result.empty()) {
    out << "class is empty\n";
    return kExitOk;
  }
  out << "class_size " << result.members.size() << '\n';
  for (std::size_t k = 0; k < result.winners.size(); ++k) {
    out << "k=" << k << " value=" << result.coefficients[result.winners[k].front()].c[k].get_str()
        << " winners=" << result.winners[k].size() << '\n';
    for (std::size_t idx : result.winners[k]) {
      out << "  " << canonical_code(result.members[idx]).code << ' ' << format_tree(result.members[idx]) << '\n';
    }
  }
  out << "simultaneous ";
  if (result.simultaneous) {
    out << canonical_code(result.members[*result.simultaneous]).code << ' '
        << format_tree(result.members[*result.simultaneous]) << '\n';
  } else {
    out << "none\n";
  }
  return kExitOk;
}

int cmd_closed_form(const RunConfig& config, int n, std::optional<int> k, std::ostream& out) {
  std::vector<int> ks;
  if (k) {
    ks.push_back(*k);
  } else {
    for (int i = 0; i <= n; ++i) ks.push_back(i);
  }
  Json rows = Json::array();
  if (config.format != Format::Json) out << "k,T1,T2\n";
  for (int i : ks) {
    const auto c1 = closed_form_c(DiameterGapTree::T1, n, i).get_str();
    const auto c2 = closed_form_c(DiameterGapTree::T2, n, i).get_str();
    if (config.format == Format::Json) {
      Json j;
      j["k"] = i;
      j["T1"] = c1;
      j["T2"] = c2;
      rows.push_back(std::move(j));
    } else {
      out << i << ',' << c1 << ',' << c2 << '\n';
    }
  }
  if (config.format == Format::Json) out << rows.dump(2) << '\n';
  return kExitOk;
}

int cmd_crossing(const RunConfig& config, int n, std::ostream& out) {
  const auto result = crossing_analysis(n);
  std::ostringstream x0;
  x0.precision(9);
  x0 << std::fixed << result.x0;
  std::string signs;
  for (int s : result.signs) signs += s > 0 ? '+' : (s < 0 ? '-' : '0');
  if (config.format == Format::Json) {
    Json j;
    j["n"] = n;
    j["k_star"] = result.k_star ? Json(*result.k_star) : Json(nullptr);
    j["single_change"] = result.single_change;
    j["x0"] = x0.str();
    j["signs"] = signs;
    out << j.dump(2) << '\n';
  } else {
    out << "n " << n << '\n'
        << "k_star " << optional_int(result.k_star) << '\n';
    if (result.k_star) {
      std::ostringstream ratio;
      ratio.precision(6);
      ratio << std::fixed << static_cast<double>(*result.k_star) / n;
      out << "k_star_over_n " << ratio.str() << '\n';
    }
    out << "single_change " << (result.single_change ? "yes" : "no") << '\n'
        << "x0 " << x0.str() << '\n'
        << "signs " << signs << '\n';
  }
  return kExitOk;
}

int cmd_poset_stats(const RunConfig& config, int n, std::ostream& out) {
  guard(n, kPairwiseMaxN, config);
  const auto stats = poset_stats(n, SweepOptions{config.jobs, kPairwiseMaxN, config.force});
  if (config.format == Format::Json) {
    Json j;
    j["n"] = stats.n;
    j["trees"] = stats.tree_count;
    j["distinct_vectors"] = stats.distinct_vectors;
    j["longest_chain"] = stats.longest_chain;
    j["max_antichain"] = stats.max_antichain;
    out << j.dump(2) << '\n';
  } else {
    out << "n,trees,distinct_vectors,longest_chain,max_antichain\n"
        << stats.n << ',' << stats.tree_count << ',' << stats.distinct_vectors << ',' << stats.longest_chain << ','
        << stats.max_antichain << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Laplacian coefficients of trees and their domination order", "lapcoef"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  config.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::string format_name = "text";
  app.add_option("-j,--jobs", config.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--force", config.force, "Lift the default size guards (n <= 14 pairwise, n <= 20 per tree)");
  app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("-o,--output", config.output, "Write output to this file instead of standard output");

  std::string engine = "matchings";
  auto* coeffs_cmd = app.add_subcommand("coeffs", "Coefficient vectors of trees read one per line");
  coeffs_cmd->add_option("-i,--input", config.input, "Tree file (default: standard input)");
  coeffs_cmd->add_option("--engine", engine, "matchings, charpoly or both (cross-checked)")
      ->check(CLI::IsMember({"matchings", "charpoly", "both"}));

  auto* compare_cmd = app.add_subcommand("compare", "Classify consecutive pairs of input trees");
  compare_cmd->add_option("-i,--input", config.input, "Tree file (default: standard input)");

  int n = 0;
  TreeFilter filter;
  int diameter_value = -1, degree_value = -1, legs_value = -1;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "All non-isomorphic trees on n vertices");
  enumerate_cmd->add_option("-n,--n", n, "Vertex count")->required();
  enumerate_cmd->add_option("--diameter", diameter_value, "Keep trees of this diameter");
  enumerate_cmd->add_option("--max-degree", degree_value, "Keep trees of this maximum degree");
  enumerate_cmd->add_option("--starlike", legs_value, "Keep starlike trees with this many legs");
  enumerate_cmd->add_flag("--perfect-matching", filter.perfect_matching, "Keep trees with a perfect matching");

  bool all_pairs = false;
  auto* pairs_cmd = app.add_subcommand("classify-pairs", "Classify all pairs of n-vertex trees");
  pairs_cmd->add_option("-n,--n", n, "Vertex count")->required();
  pairs_cmd->add_flag("--all", all_pairs, "List every pair, not only incomparable ones");

  int min_n = 3, max_n = 0;
  auto* table_cmd = app.add_subcommand("table1", "Incomparable-pair census, one CSV row per n");
  table_cmd->add_option("--max-n", max_n, "Largest n")->required();
  table_cmd->add_option("--min-n", min_n, "Smallest n");

  bool verify_chain = false;
  auto* chain_cmd = app.add_subcommand("chain", "Star-to-path domination chain");
  chain_cmd->add_option("-n,--n", n, "Vertex count")->required();
  chain_cmd->add_flag("--verify", verify_chain, "Check endpoints and strict domination of every step");

  std::string theorem;
  auto* verify_cmd = app.add_subcommand("verify", "Exhaustive check of a monotonicity theorem");
  verify_cmd->add_option("--theorem", theorem, "delta, path_shift, two_edge_shift or majorization")->required();
  verify_cmd->add_option("--max-n", max_n, "Largest tree order")->required();

  std::string cls, mode = "min";
  auto* extremal_cmd = app.add_subcommand("extremal", "Per-k extremal trees within a class");
  extremal_cmd->add_option("-n,--n", n, "Vertex count")->required();
  extremal_cmd->add_option("--class", cls, "e.g. diameter=4, max_degree=3, starlike=3, perfect_matching,max_degree=3")
      ->required();
  extremal_cmd->add_option("--mode", mode, "min or max")->check(CLI::IsMember({"min", "max"}));

  int k_value = -1;
  auto* closed_cmd = app.add_subcommand("closed-form", "Closed-form c_k of the diameter n-3 pair T1, T2");
  closed_cmd->add_option("-n,--n", n, "Vertex count (>= 8)")->required();
  closed_cmd->add_option("-k,--k", k_value, "Single index (default: all)");

  auto* crossing_cmd = app.add_subcommand("crossing", "Where c_k(T2) - c_k(T1) changes sign");
  crossing_cmd->add_option("-n,--n", n, "Vertex count (>= 8)")->required();

  auto* poset_cmd = app.add_subcommand("poset-stats", "Longest chain and largest antichain of the domination order");
  poset_cmd->add_option("-n,--n", n, "Vertex count")->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  config.subcommand = app.get_subcommands().front()->get_name();
  config.format = format_name == "json" ? Format::Json : (format_name == "csv" ? Format::Csv : Format::Text);
  if (diameter_value >= 0) filter.diameter = diameter_value;
  if (degree_value >= 0) filter.max_degree = degree_value;
  if (legs_value >= 0) filter.starlike_legs = legs_value;

  std::ofstream file;
  std::ostream* sink = &out;
  if (!config.output.empty() && config.output != "-") {
    file.open(config.output);
    if (!file) {
      err << "error: cannot write '" << config.output << "'\n";
      return kExitUsage;
    }
    sink = &file;
  }

  try {
    int status = kExitOk;
    const auto& sub = config.subcommand;
    if (sub == "coeffs") status = cmd_coeffs(config, engine, in, *sink);
    else if (sub == "compare") status = cmd_compare(config, in, *sink);
    else if (sub == "enumerate") status = cmd_enumerate(config, n, filter, *sink);
    else if (sub == "classify-pairs") status = cmd_classify_pairs(config, n, all_pairs, *sink);
    else if (sub == "table1") status = cmd_table1(config, min_n, max_n, *sink);
    else if (sub == "chain") status = cmd_chain(config, n, verify_chain, *sink);
    else if (sub == "verify") status = cmd_verify(config, theorem, max_n, *sink);
    else if (sub == "extremal") status = cmd_extremal(config, n, cls, mode, *sink);
    else if (sub == "closed-form") status = cmd_closed_form(config, n, k_value >= 0 ? std::optional<int>(k_value) : std::nullopt, *sink);
    else if (sub == "crossing") status = cmd_crossing(config, n, *sink);
    else if (sub == "poset-stats") status = cmd_poset_stats(config, n, *sink);
    sink->flush();
    if (!*sink) {
      err << "error: failed writing output\n";
      return kExitUsage;
    }
    return status;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace lapcoef::cli
