#include "pctrees/cli.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "pctrees/crisp_ranking.hpp"
#include "pctrees/error.hpp"
#include "pctrees/fuzzy_ranking.hpp"
#include "pctrees/graph.hpp"
#include "pctrees/problem.hpp"
#include "pctrees/report.hpp"

namespace pctrees::cli {

namespace {

std::string fmt4(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::string fmt_tfn(const Tfn& t) { return "(" + fmt4(t.l) + ", " + fmt4(t.m) + ", " + fmt4(t.u) + ")"; }

std::string join_ranking(const std::vector<std::size_t>& ranking_one_based) {
  std::string s = "(";
  for (std::size_t i = 0; i < ranking_one_based.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(ranking_one_based[i]);
  }
  return s + ")";
}

std::vector<std::size_t> one_based(const std::vector<std::size_t>& r) {
  std::vector<std::size_t> out;
  for (auto x : r) out.push_back(x + 1);
  return out;
}

std::uint64_t resolve_cap(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("PCTREES_TREE_CAP"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end != nullptr && *end == '\0') return v;
  }
  return kDefaultTreeCap;
}

ComparisonGraph graph_of(const Problem& p) {
  return std::visit([](const auto& prob) { return build_graph(prob.pcm); }, p);
}

std::vector<Violation> violations_of(const Problem& p) {
  if (const auto* c = std::get_if<CrispProblem>(&p)) return validate_crisp(c->pcm, c->conf ? &*c->conf : nullptr);
  const auto& f = std::get<FuzzyProblem>(p);
  return validate_fuzzy(f.pcm, f.conf ? &*f.conf : nullptr);
}

/// Validation gate shared by every subcommand; returns an exit code on failure.
std::optional<int> check_problem(const Problem& p, std::ostream& err) {
  const auto violations = violations_of(p);
  if (!violations.empty()) {
    err << "invalid problem: " << violations.size() << " violation(s)\n";
    for (const auto& v : violations) err << "  [" << to_string(v.kind) << "] " << v.message << "\n";
    return kInvalid;
  }
  if (!is_connected(graph_of(p))) {
    err << "comparison graph is not connected; no priority vector can be derived\n";
    return kDisconnected;
  }
  return std::nullopt;
}

struct Common {
  std::string path;
  std::optional<std::uint64_t> cap;
};

int cmd_validate(const Problem& p, std::ostream& out, std::ostream& err) {
  const auto g = graph_of(p);
  const auto violations = violations_of(p);
  out << "mode: " << to_string(mode_of(p)) << "\n";
  out << "alternatives: " << g.vertex_count() << "\n";
  out << "comparisons: " << g.edge_count() << "\n";
  if (!violations.empty()) {
    out << "status: invalid\n";
    for (const auto& v : violations) out << "  [" << to_string(v.kind) << "] " << v.message << "\n";
    err << "validation failed with " << violations.size() << " violation(s)\n";
    return kInvalid;
  }
  if (const auto* c = std::get_if<CrispProblem>(&p)) {
    const auto triads = is_consistent_triads(c->pcm, 1e-9);
    out << "consistency: " << (triads.consistent ? "consistent" : "inconsistent");
    if (!triads.consistent) out << " (" << triads.violations.size() << " triad(s) off)";
    out << "\n";
  }
  if (!is_connected(g)) {
    out << "status: disconnected\n";
    err << "comparison graph is not connected\n";
    return kDisconnected;
  }
  out << "status: valid\n";
  return kOk;
}

int cmd_trees(const Problem& p, bool count, bool bound, bool list, std::uint64_t cap, std::ostream& out,
              std::ostream& err) {
  if (auto code = check_problem(p, err)) return *code;
  const auto g = graph_of(p);
  if (!count && !bound && !list) count = bound = true;
  if (count) {
    out << "count: " << count_trees_exact(g).str() << "\n";
    out << "spectral: " << fmt4(count_trees_spectral(g)) << "\n";
  }
  if (bound) out << "bound: " << tree_count_upper_bound(g).str() << "\n";
  if (list) {
    const auto trees = enumerate_spanning_trees(g, cap);
    std::size_t k = 0;
    for (const auto& t : trees) out << "ST" << ++k << ": " << to_string(t) << "\n";
  }
  return kOk;
}

void print_report(const RankingReport& rep, std::ostream& out) {
  out << "method: " << rep.method << " (" << to_string(rep.mode) << (rep.method == "spanning-tree" ? ", " + rep.orientation + " orientation" : "")
      << ")\n";
  if (rep.tree_count) {
    out << "spanning trees: " << *rep.tree_count;
    if (rep.tree_bound) out << " (upper bound " << *rep.tree_bound << ")";
    out << "\n";
  }
  std::size_t k = 0;
  for (const auto& t : rep.trees) {
    out << "\nST" << ++k << " " << to_string(t.tree) << "\n";
    if (rep.mode == Mode::kCrisp) {
      out << "  w =";
      for (const auto& w : t.weights) out << " " << fmt4(w.m);
      out << "\n  r = " << fmt4(t.abs_reliability.m) << "  R = " << fmt4(t.rel_reliability.m) << "\n";
    } else {
      for (std::size_t i = 0; i < t.weights.size(); ++i) out << "  w" << i + 1 << " = " << fmt_tfn(t.weights[i]) << "\n";
      out << "  r = " << fmt_tfn(t.abs_reliability) << "  R = " << fmt_tfn(t.rel_reliability) << "\n";
    }
  }
  if (!rep.trees.empty()) out << "\n";
  if (rep.mode == Mode::kFuzzy) {
    out << "final fuzzy vector:\n";
    for (std::size_t i = 0; i < rep.final_weights.size(); ++i) {
      out << "  w" << i + 1 << " = " << fmt_tfn(rep.final_weights[i]);
      if (rep.fuzziness) out << "  fuzziness " << fmt4((*rep.fuzziness)[i]);
      out << "\n";
    }
    if (rep.defuzzified) {
      out << "defuzzified:";
      for (double d : *rep.defuzzified) out << " " << fmt4(d);
      out << "\n";
    }
  }
  out << "final:";
  for (double w : rep.priority) out << " " << fmt4(w);
  out << "\n";
  if (rep.lambda_max) out << "lambda_max: " << fmt4(*rep.lambda_max) << "\n";
  out << "ranking: " << join_ranking(rep.ranking) << "\n";
}

RankingReport baseline_report(const CrispPcm& pcm, const std::string& method) {
  RankingReport rep;
  rep.method = method;
  rep.mode = Mode::kCrisp;
  rep.n = pcm.size();
  PriorityVector w;
  if (method == "harker") {
    const auto h = harker_evm_detailed(pcm);
    w = h.weights;
    rep.lambda_max = h.lambda_max;
  } else {
    w = incomplete_gmm(pcm);
  }
  for (double x : w.weights) rep.final_weights.push_back(Tfn::crisp(x));
  rep.priority = w.weights;
  rep.ranking = one_based(rank(w));
  return rep;
}

int cmd_rank(const Problem& p, const std::string& method, const std::string& orientation_text,
             const std::string& json_path, std::uint64_t cap, std::ostream& out, std::ostream& err) {
  if (auto code = check_problem(p, err)) return *code;
  const auto orientation = orientation_text == "paper-eq14" ? Orientation::kPaperEq14 : Orientation::kStandard;

  if (mode_of(p) == Mode::kFuzzy && method != "spanning-tree") {
    err << "method '" << method << "' needs crisp preferences; fuzzy problems support only spanning-tree\n";
    return kIncompatibleMethod;
  }
  if (mode_of(p) == Mode::kFuzzy && orientation != Orientation::kStandard) {
    err << "orientation '" << orientation_text << "' applies to crisp problems only\n";
    return kIncompatibleMethod;
  }

  const auto start = std::chrono::steady_clock::now();
  RankingReport rep;
  if (const auto* c = std::get_if<CrispProblem>(&p)) {
    if (method == "spanning-tree") {
      const auto result = rank_by_spanning_trees(c->pcm, c->conf ? &*c->conf : nullptr, orientation, cap);
      rep = make_report(result, orientation, c->pcm.size());
    } else {
      rep = baseline_report(c->pcm, method);
    }
  } else {
    const auto& f = std::get<FuzzyProblem>(p);
    rep = make_report(rank_by_spanning_trees_fuzzy(f.pcm, f.conf ? &*f.conf : nullptr, cap), f.pcm.size());
  }
  if (method == "spanning-tree") rep.tree_bound = tree_count_upper_bound(graph_of(p)).str();
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (json_path == "-") {
    out << report_to_json(rep) << "\n";
    return kOk;
  }
  print_report(rep, out);
  if (!json_path.empty()) {
    std::ofstream f(json_path);
    if (!f) {
      err << "cannot write report to '" << json_path << "'\n";
      return kIoOrParse;
    }
    f << report_to_json(rep) << "\n";
  }
  return kOk;
}

int cmd_compare(const Problem& p, std::uint64_t cap, std::ostream& out, std::ostream& err) {
  if (auto code = check_problem(p, err)) return *code;
  const auto* c = std::get_if<CrispProblem>(&p);
  if (c == nullptr) {
    err << "compare needs crisp preferences; harker and gmm are undefined for fuzzy judgments\n";
    return kIncompatibleMethod;
  }
  const auto st = rank_by_spanning_trees(c->pcm, c->conf ? &*c->conf : nullptr, Orientation::kStandard, cap);
  const auto hm = harker_evm(c->pcm);
  const auto gm = incomplete_gmm(c->pcm);
  const auto r_st = st.ranking;
  const auto r_hm = rank(hm);
  const auto r_gm = rank(gm);

  out << std::left << std::setw(12) << "alternative" << std::setw(16) << "spanning-tree" << std::setw(10) << "harker"
      << "gmm\n";
  for (std::size_t i = 0; i < c->pcm.size(); ++i) {
    out << std::left << std::setw(12) << i + 1 << std::setw(16) << fmt4(st.final_weights[i]) << std::setw(10)
        << fmt4(hm[i]) << fmt4(gm[i]) << "\n";
  }
  out << std::left << std::setw(12) << "ranking" << std::setw(16) << join_ranking(one_based(r_st)) << std::setw(10)
      << join_ranking(one_based(r_hm)) << join_ranking(one_based(r_gm)) << "\n\n";
  auto verdict = [](const auto& a, const auto& b) { return a == b ? "agree" : "differ"; };
  out << "spanning-tree vs harker: " << verdict(r_st, r_hm) << "\n";
  out << "spanning-tree vs gmm: " << verdict(r_st, r_gm) << "\n";
  out << "harker vs gmm: " << verdict(r_hm, r_gm) << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Priority vectors from incomplete pairwise comparisons via spanning trees", "pctrees"};
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* sub, bool with_cap) {
    sub->add_option("file", common.path, "Problem file (.json or .csv)")->required();
    if (with_cap) {
      sub->add_option("--cap", common.cap, "Refuse enumeration above this many trees (default: $PCTREES_TREE_CAP or 1000000)");
    }
  };

  auto* validate = app.add_subcommand("validate", "Check reciprocity, symmetry, positivity and connectivity");
  add_common(validate, false);

  bool count = false, bound = false, list = false;
  auto* trees = app.add_subcommand("trees", "Spanning-tree diagnostics");
  add_common(trees, true);
  trees->add_flag("--count", count, "Exact (determinant) and spectral tree counts");
  trees->add_flag("--bound", bound, "Upper bound from vertices, edges and leaves");
  trees->add_flag("--list", list, "List every spanning tree in lexicographic order");

  std::string method = "spanning-tree";
  std::string orientation = "standard";
  std::string json_path;
  auto* rank_cmd = app.add_subcommand("rank", "Derive a priority vector and ranking");
  add_common(rank_cmd, true);
  rank_cmd->add_option("--method", method, "spanning-tree | harker | gmm")
      ->check(CLI::IsMember({"spanning-tree", "harker", "gmm"}));
  rank_cmd->add_option("--orientation", orientation, "standard | paper-eq14")
      ->check(CLI::IsMember({"standard", "paper-eq14"}));
  rank_cmd->add_option("--json", json_path, "Write the JSON report to this path ('-' for stdout only)");

  auto* compare = app.add_subcommand("compare", "Spanning-tree, harker and gmm side by side");
  add_common(compare, true);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kIoOrParse;
  }

  try {
    const auto problem = load_problem(common.path);
    const auto cap = resolve_cap(common.cap);
    if (validate->parsed()) return cmd_validate(problem, out, err);
    if (trees->parsed()) return cmd_trees(problem, count, bound, list, cap, out, err);
    if (rank_cmd->parsed()) return cmd_rank(problem, method, orientation, json_path, cap, out, err);
    return cmd_compare(problem, cap, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kIoOrParse;
  } catch (const TooManyTreesError& e) {
    err << "error: " << e.what() << "\n";
    return kTooManyTrees;
  } catch (const ZeroReliabilityError& e) {
    err << "error: " << e.what() << "\n";
    return kZeroReliability;
  } catch (const NotConnectedError& e) {
    err << "error: " << e.what() << "\n";
    return kDisconnected;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kIoOrParse;
  }
}

}  // namespace pctrees::cli
