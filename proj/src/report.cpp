#include "pctrees/report.hpp"

#include "json.hpp"

#include "pctrees/error.hpp"

namespace pctrees {

namespace {

using nlohmann::json;

json tfn_json(const Tfn& t, Mode mode) {
  if (mode == Mode::kCrisp) return t.m;
  return json::array({t.l, t.m, t.u});
}

Tfn tfn_from(const json& v) {
  if (v.is_number()) return Tfn::crisp(v.get<double>());
  if (v.is_array() && v.size() == 3) return {v[0].get<double>(), v[1].get<double>(), v[2].get<double>()};
  throw ParseError("expected a number or [l, m, u], got " + v.dump());
}

json tree_json(const SpanningTree& t) {
  json edges = json::array();
  for (const auto& e : t.edges) edges.push_back(json::array({e.u + 1, e.v + 1}));
  return edges;
}

SpanningTree tree_from(const json& v) {
  SpanningTree t;
  for (const auto& e : v) t.edges.push_back({e.at(0).get<std::size_t>() - 1, e.at(1).get<std::size_t>() - 1});
  return t;
}

std::vector<std::size_t> one_based(const std::vector<std::size_t>& ranking) {
  std::vector<std::size_t> out;
  out.reserve(ranking.size());
  for (auto r : ranking) out.push_back(r + 1);
  return out;
}

}  // namespace

std::string_view to_string(Orientation orientation) {
  return orientation == Orientation::kStandard ? "standard" : "paper-eq14";
}

RankingReport make_report(const CrispRankingResult& r, Orientation orientation, std::size_t n) {
  RankingReport rep;
  rep.method = "spanning-tree";
  rep.mode = Mode::kCrisp;
  rep.orientation = std::string(to_string(orientation));
  rep.n = n;
  rep.tree_count = std::to_string(r.trees.size());
  for (const auto& t : r.trees) {
    ReportTree row{t.tree, {}, Tfn::crisp(t.abs_reliability), Tfn::crisp(t.rel_reliability)};
    for (double w : t.weights.weights) row.weights.push_back(Tfn::crisp(w));
    rep.trees.push_back(std::move(row));
  }
  for (double w : r.final_weights.weights) rep.final_weights.push_back(Tfn::crisp(w));
  rep.priority = r.final_weights.weights;
  rep.ranking = one_based(r.ranking);
  return rep;
}

RankingReport make_report(const FuzzyRankingResult& r, std::size_t n) {
  RankingReport rep;
  rep.method = "spanning-tree";
  rep.mode = Mode::kFuzzy;
  rep.orientation = "standard";
  rep.n = n;
  rep.tree_count = std::to_string(r.trees.size());
  for (const auto& t : r.trees) rep.trees.push_back({t.tree, t.weights, t.abs_reliability, t.rel_reliability});
  rep.final_weights = r.final_weights;
  rep.defuzzified = r.summary.defuzzified;
  rep.fuzziness = r.summary.fuzziness;
  rep.priority = r.summary.normalized.weights;
  rep.ranking = one_based(r.summary.ranking);
  return rep;
}

std::string report_to_json(const RankingReport& report, int indent) {
  json doc;
  doc["schema"] = report.schema;
  doc["method"] = report.method;
  doc["mode"] = std::string(to_string(report.mode));
  doc["orientation"] = report.orientation;
  doc["n"] = report.n;
  doc["tree_count"] = report.tree_count ? json(*report.tree_count) : json(nullptr);
  doc["tree_bound"] = report.tree_bound ? json(*report.tree_bound) : json(nullptr);

  json trees = json::array();
  for (const auto& t : report.trees) {
    json weights = json::array();
    for (const auto& w : t.weights) weights.push_back(tfn_json(w, report.mode));
    trees.push_back({{"edges", tree_json(t.tree)},
                     {"weights", weights},
                     {"r", tfn_json(t.abs_reliability, report.mode)},
                     {"R", tfn_json(t.rel_reliability, report.mode)}});
  }
  doc["trees"] = trees;

  json final_weights = json::array();
  for (const auto& w : report.final_weights) final_weights.push_back(tfn_json(w, report.mode));
  doc["final"] = final_weights;
  doc["defuzzified"] = report.defuzzified ? json(*report.defuzzified) : json(nullptr);
  doc["fuzziness"] = report.fuzziness ? json(*report.fuzziness) : json(nullptr);
  doc["priority"] = report.priority;
  doc["ranking"] = report.ranking;
  doc["lambda_max"] = report.lambda_max ? json(*report.lambda_max) : json(nullptr);
  doc["elapsed_ms"] = report.elapsed_ms;
  return doc.dump(indent);
}

RankingReport report_from_json(std::string_view text) {
  try {
    const auto doc = json::parse(text);
    RankingReport rep;
    rep.schema = doc.at("schema").get<int>();
    if (rep.schema != 1) throw ParseError("unsupported report schema " + std::to_string(rep.schema));
    rep.method = doc.at("method").get<std::string>();
    const auto mode = doc.at("mode").get<std::string>();
    if (mode != "crisp" && mode != "fuzzy") throw ParseError("field 'mode': unknown mode '" + mode + "'");
    rep.mode = mode == "crisp" ? Mode::kCrisp : Mode::kFuzzy;
    rep.orientation = doc.at("orientation").get<std::string>();
    rep.n = doc.at("n").get<std::size_t>();
    if (!doc.at("tree_count").is_null()) rep.tree_count = doc.at("tree_count").get<std::string>();
    if (!doc.at("tree_bound").is_null()) rep.tree_bound = doc.at("tree_bound").get<std::string>();
    for (const auto& t : doc.at("trees")) {
      ReportTree row{tree_from(t.at("edges")), {}, tfn_from(t.at("r")), tfn_from(t.at("R"))};
      for (const auto& w : t.at("weights")) row.weights.push_back(tfn_from(w));
      rep.trees.push_back(std::move(row));
    }
    for (const auto& w : doc.at("final")) rep.final_weights.push_back(tfn_from(w));
    if (!doc.at("defuzzified").is_null()) rep.defuzzified = doc.at("defuzzified").get<std::vector<double>>();
    if (!doc.at("fuzziness").is_null()) rep.fuzziness = doc.at("fuzziness").get<std::vector<double>>();
    rep.priority = doc.at("priority").get<std::vector<double>>();
    rep.ranking = doc.at("ranking").get<std::vector<std::size_t>>();
    if (!doc.at("lambda_max").is_null()) rep.lambda_max = doc.at("lambda_max").get<double>();
    rep.elapsed_ms = doc.at("elapsed_ms").get<double>();
    return rep;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace pctrees
