#include "ndagg/serialize.hpp"

namespace ndagg {

using nlohmann::json;

json toJson(const NDimInterval& x) {
  return json(std::vector<double>(x.components().begin(), x.components().end()));
}

json toJson(const Witness& w) {
  json values = json::array();
  for (const WitnessEntry& e : w.entries) {
    values.push_back({{"name", e.name},
                      {"value", e.scalar ? json(e.value.front()) : json(e.value)}});
  }
  json out{{"values", std::move(values)}};
  if (!w.note.empty()) out["note"] = w.note;
  return out;
}

json toJson(const CompatibilityReport& r) {
  json out{{"axiom", r.axiom},
           {"holds", r.holds},
           {"seed", r.seed},
           {"samples", r.samples},
           {"violations", r.violations},
           {"maxDeviation", r.max_deviation}};
  if (r.witness) out["witness"] = toJson(*r.witness);
  if (!r.detail.empty()) out["detail"] = r.detail;
  return out;
}

json toJson(const OrderCompatibility& c) {
  return json{{"SV8", toJson(c.sv8)}, {"SV9", toJson(c.sv9)}};
}

json toJson(const Classification& c) {
  json out = json::object();
  for (const CompatibilityReport* r : c.all()) out[r->axiom] = toJson(*r);
  return out;
}

json toJson(const MwProperties& p) {
  json out = json::object();
  for (const CompatibilityReport* r :
       {&p.strict, &p.symmetric, &p.additive, &p.additive_unsaturated, &p.homogeneous}) {
    out[r->axiom] = toJson(*r);
  }
  return out;
}

json toJson(const CollectiveMatrix& c) {
  json rows = json::array();
  for (const auto& row : c.entries) {
    json r = json::array();
    for (const auto& x : row) r.push_back(toJson(x));
    rows.push_back(std::move(r));
  }
  return rows;
}

json toJson(const Annotation& a) {
  json out{{"code", a.code}, {"message", a.message}};
  if (!a.detail.is_null()) out["detail"] = a.detail;
  return out;
}

json rankingJson(const Ranking& r, const DecisionProblem& problem) {
  auto labels = [&](const std::vector<std::size_t>& idx) {
    json out = json::array();
    for (std::size_t i : idx) out.push_back(problem.alternatives[i]);
    return out;
  };
  json ties = json::array();
  for (const auto& group : r.ties) ties.push_back(labels(group));
  return json{{"worstToBest", labels(r.worst_to_best)},
              {"bestToWorst", labels(r.best_to_worst)},
              {"ties", std::move(ties)},
              {"text", describeRanking(r, problem.alternatives)}};
}

json rankResponse(const PipelineResult& result, const DecisionProblem& problem) {
  json scores = json::array();
  for (const auto& s : result.ranking.scores) scores.push_back(toJson(s));
  json annotations = json::array();
  for (const auto& a : result.annotations) annotations.push_back(toJson(a));
  return json{{"alternatives", problem.alternatives},
              {"scores", std::move(scores)},
              {"ranking", rankingJson(result.ranking, problem)},
              {"annotations", std::move(annotations)},
              {"order", result.order},
              {"aggregator", result.aggregator}};
}

json collectiveResponse(const CollectiveMatrix& c, const DecisionProblem& problem) {
  return json{{"alternatives", problem.alternatives},
              {"criteria", problem.criteria},
              {"collective", toJson(c)}};
}

json toJson(const SensitivityReport& s, const DecisionProblem& problem) {
  json changes = json::array();
  for (const auto& c : s.collective_changes) {
    changes.push_back({{"alternative", problem.alternatives[c.alternative]},
                       {"criterion", problem.criteria[c.criterion]},
                       {"before", toJson(c.before)},
                       {"after", toJson(c.after)}});
  }
  json deltas = json::object();
  for (std::size_t i = 0; i < s.score_deltas.size(); ++i) {
    deltas[problem.alternatives[i]] = s.score_deltas[i];
  }
  json flips = json::array();
  for (const auto& f : s.flips) {
    flips.push_back({{"a", problem.alternatives[f.a]},
                     {"b", problem.alternatives[f.b]},
                     {"before", f.before},
                     {"after", f.after}});
  }
  return json{{"baseline", rankResponse(s.baseline, problem)},
              {"edited", rankResponse(s.edited, problem)},
              {"collectiveChanges", std::move(changes)},
              {"scoreDeltas", std::move(deltas)},
              {"flips", std::move(flips)},
              {"rankingChanged", s.ranking_changed}};
}

}  // namespace ndagg
