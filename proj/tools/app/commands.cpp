#include "app/commands.hpp"

#include <cstdlib>

#include "ndagg/error.hpp"
#include "ndagg/ndim_agg.hpp"
#include "ndagg/scalar_agg.hpp"
#include "ndagg/semivector.hpp"
#include "ndagg/serialize.hpp"

namespace ndagg::app {

using nlohmann::json;

std::uint64_t defaultSeed() {
  const char* env = std::getenv("NDAGG_SEED");
  if (env == nullptr || *env == '\0') return kDefaultSeed;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0') return kDefaultSeed;
  return v;
}

void enforceSizeGuard(const DecisionProblem& problem) {
  const std::pair<const char*, std::size_t> sides[] = {
      {"alternatives", problem.p()}, {"criteria", problem.m()}, {"experts", problem.n()}};
  for (const auto& [name, size] : sides) {
    if (size > kMaxSide) {
      throw ValidationError("at most " + std::to_string(kMaxSide) + " " + name + " per request",
                            name);
    }
  }
}

void enforceTrialGuard(std::size_t samples, const std::string& path) {
  if (samples > kMaxTrials) {
    throw ValidationError("at most " + std::to_string(kMaxTrials) + " samples per request", path);
  }
}

json rankDocument(const DecisionProblem& problem, const SamplingConfig& cfg) {
  return rankResponse(runPipeline(problem, cfg), problem);
}

json scoreDocument(const DecisionProblem& problem, const SamplingConfig& cfg) {
  const json full = rankDocument(problem, cfg);
  return json{{"alternatives", full.at("alternatives")},
              {"scores", full.at("scores")},
              {"annotations", full.at("annotations")}};
}

json collectiveDocument(const DecisionProblem& problem) {
  return collectiveResponse(buildCollective(problem), problem);
}

json sensitivityDocument(const DecisionProblem& problem, const std::vector<Edit>& edits,
                         const SamplingConfig& cfg) {
  return toJson(sensitivity(problem, edits, cfg), problem);
}

namespace {

bool holdsAll(const json& reports) {
  for (const auto& r : reports) {
    if (!r.at("holds").get<bool>()) return false;
  }
  return true;
}

json arrayOf(const std::vector<CompatibilityReport>& reports) {
  json out = json::array();
  for (const auto& r : reports) out.push_back(toJson(r));
  return out;
}

}  // namespace

json checkOrderDocument(const AdmissibleOrderSpec& spec, const SamplingConfig& cfg) {
  enforceTrialGuard(cfg.samples);
  const AdmissibleOrder order(spec);
  const json adm = arrayOf(verifyAdmissibility(order.comparator(), order.dimension(), cfg));
  const json comp = toJson(checkOrderCompatibility(order, cfg));
  return json{{"order", spec.toJson()},
              {"label", order.label()},
              {"admissibility", adm},
              {"compatibility", comp},
              {"holds", holdsAll(adm) && comp.at("SV8").at("holds").get<bool>() &&
                            comp.at("SV9").at("holds").get<bool>()}};
}

json checkAxiomsDocument(std::size_t n, const AdmissibleOrderSpec& spec, const SamplingConfig& cfg) {
  enforceTrialGuard(cfg.samples);
  if (n == 0 || n > kMaxSide) throw ValidationError("dimension must be in [1, 64]", "dimension");
  const AdmissibleOrder order(spec);
  const json wf = arrayOf(checkSemifieldAxioms(ScalarAlgebra::unitInterval(), cfg));
  const json sv = arrayOf(checkSemiVectorAxioms(n, cfg));
  const json comp = toJson(checkOrderCompatibility(order, cfg));
  return json{{"dimension", n},
              {"order", spec.toJson()},
              {"semifield", wf},
              {"semivector", sv},
              {"compatibility", comp},
              {"holds", holdsAll(wf) && holdsAll(sv) && comp.at("SV8").at("holds").get<bool>() &&
                            comp.at("SV9").at("holds").get<bool>()}};
}

json classifyDocument(const json& aggregator, const AdmissibleOrderSpec& spec,
                      std::optional<std::size_t> arity, const SamplingConfig& cfg) {
  enforceTrialGuard(cfg.samples);
  if (!arity) {
    if (aggregator.contains("omega") && aggregator.at("omega").is_array()) {
      arity = aggregator.at("omega").size();
    } else if (aggregator.contains("components") && aggregator.at("components").is_array() &&
               !aggregator.at("components").empty()) {
      const json& c0 = aggregator.at("components").front();
      for (const char* key : {"omega", "e"}) {
        if (c0.contains(key) && c0.at(key).is_array()) arity = c0.at(key).size();
      }
    }
  }
  if (!arity) throw ValidationError("cannot infer the arity; pass it explicitly", "arity");
  if (*arity > kMaxSide) throw ValidationError("arity must not exceed 64", "arity");
  const NDimAggregation f = makeNDimAggregation(aggregator, *arity, AdmissibleOrder(spec), cfg);
  return json{{"aggregator", f.descriptor()},
              {"order", spec.toJson()},
              {"arity", *arity},
              {"classification", toJson(classify(f, cfg))},
              {"idempotentIffAverage", toJson(checkIdempotentIffAverage(f, cfg))},
              {"warnings", f.warnings()}};
}

json catalogDocument() {
  const json tau{{"type", "permutation"}, {"description", "1-based scan order, length n"}};
  json orders = json::array({
      {{"kind", "LexTau"}, {"params", {{"tau", tau}}}},
      {{"kind", "WeightedLex"},
       {"params", {{"tau", tau}, {"omega", {{"type", "weights"}, {"length", "n"}}}}}},
      {{"kind", "AggLex"},
       {"params", {{"tau", tau}, {"agg", {{"type", "scalarAggregation"}, {"arity", "n"}}}}}},
  });
  const json omega_m{{"type", "weights"}, {"length", "m"}, {"default", "criterion weights"}};
  json aggregators = json::array({
      {{"name", "ndimWeightedAverage"}, {"params", {{"omega", omega_m}}}, {"symmetric", "iff uniform omega"}},
      {{"name", "ndimOWA"}, {"params", {{"omega", omega_m}}}, {"symmetric", true},
       {"requires", json::array({"SV8", "SV9"})}},
      {{"name", "lift"},
       {"params", {{"components", {{"type", "scalarAggregation[]"}, {"length", "n"},
                                    {"constraint", "A_1 <= ... <= A_n"}}}}}},
      {{"name", "orderMin"}, {"params", json::object()}},
      {{"name", "orderMax"}, {"params", json::object()}},
  });
  json scalars = json::array();
  const json scalar_params{{"pR", {{"r", "number > 0"}}},
                           {"weightedMin", {{"omega", "weights"}}},
                           {"weightedMax", {{"omega", "weights"}}},
                           {"weightedAverage", {{"omega", "weights"}}},
                           {"geometricMean", {{"omega", "weights"}}},
                           {"owa", {{"omega", "weights"}}},
                           {"maxExp", {{"e", "exponents > 0"}}},
                           {"min", json::object()},
                           {"max", json::object()},
                           {"mean", json::object()}};
  for (const std::string& name : scalarAggregationNames()) {
    scalars.push_back({{"name", name}, {"params", scalar_params.value(name, json::object())}});
  }
  return json{{"orders", orders}, {"aggregators", aggregators}, {"scalarAggregations", scalars}};
}

std::vector<Edit> parseEdits(const json& edits) {
  if (!edits.is_array()) throw ValidationError("expected an array of edits", "edits");
  std::vector<Edit> out;
  for (std::size_t i = 0; i < edits.size(); ++i) {
    try {
      out.push_back(edits[i].is_string() ? parseEdit(edits[i].get<std::string>())
                                         : parseEdit(edits[i]));
    } catch (const ValidationError& e) {
      throw ValidationError(e.message(), "edits[" + std::to_string(i) + "]");
    }
  }
  return out;
}

}  // namespace ndagg::app
