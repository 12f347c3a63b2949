#include "ndagg/mcgdm.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "ndagg/error.hpp"

namespace ndagg {

using nlohmann::json;

namespace {

std::string at(const std::string& base, std::size_t i) {
  return base + "[" + std::to_string(i) + "]";
}

std::vector<std::string> defaultLabels(const char* prefix, std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= count; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

std::vector<std::string> labelsFrom(const json& j, const char* key) {
  const json& arr = j.at(key);
  if (!arr.is_array()) throw ValidationError("expected an array of labels", key);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_string()) throw ValidationError("expected a string", at(key, i));
    out.push_back(arr[i].get<std::string>());
  }
  return out;
}

Cube cubeFrom(const json& j) {
  if (!j.is_array()) throw ValidationError("expected an array of expert matrices", "evaluations");
  Cube cube;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string pk = at("evaluations", k);
    if (!j[k].is_array()) throw ValidationError("expected a matrix", pk);
    auto& mat = cube.emplace_back();
    for (std::size_t i = 0; i < j[k].size(); ++i) {
      const std::string pi = at(pk, i);
      if (!j[k][i].is_array()) throw ValidationError("expected a row", pi);
      auto& row = mat.emplace_back();
      for (std::size_t c = 0; c < j[k][i].size(); ++c) {
        if (!j[k][i][c].is_number()) throw ValidationError("expected a number", at(pi, c));
        row.push_back(j[k][i][c].get<double>());
      }
    }
  }
  return cube;
}

void fnvStep(std::uint64_t& h, unsigned char byte) {
  h ^= byte;
  h *= 1099511628211ULL;
}

int relation(const AdmissibleOrder& o, const NDimInterval& a, const NDimInterval& b) {
  const auto c = o.compare(a, b);
  return c < 0 ? -1 : c > 0 ? 1 : 0;
}

const char* relationSymbol(int r) { return r < 0 ? "<" : r > 0 ? ">" : "="; }

double deviation(const NDimInterval& a, const NDimInterval& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.dimension(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

CompatibilityReport blank(std::string axiom, const SamplingConfig& cfg) {
  CompatibilityReport r;
  r.axiom = std::move(axiom);
  r.seed = cfg.seed;
  return r;
}

void absorb(CompatibilityReport& into, const CompatibilityReport& from) {
  into.samples += from.samples;
  into.max_deviation = std::max(into.max_deviation, from.max_deviation);
  if (!from.holds) {
    if (into.holds) into.witness = from.witness;
    into.holds = false;
    into.violations += from.violations;
  }
}

}  // namespace

DecisionProblem DecisionProblem::fromJson(const json& j, bool require_method) {
  if (!j.is_object()) throw ValidationError("a decision problem must be a JSON object");
  if (!j.contains("evaluations")) throw ValidationError("missing", "evaluations");
  DecisionProblem p;
  p.evaluations = cubeFrom(j.at("evaluations"));

  const std::size_t n = p.evaluations.size();
  const std::size_t rows = n ? p.evaluations[0].size() : 0;
  const std::size_t cols = rows ? p.evaluations[0][0].size() : 0;
  p.experts = j.contains("experts") ? labelsFrom(j, "experts") : defaultLabels("e", n);
  p.alternatives =
      j.contains("alternatives") ? labelsFrom(j, "alternatives") : defaultLabels("a", rows);
  p.criteria = j.contains("criteria") ? labelsFrom(j, "criteria") : defaultLabels("C", cols);

  if (j.contains("weights") && !j.at("weights").is_null()) {
    const json& w = j.at("weights");
    if (!w.is_array()) throw ValidationError("expected an array", "weights");
    std::vector<double> v;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!w[i].is_number()) throw ValidationError("expected a number", at("weights", i));
      v.push_back(w[i].get<double>());
    }
    try {
      p.weights = WeightingVector(std::move(v));
    } catch (const ValidationError& e) {
      throw e.within("weights");
    }
  }
  if (j.contains("order") && !j.at("order").is_null()) {
    try {
      p.order = AdmissibleOrderSpec::fromJson(j.at("order"), n ? std::optional(n) : std::nullopt);
    } catch (const ValidationError& e) {
      throw e.within("order");
    }
  }
  if (j.contains("aggregator") && !j.at("aggregator").is_null()) {
    if (!j.at("aggregator").is_object()) {
      throw ValidationError("expected an object", "aggregator");
    }
    p.aggregator = j.at("aggregator");
  }
  p.validate(require_method);
  return p;
}

json DecisionProblem::toJson() const {
  json j{{"alternatives", alternatives},
         {"criteria", criteria},
         {"experts", experts},
         {"evaluations", evaluations}};
  if (weights) j["weights"] = std::vector<double>(weights->values().begin(), weights->values().end());
  if (order) j["order"] = order->toJson();
  if (aggregator) j["aggregator"] = *aggregator;
  return j;
}

void DecisionProblem::validate(bool require_method) const {
  if (experts.empty()) throw ValidationError("at least one expert is required", "evaluations");
  if (alternatives.size() < 2) {
    throw ValidationError("at least two alternatives are required", "alternatives");
  }
  if (criteria.size() < 2) throw ValidationError("at least two criteria are required", "criteria");
  if (evaluations.size() != n()) {
    throw ValidationError("expected " + std::to_string(n()) + " expert matrices (one per expert)",
                          "evaluations");
  }
  for (std::size_t k = 0; k < n(); ++k) {
    const std::string pk = at("evaluations", k);
    if (evaluations[k].size() != p()) {
      throw ValidationError("expected " + std::to_string(p()) + " rows (one per alternative)", pk);
    }
    for (std::size_t i = 0; i < p(); ++i) {
      const std::string pi = at(pk, i);
      if (evaluations[k][i].size() != m()) {
        throw ValidationError("expected " + std::to_string(m()) + " values (one per criterion)",
                              pi);
      }
      for (std::size_t c = 0; c < m(); ++c) {
        const double v = evaluations[k][i][c];
        if (!(v >= 0.0 && v <= 1.0)) {
          throw ValidationError("evaluation must lie in [0,1]", at(pi, c));
        }
      }
    }
  }
  if (weights) {
    if (weights->size() != m()) {
      throw ValidationError("expected " + std::to_string(m()) + " weights (one per criterion)",
                            "weights");
    }
    if (!weights->strictlyPositive()) {
      throw ValidationError("criterion weights must be strictly positive", "weights");
    }
  } else if (require_method) {
    throw ValidationError("missing", "weights");
  }
  if (order) {
    if (order->dimension() != n()) {
      throw ValidationError("order dimension must equal the number of experts (" +
                                std::to_string(n()) + ")",
                            "order");
    }
  } else if (require_method) {
    throw ValidationError("missing", "order");
  }
  if (aggregator && (!aggregator->contains("name") || !aggregator->at("name").is_string())) {
    throw ValidationError("aggregator needs a string 'name'", "aggregator.name");
  }
}

ExpertSheet parseExpertCsv(const std::string& text) {
  auto split = [](const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) {
      const auto b = cell.find_first_not_of(" \t\r");
      const auto e = cell.find_last_not_of(" \t\r");
      cells.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
    }
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
  };
  auto number = [](const std::string& s, double& out) {
    if (s.empty()) return false;
    char* end = nullptr;
    out = std::strtod(s.c_str(), &end);
    return end == s.c_str() + s.size();
  };

  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    rows.push_back(split(line));
  }
  if (rows.size() < 2) throw ValidationError("CSV needs a header row and at least one data row");

  ExpertSheet sheet;
  const auto& header = rows.front();
  double probe = 0.0;
  const bool labelled = !number(rows[1].front(), probe);
  const std::size_t width = rows[1].size() - (labelled ? 1 : 0);
  if (header.size() == width + 1) {
    sheet.criteria.assign(header.begin() + 1, header.end());
  } else if (header.size() == width) {
    sheet.criteria = header;
  } else {
    throw ValidationError("header has " + std::to_string(header.size()) +
                              " cells for rows of " + std::to_string(width) + " values",
                          "row 1");
  }
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const std::string path = "row " + std::to_string(r + 1);
    const auto& cells = rows[r];
    if (cells.size() != width + (labelled ? 1 : 0)) {
      throw ValidationError("expected " + std::to_string(width) + " values", path);
    }
    if (labelled) sheet.alternatives.push_back(cells.front());
    auto& values = sheet.values.emplace_back();
    for (std::size_t c = labelled ? 1 : 0; c < cells.size(); ++c) {
      double v = 0.0;
      if (!number(cells[c], v)) {
        throw ValidationError("'" + cells[c] + "' is not a number",
                              path + ", column " + std::to_string(c + 1));
      }
      values.push_back(v);
    }
  }
  return sheet;
}

DecisionProblem assembleFromSheets(const std::vector<std::string>& expert_labels,
                                   const std::vector<ExpertSheet>& sheets) {
  if (sheets.empty()) throw ValidationError("no expert sheets");
  if (expert_labels.size() != sheets.size()) {
    throw ValidationError("one label per expert sheet is required", "experts");
  }
  DecisionProblem p;
  p.experts = expert_labels;
  p.criteria = sheets.front().criteria;
  for (std::size_t k = 0; k < sheets.size(); ++k) {
    const ExpertSheet& s = sheets[k];
    if (s.criteria != p.criteria) {
      throw ValidationError("criteria differ from the first sheet", "sheet " + std::to_string(k + 1));
    }
    if (s.values.size() != sheets.front().values.size()) {
      throw ValidationError("number of alternatives differs from the first sheet",
                            "sheet " + std::to_string(k + 1));
    }
    if (p.alternatives.empty() && !s.alternatives.empty()) p.alternatives = s.alternatives;
    p.evaluations.push_back(s.values);
  }
  if (p.alternatives.empty()) p.alternatives = defaultLabels("a", sheets.front().values.size());
  p.validate(false);
  return p;
}

CollectiveMatrix buildCollective(const DecisionProblem& problem) {
  problem.validate(false);
  CollectiveMatrix c;
  c.entries.assign(problem.p(), std::vector<NDimInterval>(problem.m()));
  std::vector<double> column(problem.n());
  for (std::size_t i = 0; i < problem.p(); ++i) {
    for (std::size_t j = 0; j < problem.m(); ++j) {
      for (std::size_t k = 0; k < problem.n(); ++k) column[k] = problem.evaluations[k][i][j];
      c.entries[i][j] = sigma(column);
    }
  }
  return c;
}

std::vector<NDimInterval> scoreAlternatives(const CollectiveMatrix& collective,
                                            const NDimAggregation& aggregator) {
  std::vector<NDimInterval> scores;
  scores.reserve(collective.entries.size());
  for (const auto& row : collective.entries) scores.push_back(aggregator(row));
  return scores;
}

Ranking rank(std::vector<NDimInterval> scores, const AdmissibleOrder& order) {
  Ranking r;
  r.scores = std::move(scores);
  r.worst_to_best.resize(r.scores.size());
  for (std::size_t i = 0; i < r.scores.size(); ++i) r.worst_to_best[i] = i;
  std::stable_sort(r.worst_to_best.begin(), r.worst_to_best.end(),
                   [&](std::size_t a, std::size_t b) { return order.less(r.scores[a], r.scores[b]); });
  r.best_to_worst.assign(r.worst_to_best.rbegin(), r.worst_to_best.rend());
  // Keep index order inside each tie group in both listings.
  for (std::size_t a = 0; a < r.best_to_worst.size();) {
    std::size_t b = a + 1;
    while (b < r.best_to_worst.size() &&
           r.scores[r.best_to_worst[b]] == r.scores[r.best_to_worst[a]]) {
      ++b;
    }
    std::sort(r.best_to_worst.begin() + a, r.best_to_worst.begin() + b);
    a = b;
  }
  for (std::size_t a = 0; a < r.worst_to_best.size();) {
    std::size_t b = a + 1;
    while (b < r.worst_to_best.size() &&
           r.scores[r.worst_to_best[b]] == r.scores[r.worst_to_best[a]]) {
      ++b;
    }
    if (b - a > 1) {
      r.ties.emplace_back(r.worst_to_best.begin() + a, r.worst_to_best.begin() + b);
    }
    a = b;
  }
  return r;
}

std::string describeRanking(const Ranking& r, const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t k = 0; k < r.worst_to_best.size(); ++k) {
    const std::size_t i = r.worst_to_best[k];
    if (k > 0) out += r.scores[i] == r.scores[r.worst_to_best[k - 1]] ? " = " : " < ";
    out += i < labels.size() ? labels[i] : "a" + std::to_string(i + 1);
  }
  return out;
}

NDimAggregation buildAggregator(const DecisionProblem& problem, const SamplingConfig& cfg) {
  if (!problem.order) throw ValidationError("missing", "order");
  json desc = problem.aggregator.value_or(json{{"name", "ndimWeightedAverage"}});
  const std::string name = desc.value("name", "");
  if ((name == "ndimWeightedAverage" || name == "ndimOWA") && !desc.contains("omega")) {
    if (!problem.weights) throw ValidationError("missing", "weights");
    desc["omega"] = std::vector<double>(problem.weights->values().begin(),
                                        problem.weights->values().end());
  }
  try {
    return makeNDimAggregation(desc, problem.m(), AdmissibleOrder(*problem.order), cfg);
  } catch (const ValidationError& e) {
    throw e.within("aggregator");
  }
}

std::uint64_t problemFingerprint(const DecisionProblem& problem) {
  json j{{"evaluations", problem.evaluations}, {"weights", nullptr}};
  if (problem.weights) {
    j["weights"] = std::vector<double>(problem.weights->values().begin(),
                                       problem.weights->values().end());
  }
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : j.dump()) fnvStep(h, c);
  return h;
}

PipelineResult runPipeline(const DecisionProblem& problem, const SamplingConfig& cfg) {
  problem.validate(true);
  PipelineResult out;
  out.collective = buildCollective(problem);
  const NDimAggregation agg = buildAggregator(problem, cfg);
  out.aggregator = agg.descriptor();
  out.order = problem.order->toJson();
  out.ranking = rank(scoreAlternatives(out.collective, agg), agg.order());

  for (const std::string& w : agg.warnings()) {
    out.annotations.push_back({"order-gate", w, json{{"axiom", w.substr(0, w.find(':'))}}});
  }
  if (agg.name() == "ndimWeightedAverage") {
    const auto& omega = out.aggregator.at("omega");
    const double first = omega.front().get<double>();
    bool uniform = true;
    for (const auto& w : omega) uniform = uniform && std::abs(w.get<double>() - first) <= 1e-12;
    if (!uniform) {
      out.annotations.push_back(
          {"not-commutative",
           "the weighted average with non-uniform weights is not symmetric, so the "
           "aggregation is not commutative; criteria permutations must carry their weights",
           json{{"omega", omega}}});
    }
  }
  if (agg.name() == "ndimWeightedAverage" && problemFingerprint(problem) == energy::fingerprint() &&
      problem.weights &&
      out.aggregator.at("omega") == json(std::vector<double>(problem.weights->values().begin(),
                                                             problem.weights->values().end()))) {
    const auto printed = energy::printedScores();
    const Ranking printed_ranking = rank(printed, agg.order());
    json detail;
    detail["printedScores"] = {{problem.alternatives[1], printed[1].components()},
                               {problem.alternatives[3], printed[3].components()}};
    detail["computedScores"] = {
        {problem.alternatives[1], out.ranking.scores[1].components()},
        {problem.alternatives[3], out.ranking.scores[3].components()}};
    detail["printedRanking"] = describeRanking(printed_ranking, problem.alternatives);
    detail["computedRanking"] = describeRanking(out.ranking, problem.alternatives);
    out.annotations.push_back(
        {"erratum",
         "the printed worked example lists s_2 with third component 0.50736 (it uses "
         "0.2474*0.8 where 0.2474*0.6 belongs) and s_4 starting (0.2859, 0.30931); "
         "the scores here are recomputed from the collective matrix",
         std::move(detail)});
  }
  return out;
}

namespace energy {

namespace {
const Cube kCube = {
    {{.4, .7, .2, .3}, {.5, .9, .1, .4}, {.6, .6, .5, .4}, {.8, .7, .8, .6}, {.6, .4, .7, .7}},
    {{.5, .7, .5, .5}, {.5, .5, .1, .4}, {.7, .6, .3, .6}, {.7, .2, .8, .8}, {.9, .6, .8, .3}},
    {{.4, .8, .2, .9}, {.3, .7, .6, .7}, {.7, .6, .5, .4}, {.4, .4, .1, .8}, {.1, .6, .7, .6}},
    {{.3, .9, .4, .3}, {.3, .2, .8, .3}, {.7, .9, .3, .6}, {.8, .4, .8, .9}, {.3, .8, .9, .9}},
    {{.5, .1, .5, .6}, {.3, .6, .5, .7}, {.6, .6, .7, .6}, {.3, .7, .1, .6}, {.7, .7, .8, .6}},
};
}  // namespace

DecisionProblem problem() {
  DecisionProblem p;
  p.alternatives = defaultLabels("a", 5);
  p.criteria = defaultLabels("C", 4);
  p.experts = defaultLabels("e", 5);
  p.evaluations = kCube;
  p.weights = WeightingVector({0.2341, 0.2474, 0.3181, 0.2004});
  const long long tau[] = {3, 2, 4, 1, 5};
  p.order = AdmissibleOrderSpec::lexTau(Permutation::fromOneBased(tau));
  p.aggregator = json{{"name", "ndimWeightedAverage"}};
  return p;
}

CollectiveMatrix collective() {
  return {{
      {{0.3, 0.4, 0.4, 0.5, 0.5}, {0.1, 0.7, 0.7, 0.8, 0.9}, {0.2, 0.2, 0.4, 0.5, 0.5},
       {0.3, 0.3, 0.5, 0.6, 0.9}},
      {{0.3, 0.3, 0.3, 0.5, 0.5}, {0.2, 0.5, 0.6, 0.7, 0.9}, {0.1, 0.1, 0.5, 0.6, 0.8},
       {0.3, 0.4, 0.4, 0.7, 0.7}},
      {{0.6, 0.6, 0.7, 0.7, 0.7}, {0.6, 0.6, 0.6, 0.6, 0.9}, {0.3, 0.3, 0.5, 0.5, 0.7},
       {0.4, 0.4, 0.6, 0.6, 0.6}},
      {{0.3, 0.4, 0.7, 0.8, 0.8}, {0.2, 0.4, 0.4, 0.7, 0.7}, {0.1, 0.1, 0.8, 0.8, 0.8},
       {0.6, 0.6, 0.8, 0.8, 0.9}},
      {{0.1, 0.3, 0.6, 0.7, 0.9}, {0.4, 0.6, 0.6, 0.7, 0.8}, {0.7, 0.7, 0.8, 0.8, 0.9},
       {0.3, 0.6, 0.6, 0.7, 0.9}},
  }};
}

std::vector<NDimInterval> correctedScores() {
  return {{0.21871, 0.39056, 0.49426, 0.59426, 0.67912},
          {0.21164, 0.3059, 0.45788, 0.62137, 0.73447},
          {0.46449, 0.46449, 0.5916, 0.5916, 0.72944},
          {0.27176, 0.34465, 0.67763, 0.77526, 0.7953},
          {0.40516, 0.56158, 0.66362, 0.73181, 0.87526}};
}

std::vector<NDimInterval> printedScores() {
  return {{0.21871, 0.39056, 0.49426, 0.59426, 0.67912},
          {0.21164, 0.3059, 0.50736, 0.62137, 0.73447},
          {0.46449, 0.46449, 0.5916, 0.5916, 0.72944},
          {0.2859, 0.30931, 0.67763, 0.77526, 0.7953},
          {0.40516, 0.56158, 0.66362, 0.73181, 0.87526}};
}

std::uint64_t fingerprint() {
  static const std::uint64_t h = problemFingerprint(problem());
  return h;
}

}  // namespace energy

CompatibilityReport checkIncreasingness(const DecisionProblem& problem, std::size_t trials,
                                        const SamplingConfig& cfg) {
  CompatibilityReport rep = blank("increasingness", cfg);
  const PipelineResult base = runPipeline(problem, cfg);
  const AdmissibleOrder order(*problem.order);
  Sampler s(cfg.seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t k = s.index(problem.n()), i = s.index(problem.p()), j = s.index(problem.m());
    const double before = problem.evaluations[k][i][j];
    const double after = std::min(1.0, before + (1.0 - before) * s.unit());
    DecisionProblem bumped = problem;
    bumped.evaluations[k][i][j] = after;
    const PipelineResult res = runPipeline(bumped, cfg);
    ++rep.samples;

    const auto& s0 = base.ranking.scores;
    const auto& s1 = res.ranking.scores;
    for (std::size_t a = 0; a < problem.p(); ++a) {
      if (a == i || !order.less(s0[a], s0[i]) || order.less(s1[a], s1[i])) continue;
      Witness w;
      w.add("expert", static_cast<double>(k + 1))
          .add("alternative", static_cast<double>(i + 1))
          .add("criterion", static_cast<double>(j + 1))
          .add("before", before)
          .add("after", after)
          .add("other", static_cast<double>(a + 1))
          .add("s_i", s0[i])
          .add("s_i'", s1[i])
          .add("s_other", s0[a])
          .add("s_other'", s1[a]);
      w.note = "an alternative ranked strictly below the raised one no longer is";
      rep.fail(std::move(w));
      break;
    }
  }
  return rep;
}

namespace {

std::vector<std::size_t> randomPermutation(Sampler& s, std::size_t n) {
  const Permutation p = s.permutation(n);
  return {p.zeroBased().begin(), p.zeroBased().end()};
}

}  // namespace

CompatibilityReport checkIndexationInsensitivity(const DecisionProblem& problem,
                                                 std::size_t trials,
                                                 const SamplingConfig& cfg) {
  CompatibilityReport rep = blank("indexation-insensitivity", cfg);
  const PipelineResult base = runPipeline(problem, cfg);
  const AdmissibleOrder order(*problem.order);
  const std::string agg_name =
      problem.aggregator ? problem.aggregator->value("name", "") : "ndimWeightedAverage";
  // A lift may weight criteria inside its components, which a criteria
  // permutation cannot carry along.
  const bool permute_criteria = agg_name != "lift";
  Sampler s(cfg.seed);

  for (std::size_t t = 0; t < trials; ++t) {
    const auto rn = randomPermutation(s, problem.n());
    const auto rp = randomPermutation(s, problem.p());
    std::vector<std::size_t> rm(problem.m());
    for (std::size_t j = 0; j < rm.size(); ++j) rm[j] = j;
    if (permute_criteria) rm = randomPermutation(s, problem.m());

    DecisionProblem q = problem;
    for (std::size_t k = 0; k < problem.n(); ++k) {
      q.experts[k] = problem.experts[rn[k]];
      for (std::size_t i = 0; i < problem.p(); ++i) {
        for (std::size_t j = 0; j < problem.m(); ++j) {
          q.evaluations[k][i][j] = problem.evaluations[rn[k]][rp[i]][rm[j]];
        }
      }
    }
    for (std::size_t i = 0; i < problem.p(); ++i) q.alternatives[i] = problem.alternatives[rp[i]];
    for (std::size_t j = 0; j < problem.m(); ++j) q.criteria[j] = problem.criteria[rm[j]];
    if (problem.weights) {
      std::vector<double> w(problem.m());
      for (std::size_t j = 0; j < problem.m(); ++j) w[j] = (*problem.weights)[rm[j]];
      q.weights = WeightingVector(std::move(w));
    }
    if (agg_name == "ndimWeightedAverage" && q.aggregator && q.aggregator->contains("omega")) {
      const json& omega = problem.aggregator->at("omega");
      json permuted = json::array();
      for (std::size_t j = 0; j < problem.m(); ++j) permuted.push_back(omega[rm[j]]);
      (*q.aggregator)["omega"] = permuted;
    }

    const PipelineResult res = runPipeline(q, cfg);
    ++rep.samples;
    // Alternative rp[i'] of the original sits at position i' in q.
    std::vector<std::size_t> pos(problem.p());
    for (std::size_t i = 0; i < problem.p(); ++i) pos[rp[i]] = i;

    const auto& s0 = base.ranking.scores;
    const auto& s1 = res.ranking.scores;
    for (std::size_t a = 0; a < problem.p(); ++a) {
      rep.max_deviation = std::max(rep.max_deviation, deviation(s0[a], s1[pos[a]]));
    }
    bool failed = false;
    for (std::size_t a = 0; a < problem.p() && !failed; ++a) {
      for (std::size_t b = a + 1; b < problem.p() && !failed; ++b) {
        if (deviation(s0[a], s0[b]) <= 1e-12) continue;
        const int r0 = relation(order, s0[a], s0[b]);
        const int r1 = relation(order, s1[pos[a]], s1[pos[b]]);
        if (r0 == r1) continue;
        Witness w;
        auto asDoubles = [](const std::vector<std::size_t>& v) {
          std::vector<double> out;
          for (std::size_t x : v) out.push_back(static_cast<double>(x + 1));
          return out;
        };
        w.add("rho_experts", asDoubles(rn))
            .add("rho_alternatives", asDoubles(rp))
            .add("rho_criteria", asDoubles(rm))
            .add("a", static_cast<double>(a + 1))
            .add("b", static_cast<double>(b + 1))
            .add("s_a", s0[a])
            .add("s_b", s0[b])
            .add("s_a'", s1[pos[a]])
            .add("s_b'", s1[pos[b]]);
        w.note = std::string("relation changed from ") + relationSymbol(r0) + " to " +
                 relationSymbol(r1);
        rep.fail(std::move(w));
        failed = true;
      }
    }
  }
  return rep;
}

DecisionProblem ProblemGenerator::operator()(Sampler& s) const {
  const std::size_t span = max_size_ > 2 ? max_size_ - 1 : 1;
  const std::size_t p = 2 + s.index(span), m = 2 + s.index(span), n = 2 + s.index(span);
  DecisionProblem q;
  q.alternatives = defaultLabels("a", p);
  q.criteria = defaultLabels("C", m);
  q.experts = defaultLabels("e", n);
  q.evaluations.assign(n, std::vector<std::vector<double>>(p, std::vector<double>(m)));
  for (auto& mat : q.evaluations) {
    for (auto& row : mat) {
      for (double& v : row) v = s.unit();
    }
  }
  q.weights = s.weights(m, true);
  if (family_ == AggregatorFamily::WeightedAverage) {
    q.order = AdmissibleOrderSpec::lexTau(s.permutation(n));
    q.aggregator = json{{"name", "ndimWeightedAverage"}};
  } else {
    q.order = AdmissibleOrderSpec::lexTau(Permutation::identity(n));
    const WeightingVector w = s.weights(m, false);
    q.aggregator = json{{"name", "ndimOWA"},
                        {"omega", std::vector<double>(w.values().begin(), w.values().end())}};
  }
  return q;
}

CompatibilityReport checkDomination(const ProblemGenerator& generator, std::size_t trials,
                                    const SamplingConfig& cfg) {
  CompatibilityReport rep = blank("domination", cfg);
  Sampler s(cfg.seed);
  for (std::size_t t = 0; t < trials; ++t) {
    DecisionProblem q = generator(s);
    const std::size_t i = s.index(q.p());
    std::size_t j = s.index(q.p() - 1);
    if (j >= i) ++j;
    const bool identical = s.coin(8);
    for (auto& mat : q.evaluations) {
      for (std::size_t c = 0; c < q.m(); ++c) {
        const double lift = identical || s.coin(4) ? 0.0 : s.upTo(0.25);
        mat[i][c] = std::min(1.0, mat[j][c] + lift);
      }
    }
    const PipelineResult res = runPipeline(q, cfg);
    const AdmissibleOrder order(*q.order);
    ++rep.samples;
    const auto& sc = res.ranking.scores;
    const bool ok = identical ? sc[i] == sc[j] : order.leq(sc[j], sc[i]);
    if (!ok) {
      Witness w;
      w.add("dominating", static_cast<double>(i + 1))
          .add("dominated", static_cast<double>(j + 1))
          .add("s_dominating", sc[i])
          .add("s_dominated", sc[j]);
      w.note = "problem: " + q.toJson().dump();
      rep.fail(std::move(w));
    }
  }
  return rep;
}

PrincipleSuite checkPrinciples(const ProblemGenerator& generator, std::size_t problems,
                               std::size_t trials_per_problem, const SamplingConfig& cfg) {
  PrincipleSuite out{blank("increasingness", cfg), blank("domination", cfg),
                     blank("indexation-insensitivity", cfg)};
  Sampler s(cfg.seed);
  for (std::size_t k = 0; k < problems; ++k) {
    const DecisionProblem q = generator(s);
    const SamplingConfig sub{cfg.seed + 7919 * (k + 1), cfg.samples};
    absorb(out.increasingness, checkIncreasingness(q, trials_per_problem, sub));
    absorb(out.indexation, checkIndexationInsensitivity(q, trials_per_problem, sub));
  }
  absorb(out.domination, checkDomination(generator, problems, {cfg.seed ^ 0x9e3779b97f4a7c15ULL, cfg.samples}));
  return out;
}

namespace {

std::vector<std::string> splitOn(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) out.push_back(part);
  return out;
}

double parseNumber(const std::string& s, const std::string& path) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw ValidationError("'" + s + "' is not a number", path);
  }
  return v;
}

std::size_t parseIndex(const json& v, const std::string& path) {
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    throw ValidationError("expected a 1-based index", path);
  }
  return static_cast<std::size_t>(v.get<long long>());
}

}  // namespace

Edit parseEdit(const std::string& text) {
  const auto b = text.find_first_not_of(" \t");
  if (b != std::string::npos && text[b] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ValidationError(std::string("malformed edit JSON: ") + e.what(), "edit");
    }
    return parseEdit(j);
  }
  json j = json::object();
  for (const std::string& pair : splitOn(text, ',')) {
    const auto eq = pair.find('=');
    if (eq == std::string::npos) throw ValidationError("expected key=value in '" + pair + "'", "edit");
    std::string key = pair.substr(0, eq);
    const std::string value = pair.substr(eq + 1);
    if (key == "alternative") key = "alt";
    if (key == "criterion") key = "crit";
    if (key == "expert" || key == "alt" || key == "crit") {
      const double v = parseNumber(value, "edit." + key);
      if (v != std::floor(v)) throw ValidationError("expected an integer", "edit." + key);
      j[key] = static_cast<long long>(v);
    } else if (key == "value") {
      j[key] = parseNumber(value, "edit.value");
    } else if (key == "weights") {
      if (value == "uniform") {
        j[key] = "uniform";
      } else {
        json w = json::array();
        for (const auto& part : splitOn(value, ';')) w.push_back(parseNumber(part, "edit.weights"));
        j[key] = w;
      }
    } else if (key == "tau") {
      json t = json::array();
      for (const auto& part : splitOn(value, ';')) {
        const double v = parseNumber(part, "edit.tau");
        t.push_back(static_cast<long long>(v));
      }
      j["order"] = json{{"kind", "LexTau"}, {"tau", t}};
    } else {
      throw ValidationError("unknown edit key '" + key + "'", "edit");
    }
  }
  return parseEdit(j);
}

Edit parseEdit(const json& j) {
  if (!j.is_object()) throw ValidationError("an edit must be an object", "edit");
  if (j.contains("weights")) {
    const json& w = j.at("weights");
    if (w.is_string() && w.get<std::string>() == "uniform") return WeightsEdit{};
    if (!w.is_array() || w.empty()) {
      throw ValidationError("expected \"uniform\" or an array of numbers", "edit.weights");
    }
    WeightsEdit e;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!w[i].is_number()) throw ValidationError("expected a number", at("edit.weights", i));
      e.weights.push_back(w[i].get<double>());
    }
    return e;
  }
  if (j.contains("order")) {
    if (!j.at("order").is_object()) throw ValidationError("expected an object", "edit.order");
    return OrderEdit{j.at("order")};
  }
  for (const char* key : {"expert", "alt", "crit", "value"}) {
    if (!j.contains(key)) throw ValidationError(std::string("missing '") + key + "'", "edit");
  }
  if (!j.at("value").is_number()) throw ValidationError("expected a number", "edit.value");
  return CubeEdit{parseIndex(j.at("expert"), "edit.expert"), parseIndex(j.at("alt"), "edit.alt"),
                  parseIndex(j.at("crit"), "edit.crit"), j.at("value").get<double>()};
}

DecisionProblem applyEdits(DecisionProblem problem, const std::vector<Edit>& edits) {
  for (std::size_t e = 0; e < edits.size(); ++e) {
    const std::string path = at("edits", e);
    if (const auto* c = std::get_if<CubeEdit>(&edits[e])) {
      if (c->expert > problem.n() || c->alternative > problem.p() || c->criterion > problem.m() ||
          c->expert == 0 || c->alternative == 0 || c->criterion == 0) {
        throw ValidationError("cell (" + std::to_string(c->expert) + "," +
                                  std::to_string(c->alternative) + "," +
                                  std::to_string(c->criterion) + ") is outside the cube",
                              path);
      }
      if (!(c->value >= 0.0 && c->value <= 1.0)) {
        throw ValidationError("value must lie in [0,1]", path + ".value");
      }
      problem.evaluations[c->expert - 1][c->alternative - 1][c->criterion - 1] = c->value;
    } else if (const auto* w = std::get_if<WeightsEdit>(&edits[e])) {
      try {
        if (w->weights.empty()) {
          problem.weights = WeightingVector::uniform(problem.m());
        } else {
          if (w->weights.size() != problem.m()) {
            throw ValidationError("expected " + std::to_string(problem.m()) + " weights");
          }
          problem.weights = WeightingVector::normalize(w->weights);
        }
      } catch (const ValidationError& err) {
        throw err.within(path + ".weights");
      }
    } else {
      const auto& o = std::get<OrderEdit>(edits[e]);
      try {
        problem.order = AdmissibleOrderSpec::fromJson(o.order, problem.n());
      } catch (const ValidationError& err) {
        throw err.within(path + ".order");
      }
    }
  }
  problem.validate(true);
  return problem;
}

SensitivityReport sensitivity(const DecisionProblem& problem, const std::vector<Edit>& edits,
                              const SamplingConfig& cfg) {
  SensitivityReport r;
  r.baseline = runPipeline(problem, cfg);
  const DecisionProblem edited = applyEdits(problem, edits);
  r.edited = runPipeline(edited, cfg);

  for (std::size_t i = 0; i < problem.p(); ++i) {
    for (std::size_t j = 0; j < problem.m(); ++j) {
      const auto& before = r.baseline.collective.entries[i][j];
      const auto& after = r.edited.collective.entries[i][j];
      if (before != after) r.collective_changes.push_back({i, j, before, after});
    }
  }
  const auto& s0 = r.baseline.ranking.scores;
  const auto& s1 = r.edited.ranking.scores;
  for (std::size_t i = 0; i < problem.p(); ++i) {
    std::vector<double> d(s0[i].dimension());
    for (std::size_t c = 0; c < d.size(); ++c) d[c] = s1[i][c] - s0[i][c];
    r.score_deltas.push_back(std::move(d));
  }
  const AdmissibleOrder o0(*problem.order), o1(*edited.order);
  for (std::size_t a = 0; a < problem.p(); ++a) {
    for (std::size_t b = a + 1; b < problem.p(); ++b) {
      const int r0 = relation(o0, s0[a], s0[b]);
      const int r1 = relation(o1, s1[a], s1[b]);
      if (r0 != r1) r.flips.push_back({a, b, relationSymbol(r0), relationSymbol(r1)});
    }
  }
  r.ranking_changed = r.baseline.ranking.worst_to_best != r.edited.ranking.worst_to_best ||
                      r.baseline.ranking.ties != r.edited.ranking.ties;
  return r;
}

}  // namespace ndagg
