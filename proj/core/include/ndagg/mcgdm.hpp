#pragma once

// Multi-criteria group decision making over L_n([0,1]).
//
//   1. each expert k fills R^k (alternatives × criteria)
//   2. R*_ij = σ(R^1_ij, ..., R^n_ij)
//   3. strictly positive criterion weights ω
//   4. an admissible order ⪯ and an m-ary aggregation A with respect to it
//   5. s_i = A(R*_i1, ..., R*_im)
//   6. rank the alternatives by s_i under ⪯

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "ndagg/interval.hpp"
#include "ndagg/ndim_agg.hpp"
#include "ndagg/orders.hpp"
#include "ndagg/report.hpp"
#include "ndagg/sampling.hpp"

namespace ndagg {

using Cube = std::vector<std::vector<std::vector<double>>>;  // [expert][alternative][criterion]

struct DecisionProblem {
  std::vector<std::string> alternatives;
  std::vector<std::string> criteria;
  std::vector<std::string> experts;
  Cube evaluations;
  std::optional<WeightingVector> weights;
  std::optional<AdmissibleOrderSpec> order;
  // An NDimAggregation descriptor. "omega" may be omitted for
  // ndimWeightedAverage and ndimOWA, in which case the criterion weights
  // are used. Absent means ndimWeightedAverage.
  std::optional<nlohmann::json> aggregator;

  std::size_t p() const noexcept { return alternatives.size(); }
  std::size_t m() const noexcept { return criteria.size(); }
  std::size_t n() const noexcept { return experts.size(); }

  // Parses the problem document. Labels default to a1.., C1.., e1.. when
  // absent. With require_method false, weights, order and aggregator may be
  // missing (enough for the collective matrix). Errors carry a field path
  // such as "evaluations[2][1]".
  static DecisionProblem fromJson(const nlohmann::json& j, bool require_method = true);
  nlohmann::json toJson() const;

  // Shape and range invariants: p, m ≥ 2, n ≥ 1, a full cube in [0,1],
  // strictly positive weights of length m, an order of dimension n.
  void validate(bool require_method = true) const;
};

// One expert matrix from CSV text: a header row of criterion labels (an
// optional leading cell for the alternative column), then one row per
// alternative. Rows whose first cell is not a number name the alternative.
struct ExpertSheet {
  std::vector<std::string> criteria;
  std::vector<std::string> alternatives;  // empty when rows are unlabelled
  std::vector<std::vector<double>> values;
};

ExpertSheet parseExpertCsv(const std::string& text);

// Stacks per-expert sheets into a cube. Every sheet must share the criteria
// and the number of alternatives.
DecisionProblem assembleFromSheets(const std::vector<std::string>& expert_labels,
                                   const std::vector<ExpertSheet>& sheets);

struct CollectiveMatrix {
  std::vector<std::vector<NDimInterval>> entries;  // p × m, each of dimension n
};

CollectiveMatrix buildCollective(const DecisionProblem& problem);

std::vector<NDimInterval> scoreAlternatives(const CollectiveMatrix& collective,
                                            const NDimAggregation& aggregator);

struct Ranking {
  std::vector<NDimInterval> scores;
  // Alternative indices from order-least to order-greatest; equal scores are
  // listed by index.
  std::vector<std::size_t> worst_to_best;
  std::vector<std::size_t> best_to_worst;
  // Groups (of two or more) of alternatives with identical score tuples.
  std::vector<std::vector<std::size_t>> ties;
};

Ranking rank(std::vector<NDimInterval> scores, const AdmissibleOrder& order);

// "a2 < a1 < a3", with "=" inside tie groups.
std::string describeRanking(const Ranking& r, const std::vector<std::string>& labels);

struct Annotation {
  std::string code;
  std::string message;
  nlohmann::json detail;
};

struct PipelineResult {
  CollectiveMatrix collective;
  Ranking ranking;
  std::vector<Annotation> annotations;
  nlohmann::json aggregator;  // the resolved descriptor
  nlohmann::json order;
};

// Resolves the aggregator descriptor against the problem (filling omega
// from the criterion weights where absent) and constructs it. Gate failures
// surface as ContractViolation.
NDimAggregation buildAggregator(const DecisionProblem& problem,
                                const SamplingConfig& cfg = {});

PipelineResult runPipeline(const DecisionProblem& problem, const SamplingConfig& cfg = {});

// FNV-1a over the compact dump of {"evaluations", "weights"}.
std::uint64_t problemFingerprint(const DecisionProblem& problem);

// The worked energy-policy example bundled with the library.
namespace energy {
DecisionProblem problem();
CollectiveMatrix collective();
// Scores as recomputed from the collective matrix.
std::vector<NDimInterval> correctedScores();
// Scores as printed in the worked example, two of them carrying arithmetic
// slips.
std::vector<NDimInterval> printedScores();
std::uint64_t fingerprint();
}  // namespace energy

// Principle checks. Each reports "increasingness", "domination" or
// "indexation-insensitivity" and keeps the first witness.

// Raises one cube entry at a time and demands that no alternative previously
// ranked strictly below the touched one ends up above or level with it.
CompatibilityReport checkIncreasingness(const DecisionProblem& problem, std::size_t trials,
                                        const SamplingConfig& cfg = {});

// Permutes experts, and alternatives and criteria (co-permuting criterion
// weights and a weighted average's omega), then demands the same ranking up
// to relabelling. Pairs whose scores agree within 1e-12 are not compared,
// because a permuted fold may round differently.
CompatibilityReport checkIndexationInsensitivity(const DecisionProblem& problem,
                                                 std::size_t trials,
                                                 const SamplingConfig& cfg = {});

enum class AggregatorFamily { WeightedAverage, OWA };

// Random problems with dyadic entries and weights, p, m, n in [2, max_size].
// WeightedAverage problems use a random τ; OWA problems use τ = Id, the only
// LexTau order its construction gate admits.
class ProblemGenerator {
 public:
  ProblemGenerator(AggregatorFamily family, std::size_t max_size = 6)
      : family_(family), max_size_(max_size) {}

  DecisionProblem operator()(Sampler& s) const;
  AggregatorFamily family() const noexcept { return family_; }

 private:
  AggregatorFamily family_;
  std::size_t max_size_;
};

// For each trial, draws a problem, makes alternative i dominate alternative j
// for every expert and criterion, and demands s_j ⪯ s_i.
CompatibilityReport checkDomination(const ProblemGenerator& generator, std::size_t trials,
                                    const SamplingConfig& cfg = {});

// All three principles on `problems` random instances.
struct PrincipleSuite {
  CompatibilityReport increasingness;
  CompatibilityReport domination;
  CompatibilityReport indexation;
};

PrincipleSuite checkPrinciples(const ProblemGenerator& generator, std::size_t problems,
                               std::size_t trials_per_problem, const SamplingConfig& cfg = {});

struct CubeEdit {
  std::size_t expert, alternative, criterion;  // 1-based
  double value;
};
struct WeightsEdit {
  std::vector<double> weights;  // renormalized; empty means uniform
};
struct OrderEdit {
  nlohmann::json order;
};
using Edit = std::variant<CubeEdit, WeightsEdit, OrderEdit>;

// "expert=2,alt=4,crit=3,value=0.1", "weights=1;1;2;1", "weights=uniform",
// "tau=3;2;4;1;5" (LexTau), or the JSON forms {"expert":..,"alt":..,
// "crit":..,"value":..}, {"weights":[..] | "uniform"}, {"order":{..}}.
Edit parseEdit(const std::string& text);
Edit parseEdit(const nlohmann::json& j);
DecisionProblem applyEdits(DecisionProblem problem, const std::vector<Edit>& edits);

struct CellChange {
  std::size_t alternative, criterion;  // 0-based
  NDimInterval before, after;
};
struct PairFlip {
  std::size_t a, b;  // 0-based, a < b
  std::string before, after;  // "<", "=", ">" for s_a versus s_b
};
struct SensitivityReport {
  PipelineResult baseline;
  PipelineResult edited;
  std::vector<CellChange> collective_changes;
  std::vector<std::vector<double>> score_deltas;  // edited − baseline, per alternative
  std::vector<PairFlip> flips;
  bool ranking_changed = false;
};

SensitivityReport sensitivity(const DecisionProblem& problem, const std::vector<Edit>& edits,
                              const SamplingConfig& cfg = {});

}  // namespace ndagg
