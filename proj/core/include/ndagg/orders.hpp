#pragma once

// Admissible total orders on L_n([0,1]): total orders that refine ≤_n^p.
//
//   LexTau       x ⪯_τ y      first differing coordinate in the scan order
//                             τ(1), τ(2), ... decides.
//   WeightedLex  x ⪯_τ^ω y    F_ω(x,y) < F_ω(y,x), ties broken by ⪯_τ.
//   AggLex       x ⪯_A^τ y    A(x) < A(y), ties broken by ⪯_τ.

#include <compare>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ndagg/interval.hpp"
#include "ndagg/report.hpp"
#include "ndagg/sampling.hpp"
#include "ndagg/scalar_agg.hpp"
#include "ndagg/semivector.hpp"

namespace ndagg {

enum class OrderKind { LexTau, WeightedLex, AggLex };

std::string toString(OrderKind kind);
OrderKind orderKindFromString(const std::string& s);

struct AdmissibleOrderSpec {
  OrderKind kind = OrderKind::LexTau;
  Permutation tau;
  std::optional<WeightingVector> omega;  // WeightedLex only
  std::optional<nlohmann::json> agg;     // AggLex only, a scalar registry key

  std::size_t dimension() const noexcept { return tau.size(); }

  static AdmissibleOrderSpec lexTau(Permutation tau);
  static AdmissibleOrderSpec weightedLex(WeightingVector omega, Permutation tau);
  static AdmissibleOrderSpec aggLex(nlohmann::json agg, Permutation tau);

  // Reads {"kind":..., "tau":[1-based], "omega":[...] | "agg":{...}}. A missing
  // tau defaults to the identity when `dimension` is known. Checks the
  // invariants tying tau, omega and agg to one dimension.
  static AdmissibleOrderSpec fromJson(const nlohmann::json& j,
                                      std::optional<std::size_t> dimension = {});
  nlohmann::json toJson() const;
};

std::strong_ordering compareLexTau(const Permutation& tau, const NDimInterval& x,
                                   const NDimInterval& y);
// F_ω(x,y) = Σ w_i max(0, x_i − y_i).
double fOmega(const WeightingVector& omega, const NDimInterval& x, const NDimInterval& y);
std::strong_ordering compareWeightedLex(const WeightingVector& omega, const Permutation& tau,
                                        const NDimInterval& x, const NDimInterval& y);
std::strong_ordering compareAggLex(const ScalarAggregation& agg, const Permutation& tau,
                                   const NDimInterval& x, const NDimInterval& y);

// A validated spec bound to its comparator. Cheap to copy.
class AdmissibleOrder {
 public:
  explicit AdmissibleOrder(AdmissibleOrderSpec spec);

  std::strong_ordering compare(const NDimInterval& x, const NDimInterval& y) const;
  bool leq(const NDimInterval& x, const NDimInterval& y) const { return compare(x, y) <= 0; }
  bool less(const NDimInterval& x, const NDimInterval& y) const { return compare(x, y) < 0; }

  std::size_t dimension() const noexcept { return spec_.dimension(); }
  const AdmissibleOrderSpec& spec() const noexcept { return spec_; }
  Comparator comparator() const;
  // Short human label such as "LexTau(3,2,4,1,5)".
  std::string label() const;

 private:
  AdmissibleOrderSpec spec_;
  std::shared_ptr<const ScalarAggregation> agg_;
};

// ⋏S and ⋎S: the order-least and order-greatest element of a nonempty set.
NDimInterval minUnder(const Comparator& order, std::span<const NDimInterval> set);
NDimInterval maxUnder(const Comparator& order, std::span<const NDimInterval> set);
NDimInterval minUnder(const AdmissibleOrder& order, std::span<const NDimInterval> set);
NDimInterval maxUnder(const AdmissibleOrder& order, std::span<const NDimInterval> set);

// Reports "totality" (compare(x,y) and compare(y,x) are mirror images),
// "antisymmetry" (equivalent only when identical), "transitivity" and
// "admissibility" (x ≤_n^p y ⇒ x ⪯ y). Comparable pairs are generated with
// Sampler::above, near ties with Sampler::perturb.
std::vector<CompatibilityReport> verifyAdmissibility(const Comparator& order,
                                                     std::size_t n,
                                                     const SamplingConfig& cfg = {});

// Trials worth running before random ones when testing SV8/SV9 for `spec`:
// the published witnesses, plus for LexTau with τ ≠ Id a constructed instance
// that saturates the first coordinate where τ descends.
std::vector<OrderTrial> compatibilityCandidates(const AdmissibleOrderSpec& spec);

OrderCompatibility checkOrderCompatibility(const AdmissibleOrder& order,
                                           const SamplingConfig& cfg = {});

}  // namespace ndagg
