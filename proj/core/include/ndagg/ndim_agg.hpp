#pragma once

// m-ary n-dimensional aggregation functions L_n([0,1])^m → L_n([0,1]) with
// respect to an admissible order, and their classification.

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ndagg/interval.hpp"
#include "ndagg/orders.hpp"
#include "ndagg/report.hpp"
#include "ndagg/sampling.hpp"
#include "ndagg/scalar_agg.hpp"

namespace ndagg {

class NDimAggregation {
 public:
  using Fn = std::function<NDimInterval(std::span<const NDimInterval>)>;

  // Checks the boundary conditions F(/0/,...,/0/) = /0/ and
  // F(/1/,...,/1/) = /1/ (within 1e-9, since decimal weights need not sum to
  // exactly 1 in binary64) and throws ContractViolation("boundary") if not.
  NDimAggregation(std::string name, std::size_t arity, AdmissibleOrder order,
                  nlohmann::json descriptor, Fn fn, std::vector<std::string> warnings = {});

  const std::string& name() const noexcept { return name_; }
  std::size_t arity() const noexcept { return arity_; }
  std::size_t dimension() const noexcept { return order_.dimension(); }
  const AdmissibleOrder& order() const noexcept { return order_; }
  const nlohmann::json& descriptor() const noexcept { return descriptor_; }
  // Contract caveats found at construction, e.g. a failed SV9 gate.
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  NDimInterval operator()(std::span<const NDimInterval> xs) const;
  NDimInterval operator()(std::initializer_list<NDimInterval> xs) const {
    return (*this)(std::span<const NDimInterval>(xs.begin(), xs.size()));
  }

 private:
  std::string name_;
  std::size_t arity_;
  AdmissibleOrder order_;
  nlohmann::json descriptor_;
  Fn fn_;
  std::vector<std::string> warnings_;
};

// The (SV8, SV9) verdict for an order, memoised per (spec, seed, samples).
OrderCompatibility orderGate(const AdmissibleOrder& order, const SamplingConfig& cfg = {});

// Ã_{A_1...A_n}(x_1..x_m) = (A_1(π_1(x_1),...,π_1(x_m)), ..., A_n(...)).
// Requires A_1 ≤ ... ≤ A_n; each adjacent pair is checked with dominates()
// at construction and a failure throws ContractViolation("dominance"). An
// unsorted result at evaluation throws ContractViolation("lift-sortedness").
NDimAggregation liftComponentwise(std::vector<ScalarAggregation> components,
                                  AdmissibleOrder order, const SamplingConfig& cfg = {});

// Σ⊕ w_j ⊙ x_(j) with x_(1) ⪰ x_(2) ⪰ ... under `order`. Construction runs
// the SV8/SV9 gate and throws ContractViolation naming the failed axiom.
NDimAggregation ndimOWA(AdmissibleOrder order, WeightingVector omega,
                        const SamplingConfig& cfg = {});

// Σ⊕ w_j ⊙ x_j folded left to right. A failed SV8/SV9 gate only adds a
// warning: the formula is still defined, its monotonicity is not guaranteed.
NDimAggregation ndimWeightedAverage(WeightingVector omega, AdmissibleOrder order,
                                    const SamplingConfig& cfg = {});

// ⋏ and ⋎ as m-ary functions.
NDimAggregation orderMinimum(AdmissibleOrder order, std::size_t arity);
NDimAggregation orderMaximum(AdmissibleOrder order, std::size_t arity);

// Builds from {"name":"ndimWeightedAverage","omega":[...]},
// {"name":"ndimOWA","omega":[...],"order":{...}}, {"name":"lift","components":[...]},
// {"name":"orderMin"} or {"name":"orderMax"}. An "order" inside the
// descriptor takes precedence over `order`.
NDimAggregation makeNDimAggregation(const nlohmann::json& descriptor, std::size_t arity,
                                    const AdmissibleOrder& order,
                                    const SamplingConfig& cfg = {});

std::vector<std::string> ndimAggregationNames();

struct Classification {
  CompatibilityReport conjunctive;
  CompatibilityReport disjunctive;
  CompatibilityReport average;
  // Holds when none of the three above held on the samples.
  CompatibilityReport mixed;
  CompatibilityReport idempotent;
  CompatibilityReport strict;
  CompatibilityReport internal;
  CompatibilityReport symmetric;
  CompatibilityReport monotone;

  std::vector<const CompatibilityReport*> all() const;
};

Classification classify(const NDimAggregation& f, const SamplingConfig& cfg = {});

// "idempotent-iff-average": holds when the idempotence verdict and the
// average-sandwich verdict agree. detail records both.
CompatibilityReport checkIdempotentIffAverage(const NDimAggregation& f,
                                              const SamplingConfig& cfg = {});

struct MwProperties {
  // Strict increase under ⪯_τ, demanded only where the partial sum z of the
  // untouched arguments has π_n(z) ≤ 1 − w_t.
  CompatibilityReport strict;
  CompatibilityReport symmetric;
  CompatibilityReport additive;
  // Additivity restricted to inputs where no component sum exceeds 1.
  CompatibilityReport additive_unsaturated;
  CompatibilityReport homogeneous;
};

MwProperties checkMwProperties(const WeightingVector& omega, const Permutation& tau,
                               const SamplingConfig& cfg = {});

}  // namespace ndagg
