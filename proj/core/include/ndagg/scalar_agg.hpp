#pragma once

// m-ary aggregation functions on [0,1] and checks of their properties.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ndagg/interval.hpp"
#include "ndagg/report.hpp"
#include "ndagg/sampling.hpp"

namespace ndagg {

// Properties an aggregation is known to have, as stated for its family.
// nullopt means "not claimed either way".
struct Capabilities {
  std::optional<bool> strict_on_ln;
  // Order k of homogeneity, or nullopt when it is not homogeneous.
  std::optional<double> homogeneous_order;
  std::optional<bool> internal;
};

// A function A: [0,1]^m → [0,1] with A(0..0) = 0, A(1..1) = 1 and
// componentwise monotonicity.
//
// Construction evaluates the boundary points and spot-checks monotonicity on
// 256 deterministic samples plus every edge of {0,1}^m for m ≤ 10. A boundary
// failure always throws. A monotonicity failure throws unless the aggregation
// is classification-exempt, in which case it is kept in
// registrationFindings().
class ScalarAggregation {
 public:
  using Fn = std::function<double(std::span<const double>)>;

  static constexpr double kBoundaryTolerance = 1e-9;

  ScalarAggregation(std::string name, std::size_t arity, nlohmann::json params,
                    Fn fn, Capabilities caps = {}, bool classification_exempt = false);

  const std::string& name() const noexcept { return name_; }
  std::size_t arity() const noexcept { return arity_; }
  // Registry descriptor, e.g. {"name":"maxExp","e":[1,2,3,4]}.
  const nlohmann::json& descriptor() const noexcept { return params_; }
  const Capabilities& capabilities() const noexcept { return caps_; }
  bool classificationExempt() const noexcept { return exempt_; }
  const std::vector<CompatibilityReport>& registrationFindings() const noexcept {
    return findings_;
  }

  // Validates the input length and range. Round-off within
  // kBoundaryTolerance of [0,1] is pulled back onto the interval.
  double operator()(std::span<const double> xs) const;
  double operator()(std::initializer_list<double> xs) const {
    return (*this)(std::span<const double>(xs.begin(), xs.size()));
  }
  // Unchecked evaluation for hot loops whose inputs are already validated.
  double raw(std::span<const double> xs) const { return fn_(xs); }

 private:
  std::string name_;
  std::size_t arity_;
  nlohmann::json params_;
  Fn fn_;
  Capabilities caps_;
  bool exempt_;
  std::vector<CompatibilityReport> findings_;
};

// (a) P^r(x) = (Π (x_i^r + 1) − 1) / (2^m − 1), r > 0.
ScalarAggregation pR(double r, std::size_t arity);
// (b)/(c) The input x_{j*} at the index minimising (maximising) w_i·x_i, ties
// to the smallest index. These can fail monotonicity for skewed ω and are
// classification-exempt.
ScalarAggregation weightedMin(const WeightingVector& omega);
ScalarAggregation weightedMax(const WeightingVector& omega);
// (d) M_ω(x) = Σ w_i x_i.
ScalarAggregation weightedAverage(const WeightingVector& omega);
// (e) G_ω(x) = Π x_i^{w_i}, with 0^0 = 1.
ScalarAggregation geometricMean(const WeightingVector& omega);
// (f) max_ē(x) = max x_i^{e_i}, all e_i > 0.
ScalarAggregation maxExp(std::vector<double> e);
// (g) OWA_ω(x) = Σ w_i x_(i) with x_(1) ≥ x_(2) ≥ ...
ScalarAggregation owa(const WeightingVector& omega);
ScalarAggregation minimum(std::size_t arity);
ScalarAggregation maximum(std::size_t arity);
ScalarAggregation arithmeticMean(std::size_t arity);

// Builds an aggregation from its registry descriptor. Names: pR, weightedMin,
// weightedMax, weightedAverage, geometricMean, maxExp, owa, min, max, mean.
// Families without a vector parameter take their arity from `arity`; for the
// others a given arity must match the parameter length.
ScalarAggregation makeScalarAggregation(const nlohmann::json& descriptor,
                                        std::optional<std::size_t> arity = {});

std::vector<std::string> scalarAggregationNames();

// A ≤ B pointwise ("dominance"). Compares with an absolute slack of 1e-12 so
// that pow() round-off is not reported.
CompatibilityReport dominates(const ScalarAggregation& a, const ScalarAggregation& b,
                              const SamplingConfig& cfg = {});
// A(λx) = λ^k A(x) within 1e-12 ("homogeneity").
CompatibilityReport checkHomogeneity(const ScalarAggregation& a, double k,
                                     const SamplingConfig& cfg = {});
// Strictly increasing in each argument on sorted inputs ("strict-on-Ln"): a
// coordinate is raised without leaving L_m, and the value must rise.
CompatibilityReport checkStrictOnLn(const ScalarAggregation& a,
                                    const SamplingConfig& cfg = {});
// A(x) ∈ {x_1, ..., x_m} exactly ("internal").
CompatibilityReport checkInternal(const ScalarAggregation& a,
                                  const SamplingConfig& cfg = {});
// Componentwise monotonicity on sampled comparable pairs ("monotonicity").
CompatibilityReport checkMonotone(const ScalarAggregation& a,
                                  const SamplingConfig& cfg = {});

}  // namespace ndagg
