#pragma once

// The weak semifield U = ([0,1], ∔, ·), the semi-vector space
// ⟨L_n([0,1]), ⊕, ⊙⟩ over it, the natural preorder, and executable checks of
// the weak-semifield axioms WF1-WF5, the semi-vector-space axioms SV1-SV7 and
// the order-compatibility axioms SV8/SV9.

#include <compare>
#include <functional>
#include <optional>
#include <vector>

#include "ndagg/interval.hpp"
#include "ndagg/report.hpp"
#include "ndagg/sampling.hpp"

namespace ndagg {

// r ∔ s = min(1, r + s).
UnitValue boundedAdd(UnitValue r, UnitValue s);
inline double boundedAdd(double r, double s) { return r + s < 1.0 ? r + s : 1.0; }

// r ⊙ x = (r·x_1, ..., r·x_n).
NDimInterval scalarMul(UnitValue r, const NDimInterval& x);
// x ⊕ y = (x_1 ∔ y_1, ..., x_n ∔ y_n).
NDimInterval vecAdd(const NDimInterval& x, const NDimInterval& y);

// Absolute tolerance used when comparing forced witness differences y_i − x_i.
// Decimal inputs are not exact in binary64, so 0.5 − 0.2 and 0.7 − 0.4 differ
// in the last bit; anything coarser than 1e-12 is a genuine difference.
inline constexpr double kNaturalPreorderTolerance = 1e-12;

// x ≤ y in the natural preorder: some z ∈ L_n has x ⊕ z = y.
//
// Where y_i < 1 the witness is forced, z_i = y_i − x_i, and those indices
// form a prefix because y is sorted. On the suffix where y_i = 1 the choice
// z_i = max(z_{i−1}, 1 − x_i) always works. So the relation holds iff
// x ≤_n^p y and the forced differences are nondecreasing.
bool naturalPreorderLeq(const NDimInterval& x, const NDimInterval& y);
// A z realising x ≤ y (up to the tolerance above), or nullopt.
std::optional<NDimInterval> naturalPreorderWitness(const NDimInterval& x,
                                                   const NDimInterval& y);

// Scalar operations under test. The default is U; tests pass broken ones.
struct ScalarAlgebra {
  std::function<double(double, double)> add;
  std::function<double(double, double)> mul;
  double zero = 0.0;
  double one = 1.0;

  static ScalarAlgebra unitInterval();
};

// Vector operations under test, paired with the scalar algebra they use.
struct VectorAlgebra {
  std::function<NDimInterval(const NDimInterval&, const NDimInterval&)> add;
  std::function<NDimInterval(double, const NDimInterval&)> mul;
  std::function<NDimInterval(std::size_t)> zero;

  static VectorAlgebra lattice();
};

// Reports "closure", then WF1..WF5. Equalities are exact.
std::vector<CompatibilityReport> checkSemifieldAxioms(
    const ScalarAlgebra& algebra = ScalarAlgebra::unitInterval(),
    const SamplingConfig& cfg = {});

// Reports "closure", then SV1..SV7 on L_n.
std::vector<CompatibilityReport> checkSemiVectorAxioms(
    std::size_t n, const SamplingConfig& cfg = {},
    const VectorAlgebra& vectors = VectorAlgebra::lattice(),
    const ScalarAlgebra& scalars = ScalarAlgebra::unitInterval());

using Comparator =
    std::function<std::strong_ordering(const NDimInterval&, const NDimInterval&)>;

// One candidate instance for SV8 (uses x, y, r) and SV9 (uses x, y, z). The
// pair is reordered so that x ⪯ y before the axiom is evaluated.
struct OrderTrial {
  NDimInterval x;
  NDimInterval y;
  NDimInterval z;
  double r = 0.5;
};

// The published counterexample instances for dimension n: the F_ω family
// (n ≥ 2) and the max_ē pair (n = 4).
std::vector<OrderTrial> publishedCompatibilityWitnesses(std::size_t n);

struct OrderCompatibility {
  CompatibilityReport sv8;
  CompatibilityReport sv9;
};

// Runs the candidates first, then cfg.samples random trials. Random trials mix
// unrelated pairs, near-tie pairs from Sampler::perturb, and saturating
// translations z = /1 − x_i/.
OrderCompatibility checkOrderCompatibility(
    const Comparator& order, std::size_t n, const SamplingConfig& cfg = {},
    const std::vector<OrderTrial>& candidates = {});

}  // namespace ndagg
