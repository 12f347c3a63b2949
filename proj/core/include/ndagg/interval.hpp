#pragma once

// The lattice L_n([0,1]) of n-dimensional intervals: nondecreasing n-tuples
// of unit-interval reals, with projections, degenerate elements, the sorting
// immersion and the componentwise (product) order.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace ndagg {

// A real in [0,1]. Out-of-range (and NaN) input is rejected, never clamped.
class UnitValue {
 public:
  constexpr UnitValue() noexcept = default;
  explicit UnitValue(double v);

  constexpr double value() const noexcept { return v_; }

  friend constexpr bool operator==(UnitValue, UnitValue) noexcept = default;
  friend constexpr auto operator<=>(UnitValue a, UnitValue b) noexcept {
    return a.v_ <=> b.v_;
  }

 private:
  double v_ = 0.0;
};

// An element of L_n([0,1]). Components are stored 0-based; proj() uses the
// 1-based indexing of π_i.
class NDimInterval {
 public:
  // Empty placeholder so the type can live in containers. Every operation
  // rejects it.
  NDimInterval() = default;
  explicit NDimInterval(std::vector<double> components);
  NDimInterval(std::initializer_list<double> components);

  std::size_t dimension() const noexcept { return c_.size(); }
  bool empty() const noexcept { return c_.empty(); }

  // 0-based, unchecked.
  double operator[](std::size_t i) const noexcept { return c_[i]; }

  // π_i for 1 ≤ i ≤ n.
  UnitValue proj(std::size_t i) const;

  std::span<const double> components() const noexcept { return c_; }

  // Exact numeric equality, no tolerance.
  friend bool operator==(const NDimInterval&, const NDimInterval&) = default;

 private:
  std::vector<double> c_;
};

// A bijection on {1..n}. Stored 0-based: at(k) is the (0-based) coordinate
// scanned k-th.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::size_t> zero_based);

  static Permutation identity(std::size_t n);
  // τ(i) = n − i + 1.
  static Permutation reversal(std::size_t n);
  static Permutation fromOneBased(std::span<const long long> one_based);

  std::size_t size() const noexcept { return map_.size(); }
  std::size_t operator[](std::size_t k) const noexcept { return map_[k]; }
  std::size_t at(std::size_t k) const;
  bool isIdentity() const noexcept;
  std::vector<long long> oneBased() const;
  std::span<const std::size_t> zeroBased() const noexcept { return map_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> map_;
};

// Nonnegative weights summing to 1 (absolute tolerance 1e-9).
class WeightingVector {
 public:
  static constexpr double kSumTolerance = 1e-9;

  WeightingVector() = default;
  // Rejects any sum outside 1 ± kSumTolerance; never renormalizes.
  explicit WeightingVector(std::vector<double> weights);

  // Divides by the sum. Requires nonnegative entries and a positive sum.
  static WeightingVector normalize(std::vector<double> raw);
  static WeightingVector uniform(std::size_t m);

  std::size_t size() const noexcept { return w_.size(); }
  double operator[](std::size_t i) const noexcept { return w_[i]; }
  std::span<const double> values() const noexcept { return w_; }
  bool strictlyPositive() const noexcept { return strictly_positive_; }

  friend bool operator==(const WeightingVector& a, const WeightingVector& b) {
    return a.w_ == b.w_;
  }

 private:
  std::vector<double> w_;
  bool strictly_positive_ = false;
};

// /c/ = (c, ..., c) of length n.
NDimInterval degenerate(UnitValue c, std::size_t n);

// σ: the nondecreasing rearrangement of a nonempty tuple of unit values.
NDimInterval sigma(std::span<const double> values);

// x ≤_n^p y: componentwise comparison.
bool productOrderLeq(const NDimInterval& x, const NDimInterval& y);

// Componentwise min / max of a nonempty, same-dimension set.
NDimInterval latticeInf(std::span<const NDimInterval> set);
NDimInterval latticeSup(std::span<const NDimInterval> set);

// Throws ValidationError unless x and y are nonempty with equal dimension.
void requireSameDimension(const NDimInterval& x, const NDimInterval& y);

}  // namespace ndagg
