#include "ndagg/interval.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ndagg/error.hpp"

namespace ndagg {

namespace {

bool inUnitInterval(double v) { return v >= 0.0 && v <= 1.0; }

std::string fmt(double v) {
  std::string s = std::to_string(v);
  return s;
}

}  // namespace

UnitValue::UnitValue(double v) : v_(v) {
  if (!inUnitInterval(v)) {
    throw ValidationError("value " + fmt(v) + " is outside [0,1]");
  }
}

NDimInterval::NDimInterval(std::vector<double> components)
    : c_(std::move(components)) {
  if (c_.empty()) throw ValidationError("an n-dimensional interval needs n >= 1");
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!inUnitInterval(c_[i])) {
      throw ValidationError("component " + std::to_string(i + 1) + " = " +
                            fmt(c_[i]) + " is outside [0,1]");
    }
    if (i > 0 && c_[i - 1] > c_[i]) {
      throw ValidationError("components must be nondecreasing (component " +
                            std::to_string(i) + " > component " +
                            std::to_string(i + 1) + ")");
    }
  }
}

NDimInterval::NDimInterval(std::initializer_list<double> components)
    : NDimInterval(std::vector<double>(components)) {}

UnitValue NDimInterval::proj(std::size_t i) const {
  if (i < 1 || i > c_.size()) {
    throw ValidationError("projection index " + std::to_string(i) +
                          " out of range 1.." + std::to_string(c_.size()));
  }
  return UnitValue(c_[i - 1]);
}

Permutation::Permutation(std::vector<std::size_t> zero_based)
    : map_(std::move(zero_based)) {
  std::vector<bool> seen(map_.size(), false);
  for (std::size_t v : map_) {
    if (v >= map_.size() || seen[v]) {
      throw ValidationError("permutation is not a bijection on 1.." +
                            std::to_string(map_.size()));
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> m(n);
  std::iota(m.begin(), m.end(), std::size_t{0});
  return Permutation(std::move(m));
}

Permutation Permutation::reversal(std::size_t n) {
  std::vector<std::size_t> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = n - 1 - i;
  return Permutation(std::move(m));
}

Permutation Permutation::fromOneBased(std::span<const long long> one_based) {
  std::vector<std::size_t> m;
  m.reserve(one_based.size());
  for (long long v : one_based) {
    if (v < 1 || static_cast<std::size_t>(v) > one_based.size()) {
      throw ValidationError("permutation entry " + std::to_string(v) +
                            " out of range 1.." +
                            std::to_string(one_based.size()));
    }
    m.push_back(static_cast<std::size_t>(v - 1));
  }
  return Permutation(std::move(m));
}

std::size_t Permutation::at(std::size_t k) const {
  if (k >= map_.size()) throw ValidationError("permutation index out of range");
  return map_[k];
}

bool Permutation::isIdentity() const noexcept {
  for (std::size_t k = 0; k < map_.size(); ++k) {
    if (map_[k] != k) return false;
  }
  return true;
}

std::vector<long long> Permutation::oneBased() const {
  std::vector<long long> out;
  out.reserve(map_.size());
  for (std::size_t v : map_) out.push_back(static_cast<long long>(v) + 1);
  return out;
}

WeightingVector::WeightingVector(std::vector<double> weights)
    : w_(std::move(weights)) {
  if (w_.empty()) throw ValidationError("a weighting vector needs m >= 1");
  double sum = 0.0;
  strictly_positive_ = true;
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (!inUnitInterval(w_[i])) {
      throw ValidationError("weight " + std::to_string(i + 1) + " = " +
                            fmt(w_[i]) + " is outside [0,1]");
    }
    if (w_[i] == 0.0) strictly_positive_ = false;
    sum += w_[i];
  }
  if (std::abs(sum - 1.0) > kSumTolerance) {
    throw ValidationError("weights must sum to 1 (within 1e-9), got " +
                          fmt(sum));
  }
}

WeightingVector WeightingVector::normalize(std::vector<double> raw) {
  double sum = 0.0;
  for (double v : raw) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw ValidationError("weights to normalize must be finite and >= 0");
    }
    sum += v;
  }
  if (!(sum > 0.0)) throw ValidationError("weights to normalize sum to 0");
  for (double& v : raw) v /= sum;
  return WeightingVector(std::move(raw));
}

WeightingVector WeightingVector::uniform(std::size_t m) {
  if (m == 0) throw ValidationError("a weighting vector needs m >= 1");
  return WeightingVector(std::vector<double>(m, 1.0 / static_cast<double>(m)));
}

NDimInterval degenerate(UnitValue c, std::size_t n) {
  return NDimInterval(std::vector<double>(n, c.value()));
}

NDimInterval sigma(std::span<const double> values) {
  if (values.empty()) throw ValidationError("sigma of an empty tuple");
  std::vector<double> v(values.begin(), values.end());
  for (double x : v) UnitValue{x};
  std::sort(v.begin(), v.end());
  return NDimInterval(std::move(v));
}

void requireSameDimension(const NDimInterval& x, const NDimInterval& y) {
  if (x.empty() || y.empty()) {
    throw ValidationError("empty n-dimensional interval");
  }
  if (x.dimension() != y.dimension()) {
    throw ValidationError("dimension mismatch: " +
                          std::to_string(x.dimension()) + " vs " +
                          std::to_string(y.dimension()));
  }
}

bool productOrderLeq(const NDimInterval& x, const NDimInterval& y) {
  requireSameDimension(x, y);
  for (std::size_t i = 0; i < x.dimension(); ++i) {
    if (x[i] > y[i]) return false;
  }
  return true;
}

namespace {

template <typename Pick>
NDimInterval componentwise(std::span<const NDimInterval> set, Pick pick) {
  if (set.empty()) throw ValidationError("lattice bound of an empty set");
  std::vector<double> out(set.front().components().begin(),
                          set.front().components().end());
  for (const auto& x : set) {
    requireSameDimension(set.front(), x);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = pick(out[i], x[i]);
  }
  return NDimInterval(std::move(out));
}

}  // namespace

NDimInterval latticeInf(std::span<const NDimInterval> set) {
  return componentwise(set, [](double a, double b) { return std::min(a, b); });
}

NDimInterval latticeSup(std::span<const NDimInterval> set) {
  return componentwise(set, [](double a, double b) { return std::max(a, b); });
}

}  // namespace ndagg
