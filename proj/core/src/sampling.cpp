#include "ndagg/sampling.hpp"

#include <algorithm>
#include <cmath>

#include "ndagg/error.hpp"

namespace ndagg {

namespace {

constexpr double kStep = 1.0 / static_cast<double>(Sampler::kGrid);

}  // namespace

std::uint64_t Sampler::below(std::uint64_t bound) {
  if (bound == 0) throw ValidationError("empty sampling range");
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t v;
  do {
    v = rng_();
  } while (v >= limit);
  return v % bound;
}

double Sampler::unit() {
  const std::uint64_t pick = below(16);
  if (pick == 0) return 0.0;
  if (pick == 1) return 1.0;
  return static_cast<double>(below(kGrid + 1)) * kStep;
}

double Sampler::interior() {
  return static_cast<double>(1 + below(kGrid - 1)) * kStep;
}

double Sampler::upTo(double cap) {
  const auto top = static_cast<std::uint64_t>(std::floor(cap * kGrid));
  return static_cast<double>(below(top + 1)) * kStep;
}

std::vector<double> Sampler::tuple(std::size_t m) {
  std::vector<double> v(m);
  for (double& x : v) x = unit();
  return v;
}

NDimInterval Sampler::interval(std::size_t n) {
  std::vector<double> v = tuple(n);
  std::sort(v.begin(), v.end());
  return NDimInterval(std::move(v));
}

NDimInterval Sampler::intervalBelow(std::size_t n, double cap) {
  std::vector<double> v(n);
  for (double& x : v) x = upTo(cap);
  std::sort(v.begin(), v.end());
  return NDimInterval(std::move(v));
}

NDimInterval Sampler::above(const NDimInterval& x) {
  std::vector<double> v(x.components().begin(), x.components().end());
  for (double& c : v) {
    if (coin(3)) continue;
    c = std::min(1.0, c + upTo(1.0 - c));
  }
  // Order statistics of a componentwise-larger tuple dominate those of x.
  std::sort(v.begin(), v.end());
  return NDimInterval(std::move(v));
}

NDimInterval Sampler::perturb(const NDimInterval& x) {
  std::vector<double> v(x.components().begin(), x.components().end());
  const std::size_t k = 1 + index(v.size());
  for (std::size_t t = 0; t < k; ++t) v[index(v.size())] = unit();
  std::sort(v.begin(), v.end());
  return NDimInterval(std::move(v));
}

WeightingVector Sampler::weights(std::size_t m, bool strictly_positive) {
  if (m == 0) throw ValidationError("a weighting vector needs m >= 1");
  if (strictly_positive && m > kGrid) {
    throw ValidationError("too many strictly positive dyadic weights");
  }
  std::vector<std::uint64_t> cuts;
  cuts.reserve(m + 1);
  cuts.push_back(0);
  cuts.push_back(kGrid);
  if (strictly_positive) {
    while (cuts.size() < m + 1) {
      const std::uint64_t c = 1 + below(kGrid - 1);
      if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) {
        cuts.push_back(c);
      }
    }
  } else {
    while (cuts.size() < m + 1) {
      // Repeated cuts give zero weights, which is the interesting case.
      cuts.push_back(coin(4) ? cuts[index(cuts.size())] : below(kGrid + 1));
    }
  }
  std::sort(cuts.begin(), cuts.end());
  std::vector<double> w(m);
  for (std::size_t i = 0; i < m; ++i) {
    w[i] = static_cast<double>(cuts[i + 1] - cuts[i]) * kStep;
  }
  return WeightingVector(std::move(w));
}

Permutation Sampler::permutation(std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[index(i)]);
  return Permutation(std::move(p));
}

}  // namespace ndagg
