#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "ndagg/interval.hpp"

namespace ndagg {

inline constexpr std::uint64_t kDefaultSeed = 20240917;

struct SamplingConfig {
  std::uint64_t seed = kDefaultSeed;
  std::size_t samples = 1000;
};

// Deterministic generator for property checks.
//
// Every value is a multiple of 2^-10, and weight vectors are dyadic with an
// exact sum of 1. Sums and products of such numbers are exact in binary64,
// so laws stated as equalities can be checked with ==. The endpoints 0 and 1
// are drawn more often than a uniform grid would, to reach saturation.
//
// Bounded integer draws avoid std::uniform_int_distribution so that a seed
// yields the same stream with any standard library.
class Sampler {
 public:
  static constexpr int kGridBits = 10;
  static constexpr std::uint64_t kGrid = std::uint64_t{1} << kGridBits;

  explicit Sampler(std::uint64_t seed = kDefaultSeed) : rng_(seed) {}

  // Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(below(n)); }
  bool coin(std::uint64_t one_in) { return below(one_in) == 0; }

  double unit();
  // A grid value strictly inside (0,1).
  double interior();
  // A grid value in [0, cap], cap itself on the grid.
  double upTo(double cap);

  NDimInterval interval(std::size_t n);
  // Components bounded by cap, so that sums of a few stay below 1.
  NDimInterval intervalBelow(std::size_t n, double cap);
  // y with x ≤_n^p y, often equal to x in some coordinates.
  NDimInterval above(const NDimInterval& x);
  // Redraws a random nonempty subset of coordinates, then re-sorts. Produces
  // pairs sharing long prefixes, which is where lexicographic ties live.
  NDimInterval perturb(const NDimInterval& x);
  std::vector<double> tuple(std::size_t m);

  WeightingVector weights(std::size_t m, bool strictly_positive);
  Permutation permutation(std::size_t n);

  std::mt19937_64& engine() noexcept { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace ndagg
