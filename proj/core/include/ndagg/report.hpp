#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ndagg/interval.hpp"

namespace ndagg {

struct WitnessEntry {
  std::string name;
  std::vector<double> value;
  bool scalar = false;
};

// The concrete inputs (and a few derived values) that falsified a check.
struct Witness {
  std::vector<WitnessEntry> entries;
  std::string note;

  Witness& add(std::string name, const NDimInterval& x);
  Witness& add(std::string name, std::span<const double> tuple);
  Witness& add(std::string name, double scalar);

  const WitnessEntry* find(const std::string& name) const;
  // Reads back an entry added as an interval. Throws if absent.
  NDimInterval interval(const std::string& name) const;
  double scalar(const std::string& name) const;
};

// Outcome of one property or axiom check. When holds is false the witness is
// always present and re-evaluating the property on it fails again.
struct CompatibilityReport {
  std::string axiom;
  bool holds = true;
  std::optional<Witness> witness;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::size_t violations = 0;
  // Largest numeric discrepancy seen by checks that compare with a
  // tolerance; 0 means every comparison was exact.
  double max_deviation = 0.0;
  std::string detail;

  // Records a failure. Only the first witness is kept.
  void fail(Witness w);
};

bool allHold(std::span<const CompatibilityReport> reports);

}  // namespace ndagg
