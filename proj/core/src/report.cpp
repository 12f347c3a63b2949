#include "ndagg/report.hpp"

#include <algorithm>

#include "ndagg/error.hpp"

namespace ndagg {

Witness& Witness::add(std::string name, const NDimInterval& x) {
  entries.push_back({std::move(name),
                     std::vector<double>(x.components().begin(),
                                         x.components().end()),
                     false});
  return *this;
}

Witness& Witness::add(std::string name, std::span<const double> tuple) {
  entries.push_back(
      {std::move(name), std::vector<double>(tuple.begin(), tuple.end()), false});
  return *this;
}

Witness& Witness::add(std::string name, double scalar) {
  entries.push_back({std::move(name), {scalar}, true});
  return *this;
}

const WitnessEntry* Witness::find(const std::string& name) const {
  auto it = std::find_if(entries.begin(), entries.end(),
                         [&](const WitnessEntry& e) { return e.name == name; });
  return it == entries.end() ? nullptr : &*it;
}

NDimInterval Witness::interval(const std::string& name) const {
  const WitnessEntry* e = find(name);
  if (e == nullptr || e->scalar) {
    throw ValidationError("witness has no tuple named '" + name + "'");
  }
  return NDimInterval(e->value);
}

double Witness::scalar(const std::string& name) const {
  const WitnessEntry* e = find(name);
  if (e == nullptr || !e->scalar) {
    throw ValidationError("witness has no scalar named '" + name + "'");
  }
  return e->value.front();
}

void CompatibilityReport::fail(Witness w) {
  ++violations;
  if (holds) {
    holds = false;
    witness = std::move(w);
  }
}

bool allHold(std::span<const CompatibilityReport> reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const CompatibilityReport& r) { return r.holds; });
}

}  // namespace ndagg
