#include "ndagg/orders.hpp"

#include <algorithm>

#include "ndagg/error.hpp"

namespace ndagg {

using nlohmann::json;

std::string toString(OrderKind kind) {
  switch (kind) {
    case OrderKind::LexTau: return "LexTau";
    case OrderKind::WeightedLex: return "WeightedLex";
    case OrderKind::AggLex: return "AggLex";
  }
  return "?";
}

OrderKind orderKindFromString(const std::string& s) {
  if (s == "LexTau") return OrderKind::LexTau;
  if (s == "WeightedLex") return OrderKind::WeightedLex;
  if (s == "AggLex") return OrderKind::AggLex;
  throw ValidationError("unknown order kind '" + s + "'", "kind");
}

AdmissibleOrderSpec AdmissibleOrderSpec::lexTau(Permutation tau) {
  return {OrderKind::LexTau, std::move(tau), std::nullopt, std::nullopt};
}

AdmissibleOrderSpec AdmissibleOrderSpec::weightedLex(WeightingVector omega,
                                                     Permutation tau) {
  if (omega.size() != tau.size()) {
    throw ValidationError("omega and tau lengths differ", "omega");
  }
  return {OrderKind::WeightedLex, std::move(tau), std::move(omega), std::nullopt};
}

AdmissibleOrderSpec AdmissibleOrderSpec::aggLex(json agg, Permutation tau) {
  return {OrderKind::AggLex, std::move(tau), std::nullopt, std::move(agg)};
}

AdmissibleOrderSpec AdmissibleOrderSpec::fromJson(const json& j,
                                                  std::optional<std::size_t> dimension) {
  if (!j.is_object()) throw ValidationError("order must be an object");
  if (!j.contains("kind") || !j.at("kind").is_string()) {
    throw ValidationError("order needs a string 'kind'", "kind");
  }
  AdmissibleOrderSpec spec;
  spec.kind = orderKindFromString(j.at("kind").get<std::string>());

  if (j.contains("tau")) {
    const json& t = j.at("tau");
    if (!t.is_array()) throw ValidationError("tau must be an array", "tau");
    std::vector<long long> one_based;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (!t[i].is_number_integer()) {
        throw ValidationError("expected an integer", "tau[" + std::to_string(i) + "]");
      }
      one_based.push_back(t[i].get<long long>());
    }
    try {
      spec.tau = Permutation::fromOneBased(one_based);
    } catch (const ValidationError& e) {
      throw e.within("tau");
    }
  } else if (dimension) {
    spec.tau = Permutation::identity(*dimension);
  } else {
    throw ValidationError("order needs 'tau'", "tau");
  }
  if (spec.tau.size() == 0) throw ValidationError("tau is empty", "tau");
  if (dimension && spec.tau.size() != *dimension) {
    throw ValidationError("tau has length " + std::to_string(spec.tau.size()) +
                              ", expected dimension " + std::to_string(*dimension),
                          "tau");
  }

  if (spec.kind == OrderKind::WeightedLex) {
    if (!j.contains("omega") || !j.at("omega").is_array()) {
      throw ValidationError("WeightedLex needs 'omega'", "omega");
    }
    std::vector<double> w;
    for (std::size_t i = 0; i < j.at("omega").size(); ++i) {
      const json& v = j.at("omega")[i];
      if (!v.is_number()) {
        throw ValidationError("expected a number", "omega[" + std::to_string(i) + "]");
      }
      w.push_back(v.get<double>());
    }
    try {
      spec.omega = WeightingVector(std::move(w));
    } catch (const ValidationError& e) {
      throw e.within("omega");
    }
    if (spec.omega->size() != spec.tau.size()) {
      throw ValidationError("omega must have the order's dimension", "omega");
    }
  } else if (spec.kind == OrderKind::AggLex) {
    if (!j.contains("agg")) throw ValidationError("AggLex needs 'agg'", "agg");
    spec.agg = j.at("agg");
    try {
      (void)makeScalarAggregation(*spec.agg, spec.tau.size());
    } catch (const ValidationError& e) {
      throw e.within("agg");
    }
  }
  return spec;
}

json AdmissibleOrderSpec::toJson() const {
  json j{{"kind", toString(kind)}, {"tau", tau.oneBased()}};
  if (omega) {
    j["omega"] = std::vector<double>(omega->values().begin(), omega->values().end());
  }
  if (agg) j["agg"] = *agg;
  return j;
}

std::strong_ordering compareLexTau(const Permutation& tau, const NDimInterval& x,
                                   const NDimInterval& y) {
  requireSameDimension(x, y);
  if (tau.size() != x.dimension()) {
    throw ValidationError("tau length does not match the dimension");
  }
  for (std::size_t k = 0; k < tau.size(); ++k) {
    const double a = x[tau[k]], b = y[tau[k]];
    if (a < b) return std::strong_ordering::less;
    if (a > b) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

double fOmega(const WeightingVector& omega, const NDimInterval& x, const NDimInterval& y) {
  requireSameDimension(x, y);
  if (omega.size() != x.dimension()) {
    throw ValidationError("omega length does not match the dimension");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < x.dimension(); ++i) {
    if (x[i] > y[i]) s += omega[i] * (x[i] - y[i]);
  }
  return s;
}

std::strong_ordering compareWeightedLex(const WeightingVector& omega, const Permutation& tau,
                                        const NDimInterval& x, const NDimInterval& y) {
  const double fxy = fOmega(omega, x, y);
  const double fyx = fOmega(omega, y, x);
  if (fxy < fyx) return std::strong_ordering::less;
  if (fxy > fyx) return std::strong_ordering::greater;
  return compareLexTau(tau, x, y);
}

std::strong_ordering compareAggLex(const ScalarAggregation& agg, const Permutation& tau,
                                   const NDimInterval& x, const NDimInterval& y) {
  requireSameDimension(x, y);
  if (agg.arity() != x.dimension()) {
    throw ValidationError("AggLex aggregation arity does not match the dimension");
  }
  const double ax = agg(x.components());
  const double ay = agg(y.components());
  if (ax < ay) return std::strong_ordering::less;
  if (ax > ay) return std::strong_ordering::greater;
  return compareLexTau(tau, x, y);
}

AdmissibleOrder::AdmissibleOrder(AdmissibleOrderSpec spec) : spec_(std::move(spec)) {
  if (spec_.tau.size() == 0) throw ValidationError("order dimension must be >= 1", "tau");
  switch (spec_.kind) {
    case OrderKind::LexTau: break;
    case OrderKind::WeightedLex:
      if (!spec_.omega || spec_.omega->size() != spec_.tau.size()) {
        throw ValidationError("WeightedLex needs omega of the order's dimension", "omega");
      }
      break;
    case OrderKind::AggLex:
      if (!spec_.agg) throw ValidationError("AggLex needs 'agg'", "agg");
      agg_ = std::make_shared<const ScalarAggregation>(
          makeScalarAggregation(*spec_.agg, spec_.tau.size()));
      break;
  }
}

std::strong_ordering AdmissibleOrder::compare(const NDimInterval& x,
                                              const NDimInterval& y) const {
  switch (spec_.kind) {
    case OrderKind::LexTau: return compareLexTau(spec_.tau, x, y);
    case OrderKind::WeightedLex: return compareWeightedLex(*spec_.omega, spec_.tau, x, y);
    case OrderKind::AggLex: return compareAggLex(*agg_, spec_.tau, x, y);
  }
  return std::strong_ordering::equal;
}

Comparator AdmissibleOrder::comparator() const {
  return [self = *this](const NDimInterval& x, const NDimInterval& y) {
    return self.compare(x, y);
  };
}

std::string AdmissibleOrder::label() const {
  std::string s = toString(spec_.kind) + "(";
  const auto t = spec_.tau.oneBased();
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i]);
  }
  s += ")";
  if (agg_) s += "[" + agg_->name() + "]";
  return s;
}

namespace {

template <typename Better>
NDimInterval extremum(std::span<const NDimInterval> set, Better better) {
  if (set.empty()) throw ValidationError("order extremum of an empty set");
  const NDimInterval* best = &set.front();
  for (const NDimInterval& x : set) {
    requireSameDimension(*best, x);
    if (better(x, *best)) best = &x;
  }
  return *best;
}

}  // namespace

NDimInterval minUnder(const Comparator& order, std::span<const NDimInterval> set) {
  return extremum(set, [&](const auto& a, const auto& b) { return order(a, b) < 0; });
}

NDimInterval maxUnder(const Comparator& order, std::span<const NDimInterval> set) {
  return extremum(set, [&](const auto& a, const auto& b) { return order(a, b) > 0; });
}

NDimInterval minUnder(const AdmissibleOrder& order, std::span<const NDimInterval> set) {
  return extremum(set, [&](const auto& a, const auto& b) { return order.less(a, b); });
}

NDimInterval maxUnder(const AdmissibleOrder& order, std::span<const NDimInterval> set) {
  return extremum(set, [&](const auto& a, const auto& b) { return order.less(b, a); });
}

namespace {

CompatibilityReport blank(std::string axiom, const SamplingConfig& cfg) {
  CompatibilityReport r;
  r.axiom = std::move(axiom);
  r.seed = cfg.seed;
  r.samples = cfg.samples;
  return r;
}

std::strong_ordering mirror(std::strong_ordering o) {
  if (o < 0) return std::strong_ordering::greater;
  if (o > 0) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

const char* name(std::strong_ordering o) {
  return o < 0 ? "Less" : (o > 0 ? "Greater" : "Equal");
}

}  // namespace

std::vector<CompatibilityReport> verifyAdmissibility(const Comparator& order, std::size_t n,
                                                     const SamplingConfig& cfg) {
  CompatibilityReport total = blank("totality", cfg);
  CompatibilityReport anti = blank("antisymmetry", cfg);
  CompatibilityReport trans = blank("transitivity", cfg);
  CompatibilityReport adm = blank("admissibility", cfg);

  Sampler s(cfg.seed);
  for (std::size_t k = 0; k < cfg.samples; ++k) {
    const NDimInterval x = s.interval(n);
    NDimInterval y;
    switch (s.below(3)) {
      case 0: y = s.interval(n); break;
      case 1: y = s.perturb(x); break;
      default: y = s.above(x); break;
    }

    const auto xy = order(x, y);
    const auto yx = order(y, x);
    if (yx != mirror(xy)) {
      Witness w;
      w.add("x", x).add("y", y);
      w.note = std::string("compare(x,y)=") + name(xy) + ", compare(y,x)=" + name(yx);
      total.fail(std::move(w));
    }
    if ((xy == 0) != (x == y)) {
      Witness w;
      w.add("x", x).add("y", y);
      w.note = x == y ? "identical tuples not Equal" : "distinct tuples compare Equal";
      anti.fail(std::move(w));
    }
    if (productOrderLeq(x, y) && xy > 0) {
      Witness w;
      w.add("x", x).add("y", y);
      w.note = "x <=p y but y precedes x";
      adm.fail(std::move(w));
    }

    // Transitivity on a triple mixing both generators.
    const NDimInterval z = s.coin(2) ? s.perturb(y) : s.interval(n);
    const NDimInterval* t[3] = {&x, &y, &z};
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        for (int c = 0; c < 3; ++c) {
          if (a == b || b == c || a == c) continue;
          if (order(*t[a], *t[b]) <= 0 && order(*t[b], *t[c]) <= 0 &&
              order(*t[a], *t[c]) > 0) {
            Witness w;
            w.add("a", *t[a]).add("b", *t[b]).add("c", *t[c]);
            w.note = "a <= b and b <= c but c < a";
            trans.fail(std::move(w));
          }
        }
      }
    }
  }
  return {total, anti, trans, adm};
}

std::vector<OrderTrial> compatibilityCandidates(const AdmissibleOrderSpec& spec) {
  const std::size_t n = spec.dimension();
  std::vector<OrderTrial> out = publishedCompatibilityWitnesses(n);
  if (spec.kind != OrderKind::LexTau || spec.tau.isIdentity()) return out;

  // First descent in the scan order: a = τ(m) > b = τ(m+1).
  std::size_t m = 0;
  while (spec.tau[m] < spec.tau[m + 1]) ++m;
  const std::size_t a = spec.tau[m], b = spec.tau[m + 1];
  std::vector<double> x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i < b) {
      x[i] = y[i] = 0.125;
    } else if (i == b) {
      x[i] = 0.375, y[i] = 0.25;
    } else if (i < a) {
      x[i] = y[i] = 0.5;
    } else if (i == a) {
      x[i] = 0.625, y[i] = 0.75;
    } else {
      x[i] = y[i] = 0.875;
    }
  }
  out.push_back({NDimInterval(x), NDimInterval(y), degenerate(UnitValue(1.0 - x[a]), n), 0.5});
  return out;
}

OrderCompatibility checkOrderCompatibility(const AdmissibleOrder& order,
                                           const SamplingConfig& cfg) {
  return checkOrderCompatibility(order.comparator(), order.dimension(), cfg,
                                 compatibilityCandidates(order.spec()));
}

}  // namespace ndagg
