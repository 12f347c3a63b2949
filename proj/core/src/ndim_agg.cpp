#include "ndagg/ndim_agg.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

#include "ndagg/error.hpp"
#include "ndagg/semivector.hpp"

namespace ndagg {

using nlohmann::json;

namespace {

constexpr double kBoundaryTolerance = 1e-9;
// Equalities inside classification verdicts allow this much round-off, so
// that decimal weights such as 0.2341 do not read as failures of
// idempotence. Exactness is still visible through max_deviation.
constexpr double kClassificationTolerance = 1e-12;

double deviation(const NDimInterval& a, const NDimInterval& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.dimension(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

bool near(const NDimInterval& a, const NDimInterval& b, double tol) {
  return a.dimension() == b.dimension() && deviation(a, b) <= tol;
}

CompatibilityReport blank(std::string axiom, const SamplingConfig& cfg) {
  CompatibilityReport r;
  r.axiom = std::move(axiom);
  r.seed = cfg.seed;
  r.samples = cfg.samples;
  return r;
}

json weightsJson(const WeightingVector& w) {
  return json(std::vector<double>(w.values().begin(), w.values().end()));
}

void requireArgs(std::span<const NDimInterval> xs, std::size_t m, std::size_t n,
                 const std::string& name) {
  if (xs.size() != m) {
    throw ValidationError("'" + name + "' expects " + std::to_string(m) +
                          " arguments, got " + std::to_string(xs.size()));
  }
  for (const NDimInterval& x : xs) {
    if (x.dimension() != n) {
      throw ValidationError("'" + name + "' expects dimension " + std::to_string(n) +
                            ", got " + std::to_string(x.dimension()));
    }
  }
}

// Σ⊕ w_j ⊙ xs[order_j], left to right, without intermediate validation.
NDimInterval fold(std::span<const double> w, std::span<const NDimInterval* const> xs) {
  const std::size_t n = xs.front()->dimension();
  std::vector<double> acc(n, 0.0);
  for (std::size_t j = 0; j < xs.size(); ++j) {
    for (std::size_t i = 0; i < n; ++i) acc[i] = boundedAdd(acc[i], w[j] * (*xs[j])[i]);
  }
  return NDimInterval(std::move(acc));
}

}  // namespace

NDimAggregation::NDimAggregation(std::string name, std::size_t arity, AdmissibleOrder order,
                                 json descriptor, Fn fn, std::vector<std::string> warnings)
    : name_(std::move(name)),
      arity_(arity),
      order_(std::move(order)),
      descriptor_(std::move(descriptor)),
      fn_(std::move(fn)),
      warnings_(std::move(warnings)) {
  if (arity_ < 1) throw ValidationError("an n-dimensional aggregation needs m >= 1");
  if (!descriptor_.is_object()) descriptor_ = json::object();
  descriptor_["name"] = name_;

  const std::size_t n = dimension();
  const NDimInterval zero = degenerate(UnitValue(0.0), n);
  const NDimInterval one = degenerate(UnitValue(1.0), n);
  const std::vector<NDimInterval> zeros(arity_, zero), ones(arity_, one);
  const NDimInterval f0 = fn_(zeros);
  const NDimInterval f1 = fn_(ones);
  if (!near(f0, zero, kBoundaryTolerance) || !near(f1, one, kBoundaryTolerance)) {
    throw ContractViolation("'" + name_ + "' violates F(/0/..)=/0/ or F(/1/..)=/1/",
                            "boundary");
  }
}

NDimInterval NDimAggregation::operator()(std::span<const NDimInterval> xs) const {
  requireArgs(xs, arity_, dimension(), name_);
  return fn_(xs);
}

OrderCompatibility orderGate(const AdmissibleOrder& order, const SamplingConfig& cfg) {
  static std::mutex mu;
  static std::map<std::string, OrderCompatibility> cache;
  const std::string key = order.spec().toJson().dump() + "|" + std::to_string(cfg.seed) +
                          "|" + std::to_string(cfg.samples);
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  OrderCompatibility result = checkOrderCompatibility(order, cfg);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(result)).first->second;
}

NDimAggregation liftComponentwise(std::vector<ScalarAggregation> components,
                                  AdmissibleOrder order, const SamplingConfig& cfg) {
  const std::size_t n = order.dimension();
  if (components.size() != n) {
    throw ValidationError("lift needs one component per dimension (" + std::to_string(n) +
                          "), got " + std::to_string(components.size()),
                          "components");
  }
  const std::size_t m = components.front().arity();
  for (std::size_t i = 0; i < n; ++i) {
    if (components[i].arity() != m) {
      throw ValidationError("lift components must share one arity",
                            "components[" + std::to_string(i) + "]");
    }
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const CompatibilityReport d = dominates(components[i], components[i + 1], cfg);
    if (!d.holds) {
      throw ContractViolation("lift needs A_" + std::to_string(i + 1) + " <= A_" +
                                  std::to_string(i + 2) + " (" + components[i].name() +
                                  " vs " + components[i + 1].name() + ")",
                              "dominance");
    }
  }

  json desc{{"components", json::array()}};
  for (const auto& c : components) desc["components"].push_back(c.descriptor());

  auto fn = [components = std::move(components), m, n](std::span<const NDimInterval> xs) {
    std::vector<double> out(n);
    std::vector<double> column(m);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < m; ++j) column[j] = xs[j][i];
      out[i] = components[i](column);
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (out[i] > out[i + 1]) {
        throw ContractViolation("lift produced an unsorted tuple at component " +
                                    std::to_string(i + 1),
                                "lift-sortedness");
      }
    }
    return NDimInterval(std::move(out));
  };
  return NDimAggregation("lift", m, std::move(order), std::move(desc), std::move(fn));
}

NDimAggregation ndimOWA(AdmissibleOrder order, WeightingVector omega,
                        const SamplingConfig& cfg) {
  const OrderCompatibility gate = orderGate(order, cfg);
  for (const CompatibilityReport* r : {&gate.sv8, &gate.sv9}) {
    if (!r->holds) {
      throw ContractViolation("ndimOWA needs an order compatible with the semi-vector "
                              "space; " + order.label() + " fails " + r->axiom,
                              r->axiom);
    }
  }
  const std::size_t m = omega.size();
  std::vector<double> w(omega.values().begin(), omega.values().end());
  json desc{{"omega", weightsJson(omega)}, {"order", order.spec().toJson()}};
  auto fn = [w, order](std::span<const NDimInterval> xs) {
    std::vector<const NDimInterval*> sorted;
    sorted.reserve(xs.size());
    for (const auto& x : xs) sorted.push_back(&x);
    std::stable_sort(sorted.begin(), sorted.end(), [&](const auto* a, const auto* b) {
      return order.less(*b, *a);
    });
    for (std::size_t j = 0; j + 1 < sorted.size(); ++j) {
      if (order.compare(*sorted[j], *sorted[j + 1]) == 0 && *sorted[j] != *sorted[j + 1]) {
        throw ContractViolation("order reports distinct tuples as equal", "antisymmetry");
      }
    }
    return fold(w, sorted);
  };
  return NDimAggregation("ndimOWA", m, std::move(order), std::move(desc), std::move(fn));
}

NDimAggregation ndimWeightedAverage(WeightingVector omega, AdmissibleOrder order,
                                    const SamplingConfig& cfg) {
  const OrderCompatibility gate = orderGate(order, cfg);
  std::vector<std::string> warnings;
  for (const CompatibilityReport* r : {&gate.sv8, &gate.sv9}) {
    if (!r->holds) {
      warnings.push_back(r->axiom + ": " + order.label() +
                         " is not compatible with the semi-vector space, so "
                         "monotonicity of the weighted average is not guaranteed");
    }
  }
  const std::size_t m = omega.size();
  std::vector<double> w(omega.values().begin(), omega.values().end());
  json desc{{"omega", weightsJson(omega)}};
  auto fn = [w](std::span<const NDimInterval> xs) {
    std::vector<const NDimInterval*> ptrs;
    ptrs.reserve(xs.size());
    for (const auto& x : xs) ptrs.push_back(&x);
    return fold(w, ptrs);
  };
  return NDimAggregation("ndimWeightedAverage", m, std::move(order), std::move(desc),
                         std::move(fn), std::move(warnings));
}

NDimAggregation orderMinimum(AdmissibleOrder order, std::size_t arity) {
  auto fn = [order](std::span<const NDimInterval> xs) { return minUnder(order, xs); };
  return NDimAggregation("orderMin", arity, std::move(order), json::object(), std::move(fn));
}

NDimAggregation orderMaximum(AdmissibleOrder order, std::size_t arity) {
  auto fn = [order](std::span<const NDimInterval> xs) { return maxUnder(order, xs); };
  return NDimAggregation("orderMax", arity, std::move(order), json::object(), std::move(fn));
}

std::vector<std::string> ndimAggregationNames() {
  return {"ndimWeightedAverage", "ndimOWA", "lift", "orderMin", "orderMax"};
}

namespace {

WeightingVector omegaOf(const json& d, std::size_t arity) {
  if (!d.contains("omega") || !d.at("omega").is_array()) {
    throw ValidationError("aggregator needs 'omega'", "omega");
  }
  std::vector<double> w;
  for (std::size_t i = 0; i < d.at("omega").size(); ++i) {
    const json& v = d.at("omega")[i];
    if (!v.is_number()) {
      throw ValidationError("expected a number", "omega[" + std::to_string(i) + "]");
    }
    w.push_back(v.get<double>());
  }
  if (w.size() != arity) {
    throw ValidationError("omega has length " + std::to_string(w.size()) + ", expected " +
                              std::to_string(arity),
                          "omega");
  }
  try {
    return WeightingVector(std::move(w));
  } catch (const ValidationError& e) {
    throw e.within("omega");
  }
}

}  // namespace

NDimAggregation makeNDimAggregation(const json& d, std::size_t arity,
                                    const AdmissibleOrder& fallback,
                                    const SamplingConfig& cfg) {
  if (!d.is_object() || !d.contains("name") || !d.at("name").is_string()) {
    throw ValidationError("aggregator needs a string 'name'", "name");
  }
  const std::string name = d.at("name").get<std::string>();
  AdmissibleOrder order = fallback;
  if (d.contains("order")) {
    try {
      order = AdmissibleOrder(AdmissibleOrderSpec::fromJson(d.at("order"), fallback.dimension()));
    } catch (const ValidationError& e) {
      throw e.within("order");
    }
  }

  if (name == "ndimWeightedAverage") {
    return ndimWeightedAverage(omegaOf(d, arity), std::move(order), cfg);
  }
  if (name == "ndimOWA") return ndimOWA(std::move(order), omegaOf(d, arity), cfg);
  if (name == "lift") {
    if (!d.contains("components") || !d.at("components").is_array()) {
      throw ValidationError("lift needs 'components'", "components");
    }
    std::vector<ScalarAggregation> comps;
    for (std::size_t i = 0; i < d.at("components").size(); ++i) {
      try {
        comps.push_back(makeScalarAggregation(d.at("components")[i], arity));
      } catch (const ValidationError& e) {
        throw e.within("components[" + std::to_string(i) + "]");
      }
    }
    return liftComponentwise(std::move(comps), std::move(order), cfg);
  }
  if (name == "orderMin") return orderMinimum(std::move(order), arity);
  if (name == "orderMax") return orderMaximum(std::move(order), arity);
  throw ValidationError("unknown aggregator '" + name + "'", "name");
}

std::vector<const CompatibilityReport*> Classification::all() const {
  return {&conjunctive, &disjunctive, &average, &mixed,    &idempotent,
          &strict,      &internal,    &symmetric, &monotone};
}

namespace {

std::vector<NDimInterval> sampleArgs(Sampler& s, std::size_t m, std::size_t n) {
  std::vector<NDimInterval> args;
  args.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    if (j > 0 && s.coin(5)) {
      args.push_back(args[s.index(j)]);
    } else if (j > 0 && s.coin(4)) {
      args.push_back(s.perturb(args[s.index(j)]));
    } else {
      args.push_back(s.interval(n));
    }
  }
  return args;
}

std::vector<double> oneBasedDoubles(const Permutation& p) {
  const std::vector<long long> v = p.oneBased();
  return {v.begin(), v.end()};
}

Witness argsWitness(const std::vector<NDimInterval>& args) {
  Witness w;
  for (std::size_t j = 0; j < args.size(); ++j) w.add("x" + std::to_string(j + 1), args[j]);
  return w;
}

// x ⪯ y once the coordinates of x lying within round-off of y's are set to
// y's. Lexicographic orders are discontinuous, so a one-ulp shortfall in an
// early coordinate would otherwise decide the comparison.
bool leqTol(const AdmissibleOrder& o, const NDimInterval& x, const NDimInterval& y,
            CompatibilityReport& rep) {
  if (o.leq(x, y)) return true;
  std::vector<double> snapped(x.components().begin(), x.components().end());
  double d = 0.0;
  for (std::size_t i = 0; i < snapped.size(); ++i) {
    const double gap = std::abs(snapped[i] - y[i]);
    if (gap > 0.0 && gap <= kClassificationTolerance) {
      snapped[i] = y[i];
      d = std::max(d, gap);
    }
  }
  if (d == 0.0) return false;
  if (!o.leq(sigma(snapped), y)) return false;
  rep.max_deviation = std::max(rep.max_deviation, d);
  return true;
}

bool eqTol(const NDimInterval& x, const NDimInterval& y, CompatibilityReport& rep) {
  const double d = deviation(x, y);
  if (d <= kClassificationTolerance) {
    rep.max_deviation = std::max(rep.max_deviation, d);
    return true;
  }
  return false;
}

// A y with x ≺ y, or nullopt if the draw produced no strictly larger tuple.
std::optional<NDimInterval> strictlyAbove(Sampler& s, const AdmissibleOrder& o,
                                          const NDimInterval& x) {
  for (int attempt = 0; attempt < 4; ++attempt) {
    NDimInterval y = s.coin(2) ? s.above(x) : s.perturb(x);
    if (o.less(x, y)) return y;
  }
  return std::nullopt;
}

}  // namespace

Classification classify(const NDimAggregation& f, const SamplingConfig& cfg) {
  Classification c{blank("conjunctive", cfg), blank("disjunctive", cfg),
                   blank("average", cfg),     blank("mixed", cfg),
                   blank("idempotent", cfg),  blank("strict", cfg),
                   blank("internal", cfg),    blank("symmetric", cfg),
                   blank("monotone", cfg)};
  const AdmissibleOrder& o = f.order();
  const std::size_t m = f.arity(), n = f.dimension();
  Sampler s(cfg.seed);

  for (std::size_t k = 0; k < cfg.samples; ++k) {
    std::vector<NDimInterval> args = sampleArgs(s, m, n);
    const NDimInterval fx = f(args);
    const NDimInterval lo = minUnder(o, args);
    const NDimInterval hi = maxUnder(o, args);

    auto withValue = [&](const char* label, const NDimInterval& v) {
      Witness w = argsWitness(args);
      w.add("F(x)", fx).add(label, v);
      return w;
    };
    const bool below = leqTol(o, fx, lo, c.conjunctive);
    const bool above = leqTol(o, hi, fx, c.disjunctive);
    if (!below) c.conjunctive.fail(withValue("min", lo));
    if (!above) c.disjunctive.fail(withValue("max", hi));
    const bool ge_lo = leqTol(o, lo, fx, c.average);
    const bool le_hi = leqTol(o, fx, hi, c.average);
    if (!ge_lo) c.average.fail(withValue("min", lo));
    else if (!le_hi) c.average.fail(withValue("max", hi));

    bool is_arg = false;
    for (const auto& a : args) is_arg = is_arg || eqTol(fx, a, c.internal);
    if (!is_arg) c.internal.fail(withValue("F(x)", fx));

    const NDimInterval x = args[s.index(m)];
    const std::vector<NDimInterval> same(m, x);
    const NDimInterval fxx = f(same);
    if (!eqTol(fxx, x, c.idempotent)) {
      Witness w;
      w.add("x", x).add("F(x,...,x)", fxx);
      c.idempotent.fail(std::move(w));
    }

    const Permutation rho = s.permutation(m);
    std::vector<NDimInterval> permuted(m);
    for (std::size_t j = 0; j < m; ++j) permuted[j] = args[rho[j]];
    const NDimInterval fp = f(permuted);
    if (!eqTol(fx, fp, c.symmetric)) {
      Witness w = argsWitness(args);
      w.add("rho", oneBasedDoubles(rho));
      w.add("F(x)", fx).add("F(rho x)", fp);
      c.symmetric.fail(std::move(w));
    }

    const std::size_t t = s.index(m);
    if (auto y = strictlyAbove(s, o, args[t])) {
      std::vector<NDimInterval> raised(args);
      raised[t] = *y;
      const NDimInterval fy = f(raised);
      auto pairWitness = [&] {
        Witness w = argsWitness(args);
        w.add("y", *y).add("j", static_cast<double>(t + 1)).add("F(x)", fx).add("F(x[j:=y])", fy);
        return w;
      };
      if (!leqTol(o, fx, fy, c.monotone)) c.monotone.fail(pairWitness());
      if (leqTol(o, fy, fx, c.strict)) c.strict.fail(pairWitness());
    }
  }

  if (c.conjunctive.holds || c.disjunctive.holds || c.average.holds) {
    Witness w;
    w.note = std::string(c.conjunctive.holds ? "conjunctive" :
                         c.disjunctive.holds ? "disjunctive" : "average") +
             " held on every sample";
    c.mixed.fail(std::move(w));
    c.mixed.violations = 0;
  }
  return c;
}

CompatibilityReport checkIdempotentIffAverage(const NDimAggregation& f,
                                              const SamplingConfig& cfg) {
  const Classification c = classify(f, cfg);
  CompatibilityReport rep = blank("idempotent-iff-average", cfg);
  rep.max_deviation = std::max(c.idempotent.max_deviation, c.average.max_deviation);
  rep.detail = std::string("idempotent=") + (c.idempotent.holds ? "true" : "false") +
               " average=" + (c.average.holds ? "true" : "false");
  if (c.idempotent.holds != c.average.holds) {
    Witness w = c.idempotent.holds ? *c.average.witness : *c.idempotent.witness;
    w.note = c.idempotent.holds ? "idempotent on all samples but the average sandwich failed"
                                : "average on all samples but idempotence failed";
    rep.fail(std::move(w));
  }
  return rep;
}

MwProperties checkMwProperties(const WeightingVector& omega, const Permutation& tau,
                               const SamplingConfig& cfg) {
  MwProperties out{blank("strict", cfg), blank("symmetric", cfg), blank("additive", cfg),
                   blank("additive-unsaturated", cfg), blank("homogeneous", cfg)};
  const std::size_t m = omega.size(), n = tau.size();
  const AdmissibleOrder order(AdmissibleOrderSpec::lexTau(tau));
  const std::vector<double> w(omega.values().begin(), omega.values().end());
  auto mw = [&](const std::vector<NDimInterval>& xs) {
    std::vector<const NDimInterval*> p;
    for (const auto& x : xs) p.push_back(&x);
    return fold(w, p);
  };
  const NDimInterval zero = degenerate(UnitValue(0.0), n);
  const NDimInterval one = degenerate(UnitValue(1.0), n);

  // Basis arguments e_j = (/0/, ..., /1/ at j, ..., /0/) give M(e_j) = /w_j/.
  std::vector<NDimInterval> basis_values;
  const std::vector<NDimInterval> zeros(m, zero);
  const NDimInterval at_zero = mw(zeros);
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<NDimInterval> e(zeros);
    e[j] = one;
    basis_values.push_back(mw(e));
    if (!order.less(at_zero, basis_values.back())) {
      Witness wit;
      wit.add("j", static_cast<double>(j + 1)).add("M(/0/,...)", at_zero).add("M(e_j)",
                                                                             basis_values.back());
      wit.note = "raising argument j from /0/ to /1/ did not raise M";
      out.strict.fail(std::move(wit));
    }
  }
  for (std::size_t j = 0; j < m && out.symmetric.holds; ++j) {
    for (std::size_t k = j + 1; k < m; ++k) {
      if (deviation(basis_values[j], basis_values[k]) > kClassificationTolerance) {
        Witness wit;
        wit.add("j", static_cast<double>(j + 1)).add("k", static_cast<double>(k + 1));
        wit.add("M(e_j)", basis_values[j]).add("M(e_k)", basis_values[k]);
        wit.note = "swapping arguments j and k changes the value";
        out.symmetric.fail(std::move(wit));
        break;
      }
    }
  }

  Sampler s(cfg.seed);
  std::size_t guarded_skips = 0;
  for (std::size_t k = 0; k < cfg.samples; ++k) {
    std::vector<NDimInterval> xs(m), ys(m);
    for (std::size_t j = 0; j < m; ++j) xs[j] = s.interval(n), ys[j] = s.interval(n);
    const NDimInterval mx = mw(xs);

    // Strictness with the saturation guard.
    const std::size_t t = s.index(m);
    if (auto y = strictlyAbove(s, order, xs[t])) {
      std::vector<NDimInterval> rest(xs);
      rest[t] = zero;
      const NDimInterval z = mw(rest);
      if (z[n - 1] <= 1.0 - w[t]) {
        std::vector<NDimInterval> raised(xs);
        raised[t] = *y;
        const NDimInterval my = mw(raised);
        if (!order.less(mx, my)) {
          Witness wit = argsWitness(xs);
          wit.add("y", *y).add("j", static_cast<double>(t + 1)).add("M(x)", mx).add("M(x[j:=y])", my);
          out.strict.fail(std::move(wit));
        }
      } else {
        ++guarded_skips;
      }
    }

    // Symmetry under a random permutation.
    const Permutation rho = s.permutation(m);
    std::vector<NDimInterval> permuted(m);
    for (std::size_t j = 0; j < m; ++j) permuted[j] = xs[rho[j]];
    const NDimInterval mp = mw(permuted);
    const double dsym = deviation(mx, mp);
    if (dsym > kClassificationTolerance) {
      Witness wit = argsWitness(xs);
      wit.add("rho", oneBasedDoubles(rho));
      wit.add("M(x)", mx).add("M(rho x)", mp);
      out.symmetric.fail(std::move(wit));
    } else {
      out.symmetric.max_deviation = std::max(out.symmetric.max_deviation, dsym);
    }

    // Additivity, in general and on unsaturated inputs.
    auto additivity = [&](const std::vector<NDimInterval>& a, const std::vector<NDimInterval>& b,
                          CompatibilityReport& rep) {
      std::vector<NDimInterval> sum(m);
      for (std::size_t j = 0; j < m; ++j) sum[j] = vecAdd(a[j], b[j]);
      const NDimInterval lhs = mw(sum);
      const NDimInterval rhs = vecAdd(mw(a), mw(b));
      const double d = deviation(lhs, rhs);
      if (d > kClassificationTolerance) {
        Witness wit;
        for (std::size_t j = 0; j < m; ++j) {
          wit.add("x" + std::to_string(j + 1), a[j]).add("y" + std::to_string(j + 1), b[j]);
        }
        wit.add("M(x+y)", lhs).add("M(x)+M(y)", rhs);
        rep.fail(std::move(wit));
      } else {
        rep.max_deviation = std::max(rep.max_deviation, d);
      }
    };
    additivity(xs, ys, out.additive);
    std::vector<NDimInterval> hx(m), hy(m);
    for (std::size_t j = 0; j < m; ++j) {
      hx[j] = s.intervalBelow(n, 0.5);
      hy[j] = s.intervalBelow(n, 0.5);
    }
    additivity(hx, hy, out.additive_unsaturated);

    // Homogeneity.
    const double lambda = s.unit();
    std::vector<NDimInterval> scaled(m);
    for (std::size_t j = 0; j < m; ++j) scaled[j] = scalarMul(UnitValue(lambda), xs[j]);
    const NDimInterval lhs = mw(scaled);
    const NDimInterval rhs = scalarMul(UnitValue(lambda), mx);
    const double dh = deviation(lhs, rhs);
    if (dh > kClassificationTolerance) {
      Witness wit = argsWitness(xs);
      wit.add("lambda", lambda).add("M(lambda x)", lhs).add("lambda M(x)", rhs);
      out.homogeneous.fail(std::move(wit));
    } else {
      out.homogeneous.max_deviation = std::max(out.homogeneous.max_deviation, dh);
    }
  }
  out.strict.detail = std::to_string(guarded_skips) + " samples skipped by the saturation guard";
  return out;
}

}  // namespace ndagg
