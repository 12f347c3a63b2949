#include "ndagg/scalar_agg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "ndagg/error.hpp"

namespace ndagg {

namespace {

using nlohmann::json;

constexpr std::uint64_t kRegistrationSeed = 0x5ca1a4a99;
constexpr std::size_t kRegistrationSamples = 256;
constexpr std::size_t kMaxCornerArity = 10;
constexpr double kSlack = 1e-12;

json weightsJson(const WeightingVector& w) {
  return json(std::vector<double>(w.values().begin(), w.values().end()));
}

CompatibilityReport blank(std::string axiom, const SamplingConfig& cfg) {
  CompatibilityReport r;
  r.axiom = std::move(axiom);
  r.seed = cfg.seed;
  r.samples = cfg.samples;
  return r;
}

std::vector<double> sortedTuple(Sampler& s, std::size_t m) {
  std::vector<double> v = s.tuple(m);
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

ScalarAggregation::ScalarAggregation(std::string name, std::size_t arity,
                                     nlohmann::json params, Fn fn, Capabilities caps,
                                     bool classification_exempt)
    : name_(std::move(name)),
      arity_(arity),
      params_(std::move(params)),
      fn_(std::move(fn)),
      caps_(caps),
      exempt_(classification_exempt) {
  if (arity_ < 2) {
    throw ValidationError("aggregation '" + name_ + "' needs arity m >= 2");
  }
  if (!params_.is_object()) params_ = json::object();
  params_["name"] = name_;

  CompatibilityReport boundary;
  boundary.axiom = "boundary";
  boundary.samples = 2;
  const std::vector<double> zeros(arity_, 0.0), ones(arity_, 1.0);
  const double at0 = fn_(zeros);
  const double at1 = fn_(ones);
  if (!(std::abs(at0) <= kBoundaryTolerance) ||
      !(std::abs(at1 - 1.0) <= kBoundaryTolerance)) {
    Witness w;
    w.add("A(0,...,0)", at0).add("A(1,...,1)", at1);
    boundary.fail(std::move(w));
    throw ContractViolation("aggregation '" + name_ +
                                "' violates A(0,...,0)=0 / A(1,...,1)=1",
                            "boundary");
  }
  findings_.push_back(boundary);

  CompatibilityReport mono =
      checkMonotone(*this, {kRegistrationSeed, kRegistrationSamples});
  if (!mono.holds && !exempt_) {
    throw ContractViolation("aggregation '" + name_ + "' is not monotone",
                            "monotonicity");
  }
  findings_.push_back(std::move(mono));
}

double ScalarAggregation::operator()(std::span<const double> xs) const {
  if (xs.size() != arity_) {
    throw ValidationError("aggregation '" + name_ + "' expects " +
                          std::to_string(arity_) + " arguments, got " +
                          std::to_string(xs.size()));
  }
  for (double x : xs) {
    if (!(x >= 0.0 && x <= 1.0)) {
      throw ValidationError("aggregation argument outside [0,1]");
    }
  }
  const double v = fn_(xs);
  if (v >= 0.0 && v <= 1.0) return v;
  if (v < 0.0 && v >= -kBoundaryTolerance) return 0.0;
  if (v > 1.0 && v <= 1.0 + kBoundaryTolerance) return 1.0;
  throw ContractViolation("aggregation '" + name_ + "' left [0,1]", "closure");
}

ScalarAggregation pR(double r, std::size_t arity) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw ValidationError("P^r needs r > 0");
  }
  if (arity > 60) throw ValidationError("P^r arity too large");
  const double denom = std::ldexp(1.0, static_cast<int>(arity)) - 1.0;
  return ScalarAggregation(
      "pR", arity, json{{"r", r}},
      [r, denom](std::span<const double> xs) {
        double prod = 1.0;
        for (double x : xs) prod *= std::pow(x, r) + 1.0;
        return (prod - 1.0) / denom;
      },
      Capabilities{true, std::nullopt, false});
}

namespace {

ScalarAggregation argExtremum(const WeightingVector& omega, bool maximise) {
  std::vector<double> w(omega.values().begin(), omega.values().end());
  return ScalarAggregation(
      maximise ? "weightedMax" : "weightedMin", w.size(),
      json{{"omega", weightsJson(omega)}},
      [w, maximise](std::span<const double> xs) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < xs.size(); ++i) {
          const double cand = w[i] * xs[i];
          const double cur = w[best] * xs[best];
          if (maximise ? cand > cur : cand < cur) best = i;
        }
        return xs[best];
      },
      Capabilities{false, 1.0, true}, true);
}

}  // namespace

ScalarAggregation weightedMin(const WeightingVector& omega) {
  return argExtremum(omega, false);
}

ScalarAggregation weightedMax(const WeightingVector& omega) {
  return argExtremum(omega, true);
}

ScalarAggregation weightedAverage(const WeightingVector& omega) {
  std::vector<double> w(omega.values().begin(), omega.values().end());
  return ScalarAggregation(
      "weightedAverage", w.size(), json{{"omega", weightsJson(omega)}},
      [w](std::span<const double> xs) {
        double s = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i) s += w[i] * xs[i];
        return s;
      },
      Capabilities{omega.strictlyPositive(), 1.0, false});
}

ScalarAggregation geometricMean(const WeightingVector& omega) {
  std::vector<double> w(omega.values().begin(), omega.values().end());
  return ScalarAggregation(
      "geometricMean", w.size(), json{{"omega", weightsJson(omega)}},
      [w](std::span<const double> xs) {
        double p = 1.0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
          if (w[i] != 0.0) p *= std::pow(xs[i], w[i]);
        }
        return p;
      },
      // Σ w_i = 1 makes G_ω(λx) = λ·G_ω(x).
      Capabilities{omega.strictlyPositive(), 1.0, false});
}

ScalarAggregation maxExp(std::vector<double> e) {
  for (double ei : e) {
    if (!(ei > 0.0) || !std::isfinite(ei)) {
      throw ValidationError("max_e needs every exponent > 0");
    }
  }
  const bool uniform =
      !e.empty() && std::all_of(e.begin(), e.end(), [&](double v) { return v == e[0]; });
  Capabilities caps{false, std::nullopt, std::nullopt};
  if (uniform) caps.homogeneous_order = e[0];
  if (uniform && e[0] == 1.0) caps.internal = true;
  const std::size_t m = e.size();
  return ScalarAggregation(
      "maxExp", m, json{{"e", e}},
      [e = std::move(e)](std::span<const double> xs) {
        double best = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
          best = std::max(best, std::pow(xs[i], e[i]));
        }
        return best;
      },
      caps);
}

ScalarAggregation owa(const WeightingVector& omega) {
  std::vector<double> w(omega.values().begin(), omega.values().end());
  const bool selector =
      std::count(w.begin(), w.end(), 1.0) == 1;
  return ScalarAggregation(
      "owa", w.size(), json{{"omega", weightsJson(omega)}},
      [w](std::span<const double> xs) {
        std::vector<double> v(xs.begin(), xs.end());
        std::stable_sort(v.begin(), v.end(), std::greater<>());
        double s = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) s += w[i] * v[i];
        return s;
      },
      Capabilities{omega.strictlyPositive(), 1.0, selector});
}

ScalarAggregation minimum(std::size_t arity) {
  return ScalarAggregation(
      "min", arity, json::object(),
      [](std::span<const double> xs) { return *std::min_element(xs.begin(), xs.end()); },
      Capabilities{false, 1.0, true});
}

ScalarAggregation maximum(std::size_t arity) {
  return ScalarAggregation(
      "max", arity, json::object(),
      [](std::span<const double> xs) { return *std::max_element(xs.begin(), xs.end()); },
      Capabilities{false, 1.0, true});
}

ScalarAggregation arithmeticMean(std::size_t arity) {
  return ScalarAggregation(
      "mean", arity, json::object(),
      [](std::span<const double> xs) {
        return std::accumulate(xs.begin(), xs.end(), 0.0) /
               static_cast<double>(xs.size());
      },
      Capabilities{true, 1.0, false});
}

std::vector<std::string> scalarAggregationNames() {
  return {"pR",     "weightedMin", "weightedMax", "weightedAverage", "geometricMean",
          "maxExp", "owa",         "min",         "max",             "mean"};
}

namespace {

std::vector<double> numberArray(const json& d, const char* key) {
  if (!d.contains(key) || !d.at(key).is_array()) {
    throw ValidationError(std::string("missing array parameter '") + key + "'", key);
  }
  std::vector<double> out;
  for (std::size_t i = 0; i < d.at(key).size(); ++i) {
    const json& v = d.at(key)[i];
    if (!v.is_number()) {
      throw ValidationError("expected a number",
                            std::string(key) + "[" + std::to_string(i) + "]");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

WeightingVector omegaOf(const json& d, std::optional<std::size_t> arity) {
  WeightingVector w;
  try {
    w = WeightingVector(numberArray(d, "omega"));
  } catch (const ValidationError& e) {
    throw e.path().empty() ? e.within("omega") : e;
  }
  if (arity && w.size() != *arity) {
    throw ValidationError("omega has length " + std::to_string(w.size()) +
                              ", expected " + std::to_string(*arity),
                          "omega");
  }
  return w;
}

std::size_t needArity(std::optional<std::size_t> arity, const std::string& name) {
  if (!arity) throw ValidationError("aggregation '" + name + "' needs an arity");
  return *arity;
}

}  // namespace

ScalarAggregation makeScalarAggregation(const json& d, std::optional<std::size_t> arity) {
  if (!d.is_object() || !d.contains("name") || !d.at("name").is_string()) {
    throw ValidationError("aggregation descriptor needs a string 'name'", "name");
  }
  const std::string name = d.at("name").get<std::string>();
  if (name == "pR") {
    if (!d.contains("r") || !d.at("r").is_number()) {
      throw ValidationError("P^r needs a numeric 'r'", "r");
    }
    return pR(d.at("r").get<double>(), needArity(arity, name));
  }
  if (name == "weightedMin") return weightedMin(omegaOf(d, arity));
  if (name == "weightedMax") return weightedMax(omegaOf(d, arity));
  if (name == "weightedAverage") return weightedAverage(omegaOf(d, arity));
  if (name == "geometricMean") return geometricMean(omegaOf(d, arity));
  if (name == "owa") return owa(omegaOf(d, arity));
  if (name == "maxExp") {
    std::vector<double> e = numberArray(d, "e");
    if (arity && e.size() != *arity) {
      throw ValidationError("e has length " + std::to_string(e.size()) +
                                ", expected " + std::to_string(*arity),
                            "e");
    }
    return maxExp(std::move(e));
  }
  if (name == "min") return minimum(needArity(arity, name));
  if (name == "max") return maximum(needArity(arity, name));
  if (name == "mean") return arithmeticMean(needArity(arity, name));
  throw ValidationError("unknown aggregation '" + name + "'", "name");
}

CompatibilityReport dominates(const ScalarAggregation& a, const ScalarAggregation& b,
                              const SamplingConfig& cfg) {
  if (a.arity() != b.arity()) {
    throw ValidationError("dominance needs equal arity");
  }
  CompatibilityReport rep = blank("dominance", cfg);
  Sampler s(cfg.seed);
  for (std::size_t k = 0; k < cfg.samples; ++k) {
    const std::vector<double> x = s.tuple(a.arity());
    const double va = a(x), vb = b(x);
    if (va > vb + kSlack) {
      Witness w;
      w.add("x", x).add("A(x)", va).add("B(x)", vb);
      w.note = a.name() + " exceeds " + b.name();
      rep.fail(std::move(w));
    }
  }
  return rep;
}

CompatibilityReport checkHomogeneity(const ScalarAggregation& a, double k,
                                     const SamplingConfig& cfg) {
  CompatibilityReport rep = blank("homogeneity", cfg);
  Sampler s(cfg.seed);
  for (std::size_t t = 0; t < cfg.samples; ++t) {
    const std::vector<double> x = s.tuple(a.arity());
    const double lambda = s.unit();
    std::vector<double> lx(x);
    for (double& v : lx) v *= lambda;
    const double lhs = a(lx);
    const double rhs = std::pow(lambda, k) * a(x);
    if (std::abs(lhs - rhs) > kSlack) {
      Witness w;
      w.add("x", x).add("lambda", lambda).add("k", k).add("A(lambda x)", lhs).add(
          "lambda^k A(x)", rhs);
      rep.fail(std::move(w));
    }
  }
  return rep;
}

CompatibilityReport checkStrictOnLn(const ScalarAggregation& a, const SamplingConfig& cfg) {
  CompatibilityReport rep = blank("strict-on-Ln", cfg);
  Sampler s(cfg.seed);
  const std::size_t m = a.arity();
  for (std::size_t t = 0; t < cfg.samples; ++t) {
    const std::vector<double> x = sortedTuple(s, m);
    const std::size_t i = s.index(m);
    const double hi = i + 1 < m ? x[i + 1] : 1.0;
    if (!(x[i] < hi)) continue;
    std::vector<double> y(x);
    // A grid point in (x_i, hi]; the grid step is the smallest increment.
    const double room = hi - x[i];
    y[i] = x[i] + std::max(s.upTo(room), 1.0 / static_cast<double>(Sampler::kGrid));
    if (y[i] > hi) y[i] = hi;
    const double ax = a(x), ay = a(y);
    if (!(ax < ay)) {
      Witness w;
      w.add("x", x).add("y", y).add("A(x)", ax).add("A(y)", ay);
      w.note = "raising argument " + std::to_string(i + 1) + " did not raise A";
      rep.fail(std::move(w));
    }
  }
  return rep;
}

CompatibilityReport checkInternal(const ScalarAggregation& a, const SamplingConfig& cfg) {
  CompatibilityReport rep = blank("internal", cfg);
  Sampler s(cfg.seed);
  for (std::size_t t = 0; t < cfg.samples; ++t) {
    const std::vector<double> x = s.tuple(a.arity());
    const double v = a(x);
    if (std::find(x.begin(), x.end(), v) == x.end()) {
      Witness w;
      w.add("x", x).add("A(x)", v);
      rep.fail(std::move(w));
    }
  }
  return rep;
}

CompatibilityReport checkMonotone(const ScalarAggregation& a, const SamplingConfig& cfg) {
  CompatibilityReport rep = blank("monotonicity", cfg);
  const std::size_t m = a.arity();
  auto probe = [&](const std::vector<double>& x, const std::vector<double>& y) {
    const double ax = a.raw(x), ay = a.raw(y);
    if (ax > ay + kSlack) {
      Witness w;
      w.add("x", x).add("y", y).add("A(x)", ax).add("A(y)", ay);
      w.note = "x <= y componentwise but A(x) > A(y)";
      rep.fail(std::move(w));
    }
  };

  if (m <= kMaxCornerArity) {
    const std::size_t corners = std::size_t{1} << m;
    for (std::size_t mask = 0; mask < corners; ++mask) {
      std::vector<double> x(m);
      for (std::size_t i = 0; i < m; ++i) x[i] = (mask >> i) & 1u ? 1.0 : 0.0;
      for (std::size_t i = 0; i < m; ++i) {
        if (x[i] == 1.0) continue;
        std::vector<double> y(x);
        y[i] = 1.0;
        probe(x, y);
      }
    }
    rep.samples += corners;
  }

  Sampler s(cfg.seed);
  for (std::size_t t = 0; t < cfg.samples; ++t) {
    const std::vector<double> x = s.tuple(m);
    std::vector<double> y(x);
    if (s.coin(2)) {
      const std::size_t i = s.index(m);
      y[i] = std::min(1.0, y[i] + s.upTo(1.0 - y[i]));
    } else {
      for (double& v : y) v = std::min(1.0, v + s.upTo(1.0 - v));
    }
    probe(x, y);
  }
  return rep;
}

}  // namespace ndagg
