#include "ndagg/semivector.hpp"

#include <algorithm>
#include <cmath>

#include "ndagg/error.hpp"

namespace ndagg {

UnitValue boundedAdd(UnitValue r, UnitValue s) {
  return UnitValue(boundedAdd(r.value(), s.value()));
}

NDimInterval scalarMul(UnitValue r, const NDimInterval& x) {
  if (x.empty()) throw ValidationError("empty n-dimensional interval");
  std::vector<double> out(x.dimension());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = r.value() * x[i];
  return NDimInterval(std::move(out));
}

NDimInterval vecAdd(const NDimInterval& x, const NDimInterval& y) {
  requireSameDimension(x, y);
  std::vector<double> out(x.dimension());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = boundedAdd(x[i], y[i]);
  return NDimInterval(std::move(out));
}

std::optional<NDimInterval> naturalPreorderWitness(const NDimInterval& x,
                                                   const NDimInterval& y) {
  if (!productOrderLeq(x, y)) return std::nullopt;
  std::vector<double> z(x.dimension());
  double prev = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (y[i] < 1.0) {
      const double forced = y[i] - x[i];
      if (forced < prev - kNaturalPreorderTolerance) return std::nullopt;
      z[i] = std::max(forced, prev);
    } else {
      z[i] = std::max(prev, 1.0 - x[i]);
    }
    prev = z[i];
  }
  return NDimInterval(std::move(z));
}

bool naturalPreorderLeq(const NDimInterval& x, const NDimInterval& y) {
  return naturalPreorderWitness(x, y).has_value();
}

ScalarAlgebra ScalarAlgebra::unitInterval() {
  return {[](double r, double s) { return boundedAdd(r, s); },
          [](double r, double s) { return r * s; }, 0.0, 1.0};
}

VectorAlgebra VectorAlgebra::lattice() {
  return {[](const NDimInterval& x, const NDimInterval& y) { return vecAdd(x, y); },
          [](double r, const NDimInterval& x) { return scalarMul(UnitValue(r), x); },
          [](std::size_t n) { return degenerate(UnitValue(0.0), n); }};
}

namespace {

CompatibilityReport blank(std::string axiom, const SamplingConfig& cfg) {
  CompatibilityReport r;
  r.axiom = std::move(axiom);
  r.seed = cfg.seed;
  r.samples = cfg.samples;
  return r;
}

bool inUnit(double v) { return v >= 0.0 && v <= 1.0; }

Witness scalars3(double r, double s, double t) {
  Witness w;
  w.add("r", r).add("s", s).add("t", t);
  return w;
}

}  // namespace

std::vector<CompatibilityReport> checkSemifieldAxioms(const ScalarAlgebra& a,
                                                      const SamplingConfig& cfg) {
  std::vector<CompatibilityReport> out;
  for (const char* id : {"closure", "WF1", "WF2", "WF3", "WF4", "WF5"}) {
    out.push_back(blank(id, cfg));
  }
  auto& closure = out[0];
  auto& wf1 = out[1];
  auto& wf2 = out[2];
  auto& wf3 = out[3];
  auto& wf4 = out[4];
  auto& wf5 = out[5];

  Sampler sampler(cfg.seed);
  for (std::size_t k = 0; k < cfg.samples; ++k) {
    const double r = sampler.unit();
    const double s = sampler.unit();
    const double t = sampler.unit();

    const double sum = a.add(r, s);
    const double prod = a.mul(r, s);
    if (!inUnit(sum) || !inUnit(prod)) {
      Witness w;
      w.add("r", r).add("s", s).add("r+s", sum).add("r*s", prod);
      closure.fail(std::move(w));
    }
    {
      const double l = a.add(r, a.add(s, t));
      const double rr = a.add(a.add(r, s), t);
      const double lm = a.mul(r, a.mul(s, t));
      const double rm = a.mul(a.mul(r, s), t);
      if (l != rr || lm != rm) {
        Witness w = scalars3(r, s, t);
        w.add("r+(s+t)", l).add("(r+s)+t", rr).add("r*(s*t)", lm).add("(r*s)*t", rm);
        wf1.fail(std::move(w));
      }
    }
    if (a.add(r, s) != a.add(s, r) || a.mul(r, s) != a.mul(s, r)) {
      Witness w;
      w.add("r", r).add("s", s);
      wf2.fail(std::move(w));
    }
    {
      const double l = a.mul(r, a.add(s, t));
      const double rr = a.add(a.mul(r, s), a.mul(r, t));
      if (l != rr) {
        Witness w = scalars3(r, s, t);
        w.add("r*(s+t)", l).add("r*s+r*t", rr);
        wf3.fail(std::move(w));
      }
    }
    if (a.add(r, a.zero) != r) {
      Witness w;
      w.add("r", r).add("r+0", a.add(r, a.zero));
      wf4.fail(std::move(w));
    }
    if (a.mul(a.one, r) != r) {
      Witness w;
      w.add("r", r).add("1*r", a.mul(a.one, r));
      wf5.fail(std::move(w));
    }
  }
  return out;
}

std::vector<CompatibilityReport> checkSemiVectorAxioms(std::size_t n,
                                                       const SamplingConfig& cfg,
                                                       const VectorAlgebra& v,
                                                       const ScalarAlgebra& a) {
  std::vector<CompatibilityReport> out;
  for (const char* id :
       {"closure", "SV1", "SV2", "SV3", "SV4", "SV5", "SV6", "SV7"}) {
    out.push_back(blank(id, cfg));
  }

  Sampler sampler(cfg.seed);
  for (std::size_t k = 0; k < cfg.samples; ++k) {
    const NDimInterval x = sampler.interval(n);
    const NDimInterval y = sampler.interval(n);
    const NDimInterval z = sampler.interval(n);
    const double r = sampler.unit();
    const double s = sampler.unit();

    auto base = [&] {
      Witness w;
      w.add("x", x).add("y", y).add("z", z).add("r", r).add("s", s);
      return w;
    };

    try {
      (void)v.add(x, y);
      (void)v.mul(r, x);
    } catch (const ValidationError& e) {
      Witness w = base();
      w.note = e.what();
      out[0].fail(std::move(w));
      continue;
    }

    auto law = [&](std::size_t slot, auto lhs, auto rhs, const char* lname,
                   const char* rname) {
      try {
        const NDimInterval l = lhs();
        const NDimInterval rr = rhs();
        if (l != rr) {
          Witness w = base();
          w.add(lname, l).add(rname, rr);
          out[slot].fail(std::move(w));
        }
      } catch (const ValidationError& e) {
        Witness w = base();
        w.note = e.what();
        out[0].fail(std::move(w));
      }
    };

    law(1, [&] { return v.add(x, v.add(y, z)); },
        [&] { return v.add(v.add(x, y), z); }, "x+(y+z)", "(x+y)+z");
    law(2, [&] { return v.add(x, y); }, [&] { return v.add(y, x); }, "x+y", "y+x");
    law(3, [&] { return v.mul(r, v.mul(s, x)); },
        [&] { return v.mul(a.mul(r, s), x); }, "r*(s*x)", "(r.s)*x");
    law(4, [&] { return v.mul(a.one, x); }, [&] { return x; }, "1*x", "x");
    law(5, [&] { return v.mul(r, v.add(x, y)); },
        [&] { return v.add(v.mul(r, x), v.mul(r, y)); }, "r*(x+y)", "r*x+r*y");
    law(6, [&] { return v.mul(a.add(r, s), x); },
        [&] { return v.add(v.mul(r, x), v.mul(s, x)); }, "(r+s)*x", "r*x+s*x");
    law(7, [&] { return v.add(v.zero(n), x); }, [&] { return x; }, "0+x", "x");
  }
  return out;
}

std::vector<OrderTrial> publishedCompatibilityWitnesses(std::size_t n) {
  std::vector<OrderTrial> out;
  if (n >= 2) {
    std::vector<double> x(n, 1.0), y(n, 1.0), z(n, 1.0);
    x[0] = 0.5, x[1] = 0.6;
    y[0] = 0.3, y[1] = 0.9;
    z[0] = 0.1, z[1] = 0.3;
    out.push_back({NDimInterval(x), NDimInterval(y), NDimInterval(z), 0.5});
  }
  if (n == 4) {
    out.push_back({NDimInterval{0.4, 0.6, 0.7, 0.8}, NDimInterval{0.2, 0.2, 0.2, 0.9},
                   degenerate(UnitValue(0.0), 4), 0.5});
  }
  return out;
}

namespace {

void evaluateTrial(const Comparator& order, OrderTrial t, OrderCompatibility& out) {
  if (order(t.x, t.y) > 0) std::swap(t.x, t.y);

  const NDimInterval rx = scalarMul(UnitValue(t.r), t.x);
  const NDimInterval ry = scalarMul(UnitValue(t.r), t.y);
  if (order(rx, ry) > 0) {
    Witness w;
    w.add("x", t.x).add("y", t.y).add("r", t.r).add("r*x", rx).add("r*y", ry);
    w.note = "x ⪯ y but r⊙y ≺ r⊙x";
    out.sv8.fail(std::move(w));
  }

  const NDimInterval xz = vecAdd(t.x, t.z);
  const NDimInterval yz = vecAdd(t.y, t.z);
  if (order(xz, yz) > 0) {
    Witness w;
    w.add("x", t.x).add("y", t.y).add("z", t.z).add("x+z", xz).add("y+z", yz);
    w.note = "x ⪯ y but y⊕z ≺ x⊕z";
    out.sv9.fail(std::move(w));
  }
}

}  // namespace

OrderCompatibility checkOrderCompatibility(const Comparator& order, std::size_t n,
                                           const SamplingConfig& cfg,
                                           const std::vector<OrderTrial>& candidates) {
  OrderCompatibility out{blank("SV8", cfg), blank("SV9", cfg)};
  out.sv8.samples = out.sv9.samples = cfg.samples + candidates.size();

  for (const OrderTrial& t : candidates) {
    if (t.x.dimension() != n || t.y.dimension() != n || t.z.dimension() != n) {
      throw ValidationError("candidate trial has the wrong dimension");
    }
    evaluateTrial(order, t, out);
  }

  Sampler sampler(cfg.seed);
  for (std::size_t k = 0; k < cfg.samples; ++k) {
    OrderTrial t;
    t.x = sampler.interval(n);
    switch (sampler.below(3)) {
      case 0: t.y = sampler.interval(n); break;
      case 1: t.y = sampler.perturb(t.x); break;
      default: t.y = sampler.above(t.x); break;
    }
    if (sampler.coin(2)) {
      const NDimInterval& src = sampler.coin(2) ? t.x : t.y;
      t.z = degenerate(UnitValue(1.0 - src[sampler.index(n)]), n);
    } else {
      t.z = sampler.interval(n);
    }
    t.r = sampler.unit();
    evaluateTrial(order, std::move(t), out);
  }
  return out;
}

}  // namespace ndagg
