#include <gtest/gtest.h>

#include "ndagg/error.hpp"
#include "ndagg/ndim_agg.hpp"
#include "ndagg/semivector.hpp"

using namespace ndagg;

namespace {

AdmissibleOrder lexId(std::size_t n) {
  return AdmissibleOrder(AdmissibleOrderSpec::lexTau(Permutation::identity(n)));
}

AdmissibleOrder lex(std::vector<long long> tau) {
  return AdmissibleOrder(AdmissibleOrderSpec::lexTau(Permutation::fromOneBased(tau)));
}

std::string axiomOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const ContractViolation& e) {
    return e.axiom();
  }
  return "";
}

}  // namespace

TEST(WeightedAverage, FoldsWithBoundedSum) {
  const NDimAggregation m = ndimWeightedAverage(WeightingVector({0.5, 0.5}), lexId(2));
  EXPECT_EQ(m({NDimInterval{0.25, 0.5}, NDimInterval{0.75, 1.0}}), (NDimInterval{0.5, 0.75}));
  EXPECT_EQ(m({NDimInterval{0, 0}, NDimInterval{0, 0}}), (NDimInterval{0, 0}));
  EXPECT_EQ(m({NDimInterval{1, 1}, NDimInterval{1, 1}}), (NDimInterval{1, 1}));
  EXPECT_THROW(m({NDimInterval{0.1, 0.2}}), ValidationError);
  EXPECT_THROW(m({NDimInterval{0.1, 0.2}, NDimInterval{0.1, 0.2, 0.3}}), ValidationError);
}

TEST(WeightedAverage, NonIdentityTauOnlyWarns) {
  const NDimAggregation m = ndimWeightedAverage(WeightingVector({0.5, 0.5}), lex({2, 1}));
  ASSERT_EQ(m.warnings().size(), 1u);
  EXPECT_EQ(m.warnings()[0].rfind("SV9", 0), 0u);
  EXPECT_TRUE(ndimWeightedAverage(WeightingVector({0.5, 0.5}), lexId(2)).warnings().empty());
}

TEST(OWA, SortsByTheOrderThenWeights) {
  const NDimAggregation f = ndimOWA(lexId(2), WeightingVector({0.75, 0.25}));
  // The larger argument under ⪯_Id is (0.5, 0.5).
  EXPECT_EQ(f({NDimInterval{0.25, 1.0}, NDimInterval{0.5, 0.5}}), (NDimInterval{0.4375, 0.625}));
  EXPECT_EQ(f({NDimInterval{0.5, 0.5}, NDimInterval{0.25, 1.0}}), (NDimInterval{0.4375, 0.625}));
  EXPECT_EQ(f.descriptor()["name"], "ndimOWA");
}

TEST(OWA, GateRejectsIncompatibleOrders) {
  EXPECT_EQ(axiomOf([] { ndimOWA(lex({2, 1}), WeightingVector({0.5, 0.5})); }), "SV9");
  EXPECT_EQ(axiomOf([] {
              ndimOWA(AdmissibleOrder(AdmissibleOrderSpec::aggLex(
                          {{"name", "maxExp"}, {"e", {1, 2, 3, 4}}}, Permutation::identity(4))),
                      WeightingVector({0.5, 0.5}));
            }),
            "SV8");
}

TEST(Lift, ComponentwiseWithDominanceCheck) {
  const NDimAggregation f =
      liftComponentwise({minimum(2), arithmeticMean(2), maximum(2)}, lexId(3));
  EXPECT_EQ(f({NDimInterval{0.25, 0.5, 0.75}, NDimInterval{0.0, 0.5, 1.0}}),
            (NDimInterval{0.0, 0.5, 1.0}));
  EXPECT_EQ(axiomOf([] { liftComponentwise({maximum(2), minimum(2)}, lexId(2)); }), "dominance");
  EXPECT_THROW(liftComponentwise({minimum(2)}, lexId(2)), ValidationError);
}

TEST(OrderExtrema, PickByOrder) {
  const NDimAggregation lo = orderMinimum(lex({2, 1}), 2), hi = orderMaximum(lex({2, 1}), 2);
  const NDimInterval a{0.1, 0.9}, b{0.3, 0.5};
  EXPECT_EQ(lo({a, b}), b);
  EXPECT_EQ(hi({a, b}), a);
}

TEST(Registry, BuildsFromDescriptors) {
  const AdmissibleOrder id = lexId(3);
  EXPECT_EQ(makeNDimAggregation({{"name", "ndimWeightedAverage"}, {"omega", {0.5, 0.5}}}, 2, id).name(),
            "ndimWeightedAverage");
  EXPECT_EQ(makeNDimAggregation({{"name", "orderMin"}}, 4, id).arity(), 4u);
  const NDimAggregation lifted = makeNDimAggregation(
      {{"name", "lift"}, {"components", {{{"name", "min"}}, {{"name", "mean"}}, {{"name", "max"}}}}}, 2, id);
  EXPECT_EQ(lifted.dimension(), 3u);
  const NDimAggregation inner = makeNDimAggregation(
      {{"name", "orderMax"}, {"order", {{"kind", "LexTau"}, {"tau", {2, 1}}}}}, 2, lexId(2));
  EXPECT_FALSE(inner.order().label() == lexId(2).label());
  EXPECT_THROW(makeNDimAggregation({{"name", "ndimWeightedAverage"}, {"omega", {0.5, 0.5}}}, 3, id),
               ValidationError);
  EXPECT_THROW(makeNDimAggregation({{"name", "nope"}}, 2, id), ValidationError);
}

TEST(Classify, WeightedAverageIsAnAveragingFunction) {
  const NDimAggregation m = ndimWeightedAverage(WeightingVector({0.5, 0.25, 0.25}), lexId(3));
  const Classification c = classify(m);
  EXPECT_TRUE(c.idempotent.holds);
  EXPECT_TRUE(c.average.holds);
  EXPECT_FALSE(c.conjunctive.holds);
  EXPECT_FALSE(c.disjunctive.holds);
  EXPECT_FALSE(c.mixed.holds);
  EXPECT_TRUE(c.monotone.holds);
  EXPECT_TRUE(c.strict.holds);
  EXPECT_FALSE(c.internal.holds);
  EXPECT_FALSE(c.symmetric.holds);
  EXPECT_TRUE(checkIdempotentIffAverage(m).holds);
}

TEST(Classify, DecimalWeightsStillAverage) {
  const NDimAggregation m =
      ndimWeightedAverage(WeightingVector({0.2341, 0.2474, 0.3181, 0.2004}), lexId(5));
  const Classification c = classify(m);
  EXPECT_TRUE(c.average.holds);
  EXPECT_TRUE(c.idempotent.holds);
}

TEST(Classify, OrderExtrema) {
  const Classification lo = classify(orderMinimum(lexId(3), 3));
  EXPECT_TRUE(lo.conjunctive.holds);
  EXPECT_TRUE(lo.internal.holds);
  EXPECT_TRUE(lo.symmetric.holds);
  EXPECT_FALSE(lo.strict.holds);
  const Classification hi = classify(orderMaximum(lexId(3), 3));
  EXPECT_TRUE(hi.disjunctive.holds);
  EXPECT_TRUE(hi.idempotent.holds);
}

TEST(Classify, OwaIsSymmetric) {
  const Classification c = classify(ndimOWA(lexId(3), WeightingVector({0.5, 0.3, 0.2})));
  EXPECT_TRUE(c.symmetric.holds);
  EXPECT_TRUE(c.average.holds);
}

TEST(Classify, FailuresCarryWitnesses) {
  const Classification c = classify(orderMinimum(lexId(2), 2));
  for (const CompatibilityReport* r : c.all()) {
    if (!r->holds) EXPECT_TRUE(r->witness.has_value()) << r->axiom;
  }
}

TEST(MwProperties, AdditivityFailsOnlyUnderSaturation) {
  const MwProperties p = checkMwProperties(WeightingVector({0.5, 0.25, 0.25}), Permutation::identity(3));
  EXPECT_TRUE(p.strict.holds);
  EXPECT_FALSE(p.symmetric.holds);
  EXPECT_FALSE(p.additive.holds);
  EXPECT_TRUE(p.additive_unsaturated.holds);
  EXPECT_TRUE(p.homogeneous.holds);
  EXPECT_EQ(p.homogeneous.max_deviation, 0.0);
}

TEST(MwProperties, UniformWeightsAreSymmetric) {
  EXPECT_TRUE(checkMwProperties(WeightingVector::uniform(3), Permutation::identity(2)).symmetric.holds);
}

TEST(MwProperties, StrictUnderAnyTau) {
  const MwProperties p = checkMwProperties(WeightingVector({0.5, 0.5}),
                                           Permutation::fromOneBased(std::vector<long long>{3, 1, 2}));
  EXPECT_TRUE(p.strict.holds);
}
