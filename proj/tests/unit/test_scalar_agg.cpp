#include <gtest/gtest.h>

#include <cmath>

#include "ndagg/error.hpp"
#include "ndagg/scalar_agg.hpp"

using namespace ndagg;

TEST(ScalarFamilies, ValuesOnSmallInputs) {
  EXPECT_DOUBLE_EQ(pR(1.0, 2)({1.0, 0.0}), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(pR(2.0, 2)({0.5, 0.5}), (1.25 * 1.25 - 1.0) / 3.0);
  const WeightingVector w({0.25, 0.75});
  EXPECT_DOUBLE_EQ(weightedAverage(w)({0.5, 1.0}), 0.875);
  EXPECT_DOUBLE_EQ(geometricMean(WeightingVector({1.0, 0.0}))({0.5, 0.0}), 0.5);
  EXPECT_DOUBLE_EQ(geometricMean(WeightingVector({0.5, 0.5}))({0.25, 1.0}), 0.5);
  EXPECT_DOUBLE_EQ(maxExp({1, 2, 3, 4})({0.4, 0.6, 0.7, 0.8}), 0.4096);
  EXPECT_DOUBLE_EQ(owa(w)({0.2, 0.6}), 0.25 * 0.6 + 0.75 * 0.2);
  EXPECT_EQ(minimum(3)({0.3, 0.1, 0.2}), 0.1);
  EXPECT_EQ(maximum(3)({0.3, 0.1, 0.2}), 0.3);
  EXPECT_DOUBLE_EQ(arithmeticMean(2)({0.25, 0.75}), 0.5);
}

TEST(ScalarFamilies, WeightedMinMaxPickTheInput) {
  const WeightingVector w({0.25, 0.75});
  // w·x = (0.2, 0.3): the minimiser is index 0, the maximiser index 1.
  EXPECT_EQ(weightedMin(w)({0.8, 0.4}), 0.8);
  EXPECT_EQ(weightedMax(w)({0.8, 0.4}), 0.4);
  EXPECT_TRUE(weightedMin(w).classificationExempt());
}

TEST(ScalarFamilies, InputValidation) {
  EXPECT_THROW(minimum(2)({0.1}), ValidationError);
  EXPECT_THROW(minimum(2)({0.1, 1.2}), ValidationError);
  EXPECT_THROW(pR(0.0, 2), ValidationError);
  EXPECT_THROW(maxExp({1, 0}), ValidationError);
}

TEST(ScalarFamilies, BoundaryFailureThrows) {
  EXPECT_THROW(ScalarAggregation("half", 2, {{"name", "half"}},
                                 [](std::span<const double> x) { return 0.5 * x[0]; }),
               ContractViolation);
}

TEST(ScalarFamilies, NonMonotoneRejectedUnlessExempt) {
  auto fn = [](std::span<const double> x) {
    return (x[0] == 0.0 && x[1] == 0.0) || (x[0] == 1.0 && x[1] == 1.0) ? x[0] : 1.0 - x[0] * 0.5;
  };
  EXPECT_THROW(ScalarAggregation("bad", 2, {{"name", "bad"}}, fn), ContractViolation);
  const ScalarAggregation kept("bad", 2, {{"name", "bad"}}, fn, {}, true);
  EXPECT_FALSE(kept.registrationFindings().empty());
}

TEST(ScalarRegistry, BuildsFromDescriptors) {
  EXPECT_EQ(makeScalarAggregation({{"name", "min"}}, 3).arity(), 3u);
  EXPECT_EQ(makeScalarAggregation({{"name", "maxExp"}, {"e", {1, 2, 3, 4}}}).arity(), 4u);
  EXPECT_EQ(makeScalarAggregation({{"name", "weightedAverage"}, {"omega", {0.5, 0.5}}}).name(),
            "weightedAverage");
  EXPECT_THROW(makeScalarAggregation({{"name", "nope"}}, 2), ValidationError);
  EXPECT_THROW(makeScalarAggregation({{"name", "maxExp"}, {"e", {1, 2}}}, 3), ValidationError);
  for (const auto& name : scalarAggregationNames()) EXPECT_FALSE(name.empty());
}

TEST(ScalarChecks, Dominance) {
  EXPECT_TRUE(dominates(minimum(3), arithmeticMean(3)).holds);
  EXPECT_TRUE(dominates(arithmeticMean(3), maximum(3)).holds);
  const CompatibilityReport r = dominates(maximum(3), minimum(3));
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.witness.has_value());
}

TEST(ScalarChecks, Homogeneity) {
  EXPECT_TRUE(checkHomogeneity(weightedAverage(WeightingVector({0.3, 0.7})), 1.0).holds);
  EXPECT_TRUE(checkHomogeneity(geometricMean(WeightingVector({0.3, 0.7})), 1.0).holds);
  EXPECT_TRUE(checkHomogeneity(owa(WeightingVector({0.3, 0.7})), 1.0).holds);
  EXPECT_FALSE(checkHomogeneity(pR(2.0, 2), 1.0).holds);
  EXPECT_FALSE(checkHomogeneity(maxExp({1, 2}), 1.0).holds);
}

TEST(ScalarChecks, InternalStrictMonotone) {
  EXPECT_TRUE(checkInternal(minimum(3)).holds);
  EXPECT_TRUE(checkInternal(maximum(3)).holds);
  EXPECT_FALSE(checkInternal(arithmeticMean(3)).holds);
  EXPECT_TRUE(checkStrictOnLn(arithmeticMean(3)).holds);
  EXPECT_FALSE(checkStrictOnLn(minimum(3)).holds);
  EXPECT_TRUE(checkMonotone(weightedAverage(WeightingVector({0.1, 0.2, 0.7}))).holds);
  EXPECT_TRUE(checkMonotone(pR(0.5, 3)).holds);
}
