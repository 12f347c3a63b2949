// Library results checked against the exact fixed-point, brute-force and grid
// oracles, plus the oracles' own sanity checks.

#include <gtest/gtest.h>

#include "ndagg/mcgdm.hpp"
#include "ndagg/semivector.hpp"
#include "oracle/brute_force.hpp"
#include "oracle/fixed_point.hpp"

using namespace ndagg;
using oracle::Fixed;
using oracle::Tuple;

namespace {

const std::vector<Fixed> kOmega = {Fixed::parse("0.2341"), Fixed::parse("0.2474"),
                                   Fixed::parse("0.3181"), Fixed::parse("0.2004")};
const std::vector<int> kTau = {3, 2, 4, 1, 5};

Tuple T(std::initializer_list<const char*> parts) {
  return oracle::parseTuple(std::vector<std::string>(parts.begin(), parts.end()));
}

std::vector<Tuple> exactCollectiveRow(std::size_t i) {
  const CollectiveMatrix c = energy::collective();
  std::vector<Tuple> row;
  for (const NDimInterval& cell : c.entries[i]) {
    Tuple t;
    for (double v : cell.components()) t.push_back(oracle::fromLiteral(v));
    row.push_back(t);
  }
  return row;
}

}  // namespace

TEST(FixedPoint, Arithmetic) {
  EXPECT_EQ(Fixed::parse("0.2341") * Fixed::parse("0.3"), Fixed::parse("0.07023"));
  EXPECT_EQ((Fixed::parse("0.7") + Fixed::parse("0.6")).str(), "1.3");
  EXPECT_EQ(oracle::boundedAdd(Fixed::parse("0.7"), Fixed::parse("0.6")), oracle::kOne);
  EXPECT_EQ(Fixed::parse("0.35") * Fixed::parse("0.35") * Fixed::parse("0.35"), Fixed::parse("0.042875"));
  EXPECT_THROW(Fixed::parse("0.2341") * Fixed::parse("0.2341") * Fixed::parse("0.2341"), std::domain_error);
  EXPECT_EQ(oracle::fromLiteral(0.3), Fixed::parse("0.3"));
  EXPECT_EQ(Fixed::parse("0.45788").toDouble(), 0.45788);
}

TEST(BruteForce, RankingAndLexCompare) {
  const std::vector<std::vector<int>> s = {{2, 1}, {1, 5}, {2, 1}, {1, 3}};
  EXPECT_EQ(oracle::lexCompare(s[0], s[1], {1, 2}), 1);
  EXPECT_EQ(oracle::lexCompare(s[0], s[1], {2, 1}), -1);
  EXPECT_EQ(oracle::bruteForceRanking(s, {1, 2}), (std::vector<std::size_t>{3, 1, 0, 2}));
}

TEST(Grid, WitnessSearch) {
  EXPECT_TRUE(oracle::gridWitness({2, 3}, {3, 5}, 10).has_value());
  EXPECT_FALSE(oracle::gridWitness({2, 3}, {5, 5}, 10).has_value());
  EXPECT_TRUE(oracle::gridWitness({5, 9}, {5, 10}, 10).has_value());
}

TEST(ExactScores, LibraryMatchesFixedPoint) {
  const auto scores = energy::correctedScores();
  const PipelineResult r = runPipeline(energy::problem());
  for (std::size_t i = 0; i < 5; ++i) {
    const Tuple exact = oracle::weightedSum(kOmega, exactCollectiveRow(i));
    for (std::size_t k = 0; k < 5; ++k) {
      EXPECT_EQ(scores[i][k], exact[k].toDouble()) << "s_" << i + 1;
      EXPECT_NEAR(r.ranking.scores[i][k], exact[k].toDouble(), 1e-12) << "s_" << i + 1;
    }
  }
}

TEST(ExactScores, FrozenValues) {
  const std::vector<Tuple> frozen = {
      T({"0.21871", "0.39056", "0.49426", "0.59426", "0.67912"}),
      T({"0.21164", "0.3059", "0.45788", "0.62137", "0.73447"}),
      T({"0.46449", "0.46449", "0.5916", "0.5916", "0.72944"}),
      T({"0.27176", "0.34465", "0.67763", "0.77526", "0.7953"}),
      T({"0.40516", "0.56158", "0.66362", "0.73181", "0.87526"})};
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_EQ(oracle::weightedSum(kOmega, exactCollectiveRow(i)), frozen[i]) << "s_" << i + 1;
  }
}

// The printed s_2 and s_4 follow from specific slips in the intermediate
// products; injecting exactly those reproduces the printed tuples.
TEST(ExactScores, InjectedSlipsReproduceThePrintedValues) {
  auto row2 = exactCollectiveRow(1);
  row2[1] = T({"0.2", "0.5", "0.8", "0.7", "0.9"});
  EXPECT_EQ(oracle::weightedSum(kOmega, row2), T({"0.21164", "0.3059", "0.50736", "0.62137", "0.73447"}));

  const auto row4 = exactCollectiveRow(3);
  Tuple s4 = oracle::scalarMul(kOmega[0], row4[0]);
  s4 = oracle::vecAdd(s4, T({"0.03181", "0.03181", "0.09896", "0.17318", "0.17318"}));
  s4 = oracle::vecAdd(s4, T({"0.06362", "0.06362", "0.25448", "0.25448", "0.25448"}));
  s4 = oracle::vecAdd(s4, oracle::scalarMul(kOmega[3], row4[3]));
  EXPECT_EQ(s4, T({"0.2859", "0.30931", "0.67763", "0.77526", "0.7953"}));

  std::vector<Tuple> printed;
  for (const NDimInterval& s : energy::printedScores()) {
    Tuple t;
    for (double v : s.components()) t.push_back(oracle::fromLiteral(v));
    printed.push_back(t);
  }
  EXPECT_EQ(printed[1], oracle::weightedSum(kOmega, row2));
  EXPECT_EQ(printed[3], s4);
}

TEST(ExactRanking, BruteForceAgreesOnBothScoreSets) {
  const AdmissibleOrder order(AdmissibleOrderSpec::lexTau(
      Permutation::fromOneBased(std::vector<long long>{3, 2, 4, 1, 5})));
  std::vector<std::vector<double>> corrected, printed;
  for (const auto& s : energy::correctedScores()) corrected.emplace_back(s.components().begin(), s.components().end());
  for (const auto& s : energy::printedScores()) printed.emplace_back(s.components().begin(), s.components().end());
  EXPECT_EQ(rank(energy::correctedScores(), order).worst_to_best, oracle::bruteForceRanking(corrected, kTau));
  EXPECT_EQ(rank(energy::printedScores(), order).worst_to_best, oracle::bruteForceRanking(printed, kTau));
  EXPECT_EQ(oracle::bruteForceRanking(printed, kTau), (std::vector<std::size_t>{0, 1, 2, 4, 3}));
}

TEST(ExactRanking, RandomScoreSetsMatchBruteForce) {
  Sampler s(31);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + s.index(4), p = 2 + s.index(5);
    const Permutation tau = s.permutation(n);
    std::vector<int> tau1;
    for (long long v : tau.oneBased()) tau1.push_back(static_cast<int>(v));
    std::vector<NDimInterval> scores;
    std::vector<std::vector<double>> raw;
    for (std::size_t i = 0; i < p; ++i) {
      scores.push_back(i > 0 && s.coin(4) ? scores[s.index(i)] : s.interval(n));
      raw.emplace_back(scores.back().components().begin(), scores.back().components().end());
    }
    const Ranking r = rank(scores, AdmissibleOrder(AdmissibleOrderSpec::lexTau(tau)));
    EXPECT_EQ(r.worst_to_best, oracle::bruteForceRanking(raw, tau1));
  }
}

TEST(NaturalPreorder, MatchesGridSearchExhaustivelyOnASmallGrid) {
  const int g = 8;
  for (int a = 0; a <= g; ++a)
    for (int b = a; b <= g; ++b)
      for (int c = 0; c <= g; ++c)
        for (int d = c; d <= g; ++d) {
          const NDimInterval x{a / 8.0, b / 8.0}, y{c / 8.0, d / 8.0};
          EXPECT_EQ(naturalPreorderLeq(x, y), oracle::gridWitness({a, b}, {c, d}, g).has_value())
              << a << b << c << d;
        }
}
