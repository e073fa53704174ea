#include <gtest/gtest.h>

#include "finembed/density.hpp"
#include "finembed/error.hpp"
#include "finembed/rng.hpp"
#include "oracles.hpp"

using namespace finembed;

TEST(Net, IntervalLevels) {
  const auto net = parse_net("interval:5");
  EXPECT_EQ(net.size(), 5u);
  EXPECT_EQ(net.level(3), (std::vector<std::int64_t>{1, 2, 3}));
  EXPECT_THROW(interval_net(0), Error);
  EXPECT_THROW(Net::make({{1, 2}, {2, 3}}), Error);
  EXPECT_THROW(Net::make({{}}), Error);
}

TEST(Density, EvensIsHalf) {
  const auto w = additive_window(1000);
  const auto r = upper_density(GroundSet::from_predicate(w, Predicate::evens()), interval_net(250));
  EXPECT_EQ(r.value, Rational(1, 2));
  EXPECT_TRUE(verify_density_witness(r.witness(), GroundSet::from_predicate(w, Predicate::evens()),
                                     interval_net(250)));
}

TEST(Density, FullWindowIsOne) {
  const auto w = additive_window(400);
  EXPECT_EQ(upper_density(GroundSet::from_predicate(w, Predicate::all()), interval_net(100)).value, Rational(1));
}

TEST(Density, SquaresAreSparse) {
  const auto w = additive_window(4000);
  const auto r = upper_density(GroundSet::from_predicate(w, Predicate::squares()), interval_net(1000));
  EXPECT_LE(r.value, Rational(1, 25));
}

TEST(Density, TailMaximaAreNonIncreasing) {
  const auto w = additive_window(300);
  const auto r = upper_density(GroundSet::from_predicate(w, Predicate::primes()), interval_net(75));
  ASSERT_EQ(r.tails.size(), 75u);
  for (std::size_t i = 1; i < r.tails.size(); ++i) EXPECT_LE(r.tails[i].witness.ratio, r.tails[i - 1].witness.ratio);
}

TEST(Density, MatchesIntervalOracle) {
  constexpr std::int64_t W = 120;
  const auto w = additive_window(W);
  Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    oracle::Values A;
    for (std::int64_t x = 0; x <= W; ++x) {
      if (rng.uniform(0, 99) < 10 + trial * 2) A.push_back(x);
    }
    const auto set = GroundSet::from_values(w, A);
    const std::size_t maxN = 30;
    const auto tail = static_cast<std::size_t>(rng.uniform(1, 30));
    const auto r = upper_density(set, interval_net(maxN), tail);
    const auto [h, n] = oracle::interval_density(A, W, maxN, static_cast<std::int64_t>(tail));
    EXPECT_EQ(r.value, Rational(h, n)) << trial;
    EXPECT_TRUE(verify_density_witness(r.witness(), set, interval_net(maxN))) << trial;
  }
}

TEST(Density, NetMustFitWindow) {
  const auto w = additive_window(10);
  try {
    upper_density(GroundSet::from_predicate(w, Predicate::all()), interval_net(11));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNetExceedsWindow);
  }
}

TEST(Density, WeakCancellativity) {
  EXPECT_EQ(weak_cancellativity_bound(*additive_window(100)), 1u);
  EXPECT_EQ(weak_cancellativity_bound(*Window::make(WindowKind::kMultiplicativeNaturals, 100)), 1u);
  std::vector<std::vector<std::uint32_t>> max_table(10, std::vector<std::uint32_t>(10));
  for (std::uint32_t i = 0; i < 10; ++i) {
    for (std::uint32_t j = 0; j < 10; ++j) max_table[i][j] = std::max(i, j);
  }
  EXPECT_GE(weak_cancellativity_bound(*Window::make_table(max_table)), 4u);
}

TEST(Density, MonotoneInA) {
  const auto w = additive_window(400);
  Rng rng(32);
  oracle::Values big, small;
  for (std::int64_t x = 0; x <= 400; ++x) {
    if (rng.uniform(0, 2) == 0) {
      big.push_back(x);
      if (rng.uniform(0, 1) == 0) small.push_back(x);
    }
  }
  const auto net = interval_net(100);
  EXPECT_LE(upper_density(GroundSet::from_values(w, small), net).value,
            upper_density(GroundSet::from_values(w, big), net).value);
}

TEST(Monotonicity, TranslatedPairsHold) {
  const auto w = additive_window(1000);
  const auto fam = builtin_right_translations(w);
  std::vector<std::int64_t> a, b;
  for (std::int64_t x = 0; x <= 300; x += 3) a.push_back(x);
  for (std::int64_t x = 7; x <= 1000; x += 3) b.push_back(x);
  const std::vector<DensityPair> pairs{{GroundSet::from_values(w, a), GroundSet::from_values(w, b), {}},
                                       {GroundSet::from_predicate(w, Predicate::evens()),
                                        GroundSet::from_predicate(w, Predicate::all()),
                                        {4, 16}}};
  const auto r = check_density_monotonicity(pairs, fam, interval_net(250), Rational(1, 50));
  EXPECT_EQ(r.b, 1u);
  EXPECT_EQ(r.violations, 0u);
  ASSERT_EQ(r.pairs.size(), 2u);
  EXPECT_TRUE(r.pairs[0].holds);
}

TEST(Monotonicity, UnrelatedPairIsRejected) {
  const auto w = additive_window(200);
  const std::vector<DensityPair> pairs{{GroundSet::from_predicate(w, Predicate::all()),
                                        GroundSet::from_predicate(w, Predicate::evens()),
                                        {3}}};
  try {
    check_density_monotonicity(pairs, builtin_right_translations(w), interval_net(50), Rational(0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnverifiedPair);
  }
}
