#include <gtest/gtest.h>

#include "finembed/rich.hpp"
#include "finembed/rng.hpp"
#include "oracles.hpp"

using namespace finembed;

namespace {

oracle::Values random_subset(Rng& rng, std::int64_t lo, std::int64_t hi, int percent) {
  oracle::Values out;
  for (std::int64_t x = lo; x <= hi; ++x) {
    if (rng.uniform(0, 99) < percent) out.push_back(x);
  }
  if (out.empty()) out.push_back(lo);
  return out;
}

}  // namespace

TEST(LongestAp, MatchesBruteForce) {
  constexpr std::int64_t W = 70;
  const auto w = additive_window(W);
  Rng rng(21);
  for (int trial = 0; trial < 120; ++trial) {
    const auto A = random_subset(rng, 0, W, 20 + trial % 60);
    const auto set = GroundSet::from_values(w, A);
    const auto cert = longest_ap(set);
    EXPECT_EQ(cert.length, oracle::longest_ap(A, W)) << trial;
    EXPECT_TRUE(verify_certificate(cert, set)) << trial;
  }
}

TEST(LongestAp, PrimesBelow200) {
  const auto w = additive_window(200);
  const auto cert = longest_ap(GroundSet::from_predicate(w, Predicate::primes()));
  EXPECT_EQ(cert.length, 6u);
  EXPECT_EQ(cert.params, (std::vector<std::int64_t>{7, 30}));
}

TEST(LongestAp, MultiplicativeWindowUsesValues) {
  const auto w = Window::make(WindowKind::kMultiplicativeNaturals, 100);
  const auto cert = longest_ap(GroundSet::from_values(w, std::vector<std::int64_t>{2, 4, 6, 8, 50}));
  EXPECT_EQ(cert.length, 4u);
}

TEST(GapGrid, MatchesBruteForce) {
  constexpr std::int64_t W = 60;
  const auto w = additive_window(W);
  Rng rng(22);
  for (int trial = 0; trial < 60; ++trial) {
    const auto A = random_subset(rng, 0, W, 40 + trial % 55);
    const auto set = GroundSet::from_values(w, A);
    const auto cert = longest_gap_grid(set);
    EXPECT_EQ(cert.length, oracle::longest_gap_grid(A, W)) << trial;
    if (cert.length > 0) EXPECT_TRUE(verify_certificate(cert, set)) << trial;
  }
}

TEST(GapGrid, SmallExample) {
  const auto w = additive_window(40);
  const auto cert = longest_gap_grid(GroundSet::from_values(w, std::vector<std::int64_t>{4, 6, 8, 12}));
  EXPECT_EQ(cert.length, 2u);
  EXPECT_EQ(cert.params, (std::vector<std::int64_t>{2, 1, 1}));
}

TEST(GapGrid, ZeroBasedCertificatesVerify) {
  const auto w = additive_window(300);
  const auto set = GroundSet::from_predicate(w, Predicate::evens());
  const auto cert = longest_gap_grid(set, GridIndexing::kZeroBased);
  EXPECT_GE(cert.length, 2u);
  EXPECT_TRUE(verify_certificate(cert, set));
}

TEST(PolyProgression, SquaresAndLinear) {
  const auto w = additive_window(400);
  const auto S = GroundSet::from_values(w, std::vector<std::int64_t>{0, 1});
  const auto squares = GroundSet::from_predicate(w, Predicate::squares());
  const auto cert = longest_poly_progression(squares, 2, S, {0, 1, 2});
  EXPECT_EQ(cert.length, 20u);
  EXPECT_TRUE(verify_certificate(cert, squares));
  const auto evens = GroundSet::from_predicate(w, Predicate::evens());
  const auto S2 = GroundSet::from_values(w, std::vector<std::int64_t>{2});
  EXPECT_EQ(longest_poly_progression(evens, 1, S2, {1}).length, 200u);
}

TEST(Certificates, TamperedCertificateFails) {
  const auto w = additive_window(50);
  const auto set = GroundSet::from_values(w, std::vector<std::int64_t>{3, 7, 11, 15, 20});
  auto cert = longest_ap(set);
  ASSERT_EQ(cert.length, 4u);
  cert.length = 5;
  EXPECT_FALSE(verify_certificate(cert, set));
}

TEST(Maximality, ApLengthAgreesWithAffineEmbedding) {
  const auto w = additive_window(90);
  const auto fam = builtin_affine(w);
  Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const auto A = random_subset(rng, 0, 90, 50);
    const auto set = GroundSet::from_values(w, A);
    const auto k = longest_ap(set).length;
    const std::vector<std::size_t> sizes{k, k + 1};
    const auto probes = maximality_probe(set, fam, sizes);
    EXPECT_EQ(probes[0].verdict.outcome, Outcome::kYes) << trial;
    EXPECT_EQ(probes[1].verdict.outcome, Outcome::kNo) << trial;
  }
}

TEST(Thick, IntervalsFoundOnlyWhenPresent) {
  const auto w = additive_window(100);
  const auto set = GroundSet::from_predicate(w, Predicate::parse("union(multiples:7,interval:40:49)"));
  const std::vector<std::size_t> lengths{3, 9, 10};
  const auto r = is_thick_window(set, lengths);
  ASSERT_EQ(r.probes.size(), 3u);
  EXPECT_EQ(w->value(*r.probes[0].shift), 40);
  EXPECT_TRUE(r.probes[1].shift.has_value());
  EXPECT_FALSE(r.probes[2].shift.has_value());
  EXPECT_FALSE(r.all_found());
}

TEST(Syndetic, EvensAndSquares) {
  const auto w = additive_window(400);
  const std::vector<std::size_t> spans{10, 50, 200};
  EXPECT_TRUE(is_piecewise_syndetic_window(GroundSet::from_predicate(w, Predicate::evens()), 2, spans).all_found());
  const std::vector<std::size_t> span20{20};
  EXPECT_FALSE(
      is_piecewise_syndetic_window(GroundSet::from_predicate(w, Predicate::squares()), 2, span20).all_found());
}

TEST(Syndetic, MultiplicativePowersOfTwo) {
  const auto w = Window::make(WindowKind::kMultiplicativeNaturals, 4096);
  std::vector<std::int64_t> pow2;
  for (std::int64_t x = 1; x <= 4096; x *= 2) pow2.push_back(x);
  const auto set = GroundSet::from_values(w, pow2);
  const std::vector<std::size_t> spans{64};
  EXPECT_TRUE(is_piecewise_syndetic_window(set, 2, spans).all_found());
  const auto sparse = GroundSet::from_values(w, std::vector<std::int64_t>{1, 8, 64, 512});
  EXPECT_FALSE(is_piecewise_syndetic_window(sparse, 2, spans).all_found());
}

TEST(NamedProperty, Examples) {
  const auto w = additive_window(50);
  const auto set = GroundSet::from_values(w, std::vector<std::int64_t>{0, 5, 10, 15, 20});
  EXPECT_TRUE(named_property("ap:5").test(set));
  EXPECT_FALSE(named_property("ap:6").test(set));
  EXPECT_TRUE(named_property("contains:0").test(set));
  EXPECT_FALSE(named_property("thick:1").test(set));
}
