#include <gtest/gtest.h>

#include "finembed/embed.hpp"
#include "finembed/error.hpp"
#include "finembed/rich.hpp"
#include "finembed/rng.hpp"
#include "oracles.hpp"

using namespace finembed;

namespace {

oracle::Values random_values(Rng& rng, std::int64_t lo, std::int64_t hi, std::size_t count) {
  std::set<std::int64_t> s;
  while (s.size() < count) s.insert(rng.uniform(lo, hi));
  return {s.begin(), s.end()};
}

GroundSet set_of(const WindowPtr& w, const oracle::Values& v) { return GroundSet::from_values(w, v); }

}  // namespace

TEST(Embed, AdditiveTranslationsMatchBlindScan) {
  constexpr std::int64_t W = 80;
  const auto w = additive_window(W);
  const auto fam = builtin_right_translations(w);
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto A = random_values(rng, 0, 20, static_cast<std::size_t>(rng.uniform(1, 4)));
    const auto B = random_values(rng, 0, W, static_cast<std::size_t>(rng.uniform(5, 40)));
    const auto expected = oracle::blind_scan(A, B, 1, {0}, W, [&](const oracle::Values& p, std::int64_t f) {
      return f + p[0] <= W ? std::optional<std::int64_t>(f + p[0]) : std::nullopt;
    });
    const auto v = fe_decide(set_of(w, A), set_of(w, B), fam);
    ASSERT_NE(v.outcome, Outcome::kUnknown);
    EXPECT_EQ(v.outcome == Outcome::kYes, expected.has_value()) << trial;
    if (expected) EXPECT_EQ(v.witness->params, *expected) << trial;
  }
}

TEST(Embed, AffineMatchesBlindScan) {
  constexpr std::int64_t W = 60;
  const auto w = additive_window(W);
  const auto fam = builtin_affine(w);
  Rng rng(12);
  for (int trial = 0; trial < 150; ++trial) {
    const auto A = random_values(rng, 0, 12, static_cast<std::size_t>(rng.uniform(1, 4)));
    const auto B = random_values(rng, 0, W, static_cast<std::size_t>(rng.uniform(3, 25)));
    const auto expected = oracle::blind_scan(A, B, 2, {0, 1}, W, [&](const oracle::Values& p, std::int64_t f) {
      const auto y = p[0] + p[1] * f;
      return y <= W ? std::optional<std::int64_t>(y) : std::nullopt;
    });
    const auto v = fe_decide(set_of(w, A), set_of(w, B), fam);
    ASSERT_NE(v.outcome, Outcome::kUnknown);
    EXPECT_EQ(v.outcome == Outcome::kYes, expected.has_value()) << trial;
    if (expected) EXPECT_EQ(v.witness->params, *expected) << trial;
  }
}

TEST(Embed, MultiplicativeTranslationsMatchBlindScan) {
  constexpr std::int64_t W = 200;
  const auto w = Window::make(WindowKind::kMultiplicativeNaturals, W);
  const auto fam = builtin_right_translations(w);
  Rng rng(13);
  for (int trial = 0; trial < 150; ++trial) {
    const auto A = random_values(rng, 1, 15, static_cast<std::size_t>(rng.uniform(1, 3)));
    const auto B = random_values(rng, 1, W, static_cast<std::size_t>(rng.uniform(10, 80)));
    const auto expected = oracle::blind_scan(A, B, 1, {1}, W, [&](const oracle::Values& p, std::int64_t f) {
      return f * p[0] <= W ? std::optional<std::int64_t>(f * p[0]) : std::nullopt;
    });
    const auto v = fe_decide(set_of(w, A), set_of(w, B), fam);
    EXPECT_EQ(v.outcome == Outcome::kYes, expected.has_value()) << trial;
    if (expected) EXPECT_EQ(v.witness->params, *expected) << trial;
  }
}

TEST(Embed, ExampleVerdicts) {
  const auto w = additive_window(40);
  const auto A = set_of(w, {1, 2, 3});
  const auto evens = GroundSet::from_predicate(w, Predicate::evens());
  const auto v = fe_decide(A, evens, builtin_affine(w));
  ASSERT_EQ(v.outcome, Outcome::kYes);
  EXPECT_EQ(v.witness->params, (ParamTuple{0, 2}));
  EXPECT_EQ(fe_decide(A, evens, builtin_right_translations(w)).outcome, Outcome::kNo);
  EXPECT_TRUE(verify_witness(*v.witness, evens, builtin_affine(w)));
}

TEST(Embed, BoundedScanNeverSaysNo) {
  const auto w = additive_window(300);
  const auto geo = builtin_geoarithmetic(w);
  const auto B = set_of(w, {7, 11});
  const auto A = set_of(w, {1, 2});
  EXPECT_EQ(fe_decide(A, B, geo).outcome, Outcome::kUnknown);
}

TEST(Embed, WitnessesSurviveIndependentCheck) {
  const auto w = additive_window(120);
  const auto B = GroundSet::from_predicate(w, Predicate::parse("union(multiples:3,interval:50:70)"));
  for (const auto& fam : {builtin_right_translations(w), builtin_affine(w)}) {
    for (std::int64_t n = 1; n <= 8; ++n) {
      oracle::Values a;
      for (std::int64_t i = 0; i < n; ++i) a.push_back(i * 2);
      const auto v = fe_decide(set_of(w, a), B, fam);
      if (v.outcome != Outcome::kYes) continue;
      for (const auto e : v.witness->image) EXPECT_TRUE(B.contains(e));
      EXPECT_TRUE(verify_witness(*v.witness, B, fam));
    }
  }
}

TEST(Embed, MonotoneInBothArguments) {
  const auto w = additive_window(60);
  const auto fam = builtin_affine(w);
  Rng rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    auto B = random_values(rng, 0, 60, 15);
    auto A = random_values(rng, 0, 10, 3);
    auto A0 = A;
    A0.pop_back();
    auto B1 = B;
    for (auto x : random_values(rng, 0, 60, 10)) B1.push_back(x);
    std::sort(B1.begin(), B1.end());
    B1.erase(std::unique(B1.begin(), B1.end()), B1.end());
    if (fe_decide(set_of(w, A), set_of(w, B), fam).outcome == Outcome::kYes) {
      EXPECT_EQ(fe_decide(set_of(w, A0), set_of(w, B), fam).outcome, Outcome::kYes);
      EXPECT_EQ(fe_decide(set_of(w, A), set_of(w, B1), fam).outcome, Outcome::kYes);
    }
  }
}

TEST(Embed, UnionSplitFindsSingleFamily) {
  const auto w = additive_window(100);
  const std::vector<FamilySpec> families{builtin_right_translations(w), builtin_affine(w, 2)};
  const auto A = set_of(w, {1, 2, 3});
  const auto evens = GroundSet::from_predicate(w, Predicate::evens());
  const auto split = check_union_split(A, evens, families);
  EXPECT_EQ(split.index, 1u);
  EXPECT_EQ(split.verdict.outcome, Outcome::kYes);
  try {
    check_union_split(A, set_of(w, {5}), families);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnionEmbeddingFails);
  }
}

TEST(Embed, ProbesRefuteOnlyWithCompleteNo) {
  const auto w = additive_window(400);
  const auto primes = GroundSet::from_predicate(w, Predicate::primes());
  const auto evens = GroundSet::from_predicate(w, Predicate::evens());
  const std::vector<std::size_t> sizes{2, 3, 4};
  const auto probes = fe_probe(primes, evens, builtin_affine(w), sizes);
  ASSERT_EQ(probes.size(), 3u);
  for (const auto& p : probes) EXPECT_EQ(p.verdict.outcome, Outcome::kYes);
  const auto refuted = fe_probe(evens, primes, builtin_right_translations(w), sizes);
  EXPECT_EQ(refuted.back().verdict.outcome, Outcome::kNo);
}

TEST(Criteria, TranslationsAndAffineAreTransitive) {
  const auto w = additive_window(60);
  const std::vector<std::vector<Element>> samples{{Element{1}, Element{2}}, {Element{0}, Element{3}, Element{4}}};
  for (const auto& fam : {builtin_right_translations(w), builtin_affine(w)}) {
    const auto r = check_transitive_criterion(fam, samples);
    EXPECT_EQ(r.tally.violated, 0u) << fam.name();
    EXPECT_GT(r.tally.satisfied, 0u) << fam.name();
  }
}

TEST(Criteria, ReflexivityExamples) {
  const auto w = additive_window(30);
  const std::vector<std::vector<Element>> samples{{Element{1}, Element{2}}};
  EXPECT_EQ(check_reflexive_criterion(builtin_affine(w), samples).tally.satisfied, 1u);
  const auto positive = builtin_translations(w, TranslationSide::kRight, Predicate::parse("interval:1:30"));
  EXPECT_EQ(check_reflexive_criterion(positive, samples).tally.violated, 1u);
}

TEST(UpwardClosure, ApTransfersButContainmentDoesNot) {
  const auto w = additive_window(100);
  const auto fam = builtin_affine(w);
  const std::vector<UpwardPair> pairs{
      {set_of(w, {0, 1, 2, 3}), GroundSet::from_predicate(w, Predicate::evens())},
      {set_of(w, {0, 1, 2, 3}), set_of(w, {5, 6, 7, 8})},
  };
  EXPECT_TRUE(check_upward_closed(named_property("ap:4"), pairs, fam).closed());
  const auto r = check_upward_closed(named_property("contains:0"), pairs, fam);
  EXPECT_EQ(r.counterexamples, 1u);
  EXPECT_EQ(r.first_counterexample, 1u);
  const std::vector<UpwardPair> bad{{set_of(w, {0, 1}), set_of(w, {7})}};
  EXPECT_THROW(check_upward_closed(named_property("ap:4"), bad, fam), Error);
}
