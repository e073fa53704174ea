#include <gtest/gtest.h>

#include "finembed/error.hpp"
#include "finembed/polynomial.hpp"
#include "finembed/prsearch.hpp"
#include "finembed/rng.hpp"
#include "oracles.hpp"

using namespace finembed;

namespace {

__int128 eval_oracle(const Polynomial& p, const oracle::Values& t) {
  // Direct term-by-term expansion with 128-bit arithmetic.
  __int128 total = 0;
  for (const auto& m : p.monomials()) {
    __int128 term = m.coefficient;
    for (std::size_t k = 0; k < p.variable_count(); ++k) {
      for (int e = 0; e < m.exponents[p.variables()[k]]; ++e) term *= t[k];
    }
    total += term;
  }
  return total;
}

}  // namespace

TEST(Polynomial, ParseAndInspect) {
  const auto p = Polynomial::parse("x^2 + y^2 - z^2");
  EXPECT_EQ(p.variable_count(), 3u);
  EXPECT_EQ(p.degree(), 2);
  EXPECT_TRUE(p.is_homogeneous());
  EXPECT_FALSE(Polynomial::parse("x+y-z-1").is_homogeneous());
  EXPECT_EQ(Polynomial::parse("2x*y-3").monomial_degrees(), (std::vector<int>{2, 0}));
  EXPECT_EQ(Polynomial::parse(p.to_string()).to_string(), p.to_string());
  EXPECT_THROW(Polynomial::parse("x^^2"), Error);
}

TEST(Equation, SolverMatchesBruteForce) {
  for (const std::string text : {"x+y-z", "x^2+y^2-z^2", "x+2y-3z", "xy-z", "x^2-2y^2", "x+y+z-30", "x^3+y-z^2"}) {
    const auto p = Polynomial::parse(text);
    const std::int64_t N = p.variable_count() == 2 ? 60 : 40;
    const auto expected =
        oracle::equation_solutions(p.variable_count(), N, [&](const oracle::Values& t) { return eval_oracle(p, t); });
    EXPECT_EQ(equation_solutions(p, N), expected) << text;
  }
}

TEST(Equation, SchurOnOneToFour) {
  EXPECT_EQ(equation_solutions(Polynomial::parse("x+y-z"), 4).size(), 6u);
  EXPECT_EQ(equation_solutions(Polynomial::parse("x+y-z"), 4, true).size(), 4u);
}

TEST(Equation, HomogeneousSolutionsScale) {
  const auto p = Polynomial::parse("x^2+y^2-z^2");
  const auto base = equation_solutions(p, 20);
  for (std::int64_t lambda = 1; lambda <= 5; ++lambda) {
    const auto scaled = equation_solutions(p, 20 * lambda);
    for (auto t : base) {
      for (auto& v : t) v *= lambda;
      EXPECT_TRUE(std::binary_search(scaled.begin(), scaled.end(), t)) << lambda;
    }
  }
}

TEST(Patterns, ApInstancesMatchEnumeration) {
  for (std::size_t l = 2; l <= 5; ++l) EXPECT_EQ(Pattern::ap(l).instances(40), oracle::ap_sets(l, 40)) << l;
  EXPECT_EQ(Pattern::parse("ap:3").to_string(), "ap:3");
}

TEST(Patterns, SchurInstancesAreSolutionSets) {
  const auto expected = oracle::as_sets(oracle::equation_solutions(
      3, 30, [](const oracle::Values& t) { return static_cast<__int128>(t[0] + t[1] - t[2]); }));
  EXPECT_EQ(Pattern::schur().instances(30), expected);
}

TEST(Patterns, BadSyntax) {
  EXPECT_THROW(Pattern::parse("ap"), Error);
  EXPECT_THROW(Pattern::parse("spiral:3"), Error);
}

TEST(Coloring, LeastAvoidingMatchesExhaustiveWalk) {
  for (const auto& text : {"ap:3", "schur", "eq:x+2y-z"}) {
    const auto pattern = Pattern::parse(text);
    for (std::size_t r = 2; r <= 3; ++r) {
      for (std::int64_t N = 1; N <= (r == 2 ? 14 : 9); ++N) {
        const auto inst = pattern.instances(N);
        const auto expected = oracle::least_avoiding(N, static_cast<int>(r), inst);
        const auto cert = find_avoiding_coloring(N, r, pattern);
        ASSERT_EQ(cert.outcome == ColoringOutcome::kAvoiding, expected.has_value()) << text << " N=" << N;
        if (expected) EXPECT_EQ(cert.coloring, *expected) << text << " N=" << N;
      }
    }
  }
}

TEST(Coloring, KnownColoring) {
  const auto cert = find_avoiding_coloring(8, 2, Pattern::ap(3));
  EXPECT_EQ(cert.coloring, (std::vector<int>{0, 0, 1, 1, 0, 0, 1, 1}));
  EXPECT_FALSE(find_monochromatic(cert.universe, cert.coloring, Pattern::ap(3).instances(8)).has_value());
}

TEST(Coloring, OrderDoesNotChangeOutcome) {
  const SearchOptions desc{VariableOrder::kDescending, 0};
  for (std::int64_t N = 5; N <= 12; ++N) {
    const auto a = find_avoiding_coloring(N, 2, Pattern::ap(3));
    const auto d = find_avoiding_coloring(N, 2, Pattern::ap(3), desc);
    EXPECT_EQ(a.outcome, d.outcome) << N;
    if (d.outcome == ColoringOutcome::kAvoiding) {
      EXPECT_FALSE(find_monochromatic(d.universe, d.coloring, Pattern::ap(3).instances(N)).has_value());
    }
  }
}

TEST(Coloring, NodeLimit) {
  try {
    find_avoiding_coloring(40, 3, Pattern::ap(3), SearchOptions{VariableOrder::kAscending, 10});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBudgetExceeded);
  }
}

TEST(Threshold, SmallVanDerWaerdenAndSchur) {
  EXPECT_EQ(ramsey_threshold(Pattern::ap(3), 2, 20).threshold, 9);
  EXPECT_EQ(ramsey_threshold(Pattern::schur(), 2, 20).threshold, 5);
  EXPECT_EQ(ramsey_threshold(Pattern::schur(), 3, 20).threshold, 14);
  EXPECT_EQ(ramsey_threshold(Pattern::ap(3), 1, 20).threshold, 3);
  EXPECT_EQ(ramsey_threshold(Pattern::ap(4), 2, 40).threshold, 35);
  const auto none = ramsey_threshold(Pattern::ap(5), 2, 20);
  EXPECT_FALSE(none.threshold.has_value());
  ASSERT_TRUE(none.last_avoiding.has_value());
  EXPECT_EQ(none.last_avoiding->universe.size(), 20u);
}

TEST(Strong, ExhaustiveAndBacktrackingAgree) {
  const auto w = additive_window(60);
  Rng rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    std::set<std::int64_t> s;
    while (s.size() < 10) s.insert(rng.uniform(1, 25));
    const auto A = GroundSet::from_values(w, std::vector<std::int64_t>(s.begin(), s.end()));
    for (const auto& pattern : {Pattern::ap(3), Pattern::schur()}) {
      const auto e = strong_pr_probe(A, pattern, 2, StrongMode::kExhaustive);
      const auto b = strong_pr_probe(A, pattern, 2, StrongMode::kBacktracking);
      EXPECT_EQ(e.outcome, b.outcome) << trial;
      if (e.outcome == ColoringOutcome::kAvoiding) EXPECT_EQ(e.coloring, b.coloring) << trial;
    }
  }
}

TEST(Strong, IntervalExamples) {
  const auto w = additive_window(20);
  const std::vector<std::int64_t> nine{1, 2, 3, 4, 5, 6, 7, 8, 9};
  const auto first = [&](std::size_t n) { return std::vector<std::int64_t>(nine.begin(), nine.begin() + n); };
  EXPECT_EQ(strong_pr_probe(GroundSet::from_values(w, first(9)), Pattern::ap(3), 2).outcome, ColoringOutcome::kForced);
  EXPECT_EQ(strong_pr_probe(GroundSet::from_values(w, first(8)), Pattern::ap(3), 2).outcome,
            ColoringOutcome::kAvoiding);
  try {
    strong_pr_probe(GroundSet::from_predicate(w, Predicate::evens()), Pattern::ap(3), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kANotExplicit);
  }
}

TEST(Homogeneous, Reports) {
  const auto r = homogeneous_pr_check(Polynomial::parse("x^2+y^2-z^2"), 2, 60);
  EXPECT_TRUE(r.homogeneous);
  EXPECT_EQ(r.solutions, 52u);
  EXPECT_EQ(r.certificate.outcome, ColoringOutcome::kAvoiding);
  EXPECT_THROW(homogeneous_pr_check(Polynomial::parse("x+y-z-1"), 2, 10, false, true), Error);
  EXPECT_EQ(homogeneous_pr_check(Polynomial::parse("x+y-z"), 2, 5).certificate.outcome, ColoringOutcome::kForced);
}

TEST(Solutions, PSExamples) {
  const auto w = additive_window(100);
  const auto threes = ps_solutions_experiment(Polynomial::parse("x+y-z"),
                                              GroundSet::from_predicate(w, Predicate::parse("multiples:3")), 12);
  EXPECT_NE(std::find(threes.begin(), threes.end(), std::vector<std::int64_t>{3, 3, 6}), threes.end());
  const auto tens = ps_solutions_experiment(Polynomial::parse("x^2+y^2-z^2"),
                                            GroundSet::from_predicate(w, Predicate::parse("multiples:10")), 60);
  EXPECT_NE(std::find(tens.begin(), tens.end(), std::vector<std::int64_t>{30, 40, 50}), tens.end());
  for (const auto& t : tens) {
    for (const auto v : t) EXPECT_EQ(v % 10, 0);
  }
}
