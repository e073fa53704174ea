#include <gtest/gtest.h>

#include "finembed/carrier.hpp"
#include "finembed/error.hpp"
#include "finembed/predicate.hpp"
#include "finembed/rational.hpp"
#include "finembed/rng.hpp"
#include "finembed/term.hpp"

using namespace finembed;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kInvalidArgument;
}

std::vector<std::string> displays(const Window& w, const std::vector<Element>& es) {
  std::vector<std::string> out;
  for (auto e : es) out.push_back(w.display(e));
  return out;
}

}  // namespace

TEST(Window, AdditiveIsZeroToBound) {
  const auto w = additive_window(100);
  EXPECT_EQ(w->size(), 101u);
  EXPECT_EQ(w->min_value(), 0);
  EXPECT_EQ(w->max_value(), 100);
  EXPECT_EQ(w->value(*w->identity()), 0);
}

TEST(Window, FreeWordsCountsNonEmptyWords) {
  const auto w = Window::make(WindowKind::kFreeWords, 3, {'a', 'b'});
  EXPECT_EQ(w->size(), 14u);
  std::vector<Element> all;
  for (std::uint64_t c = 0; c < w->size(); ++c) all.push_back(Element{c});
  const std::vector<std::string> expected{"a",   "b",   "aa",  "ab",  "ba",  "bb",  "aaa",
                                          "aab", "aba", "abb", "baa", "bab", "bba", "bbb"};
  EXPECT_EQ(displays(*w, all), expected);
  EXPECT_FALSE(w->identity().has_value());
}

TEST(Window, ConstructionErrors) {
  EXPECT_EQ(code_of([] { Window::make(WindowKind::kFreeWords, 3, {}); }), ErrorCode::kEmptyAlphabet);
  EXPECT_EQ(code_of([] { Window::make(WindowKind::kMultiplicativeNaturals, 0); }), ErrorCode::kBoundTooLarge);
  EXPECT_EQ(code_of([] { Window::make(WindowKind::kAdditiveNaturals, kMaxWindowSize); }), ErrorCode::kBoundTooLarge);
  EXPECT_EQ(code_of([] { parse_window_kind("rings"); }), ErrorCode::kInvalidKind);
  EXPECT_EQ(code_of([] { Window::make_table({{0, 1}, {0, 0}}); }), ErrorCode::kNonAssociative);
}

TEST(Window, OperationExamples) {
  const auto add = additive_window(100);
  EXPECT_EQ(add->value(*op_apply(*add, *add->from_value(2), *add->from_value(3))), 5);
  const auto small = additive_window(10);
  EXPECT_FALSE(op_apply(*small, *small->from_value(7), *small->from_value(8)).has_value());
  const auto words = Window::make(WindowKind::kFreeWords, 4, {'a', 'b'});
  EXPECT_EQ(words->display(*op_apply(*words, words->parse("ab"), words->parse("a"))), "aba");
  const auto mul = Window::make(WindowKind::kMultiplicativeNaturals, 50);
  EXPECT_EQ(mul->value(*op_apply(*mul, *mul->from_value(3), *mul->from_value(4))), 12);
  EXPECT_EQ(code_of([&] { op_apply(*small, Element{11}, Element{0}); }), ErrorCode::kElementOutOfWindow);
}

TEST(Window, DisplayRoundTrips) {
  for (const auto& w : {additive_window(30), Window::make(WindowKind::kMultiplicativeNaturals, 30),
                        Window::make(WindowKind::kFreeWords, 3, {'x', 'y', 'z'})}) {
    for (std::uint64_t c = 0; c < w->size(); ++c) EXPECT_EQ(w->parse(w->display(Element{c})).code, c);
  }
}

TEST(Window, ExhaustiveAssociativityOnSmallWindows) {
  // (Z/4, +) and (N, max) truncated to {0..3}.
  const auto z4 = Window::make_table({{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}});
  std::vector<std::vector<std::uint32_t>> max_table(11, std::vector<std::uint32_t>(11));
  for (std::uint32_t i = 0; i <= 10; ++i) {
    for (std::uint32_t j = 0; j <= 10; ++j) max_table[i][j] = std::max(i, j);
  }
  const auto maxw = Window::make_table(max_table);
  for (const auto& w : {additive_window(63), Window::make(WindowKind::kMultiplicativeNaturals, 64),
                        Window::make(WindowKind::kFreeWords, 5, {'a', 'b'}), z4, maxw}) {
    const auto report = check_associativity(*w);
    EXPECT_TRUE(report.associative) << window_kind_name(w->kind());
    EXPECT_GT(report.triples_checked, 0u);
  }
}

TEST(Window, SampledAssociativityAboveSixtyFour) {
  const auto report = check_associativity(*Window::make(WindowKind::kMultiplicativeNaturals, 5000), 7, 20000);
  EXPECT_TRUE(report.associative);
}

TEST(Window, OverflowIsMonotone) {
  for (const auto& w : {additive_window(40), Window::make(WindowKind::kMultiplicativeNaturals, 40)}) {
    for (std::uint64_t x = 0; x < w->size(); ++x) {
      for (std::uint64_t y = 0; y < w->size(); ++y) {
        if (w->op(Element{x}, Element{y})) continue;
        if (x + 1 < w->size()) {
          EXPECT_FALSE(w->op(Element{x + 1}, Element{y}));
        }
        if (y + 1 < w->size()) {
          EXPECT_FALSE(w->op(Element{x}, Element{y + 1}));
        }
      }
    }
  }
}

TEST(GroundSet, ElementExamples) {
  const auto w = additive_window(30);
  const auto evens = GroundSet::from_predicate(w, Predicate::evens());
  EXPECT_EQ(evens.elements(3), (std::vector<Element>{{0}, {2}, {4}}));
  const auto listed = GroundSet::from_values(w, std::vector<std::int64_t>{9, 5, 7});
  EXPECT_EQ(listed.values(), (std::vector<std::int64_t>{5, 7, 9}));
  EXPECT_EQ(listed.elements(10).size(), 3u);
  const auto squares = GroundSet::from_predicate(w, Predicate::squares());
  EXPECT_EQ(squares.values(), (std::vector<std::int64_t>{0, 1, 4, 9, 16, 25}));
  EXPECT_EQ(squares.elements(100).size(), 6u);
}

TEST(GroundSet, OutOfWindowQueriesThrow) {
  const auto w = additive_window(10);
  const auto evens = GroundSet::from_predicate(w, Predicate::evens());
  EXPECT_EQ(code_of([&] { evens.contains(Element{11}); }), ErrorCode::kElementOutOfWindow);
  EXPECT_EQ(code_of([&] { evens.contains_value(12); }), ErrorCode::kElementOutOfWindow);
  EXPECT_TRUE(evens.contains_value(10));
  const auto words = Window::make(WindowKind::kFreeWords, 2, {'a'});
  EXPECT_EQ(code_of([&] { GroundSet::from_predicate(words, Predicate::evens()); }), ErrorCode::kWrongCarrier);
}

TEST(GroundSet, PredicateMembershipMatchesDirectTest) {
  const auto w = additive_window(10000);
  const auto p = Predicate::parse("union(primes,multiples:7)");
  const auto s = GroundSet::from_predicate(w, p);
  for (std::int64_t v = 0; v <= 10000; v += 13) EXPECT_EQ(s.contains_value(v), p.test(v)) << v;
}

TEST(Predicate, ParseRoundTrip) {
  for (const std::string text : {"all", "evens", "odds", "multiples:3", "squares", "primes", "interval:2:9",
                                 "union(evens,interval:1:3)", "intersect(odds,primes)"}) {
    EXPECT_EQ(Predicate::parse(text).to_string(), text);
  }
  EXPECT_EQ(code_of([] { Predicate::parse("cubes"); }), ErrorCode::kMalformedInput);
}

TEST(Predicate, PrimesAndSquaresAgreeWithTrialDivision) {
  for (std::int64_t n = 0; n < 2000; ++n) {
    bool prime = n >= 2;
    for (std::int64_t d = 2; d * d <= n && prime; ++d) prime = n % d != 0;
    EXPECT_EQ(is_prime(n), prime) << n;
    std::int64_t r = 0;
    while ((r + 1) * (r + 1) <= n) ++r;
    EXPECT_EQ(is_square(n), r * r == n) << n;
  }
}

TEST(Rational, ExactArithmetic) {
  EXPECT_EQ(Rational(2, 4).to_string(), "1/2");
  EXPECT_EQ(Rational(4, 2).to_string(), "2");
  EXPECT_EQ(Rational::parse("0.02"), Rational(1, 50));
  EXPECT_EQ(Rational::parse("3/9"), Rational(1, 3));
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_LT(Rational(499, 1000), Rational(1, 2));
  EXPECT_EQ(Rational(1, 2) / Rational(1, 4), Rational(2));
}

TEST(Rng, SameSeedSameStream) {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.uniform(0, 9), b.uniform(0, 9));
}

TEST(Term, EvaluatesCatalogShapes) {
  const auto t = Term::parse("param0 ^ slot0");
  const std::vector<std::int64_t> slots{3}, params{2};
  EXPECT_EQ(*t.evaluate(slots, params), 8);
  EXPECT_EQ(*Term::parse("slot0 + 2 * param0 - 1").evaluate(slots, params), 6);
  EXPECT_EQ(*Term::parse("(slot0 + param0) * (slot0 - param0)").evaluate(slots, params), 5);
  EXPECT_FALSE(Term::parse("param0 ^ 100").evaluate(slots, params).has_value());
  EXPECT_EQ(code_of([] { Term::parse("slot0 +"); }), ErrorCode::kMalformedTerm);
  EXPECT_EQ(code_of([] { Term::parse("foo"); }), ErrorCode::kMalformedTerm);
  EXPECT_EQ(code_of([&] { Term::parse("param1").evaluate(slots, params); }), ErrorCode::kArityMismatch);
}
