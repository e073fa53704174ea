#include <gtest/gtest.h>

#include "finembed/error.hpp"
#include "finembed/families.hpp"

using namespace finembed;

namespace {

std::vector<Element> elems(const Window& w, std::initializer_list<std::int64_t> vs) {
  std::vector<Element> out;
  for (auto v : vs) out.push_back(*w.from_value(v));
  return out;
}

std::int64_t apply1(const FamilySpec& f, const ParamTuple& p, std::int64_t x) {
  const auto& w = f.window();
  const std::vector<Element> t{*w.from_value(x)};
  return w.value(*f.apply(p, t));
}

}  // namespace

TEST(Families, TranslationsEvaluate) {
  const auto w = additive_window(100);
  const auto right = builtin_right_translations(w);
  EXPECT_EQ(apply1(right, {5}, 7), 12);
  const auto mul = Window::make(WindowKind::kMultiplicativeNaturals, 100);
  EXPECT_EQ(apply1(builtin_left_translations(mul), {3}, 7), 21);
  EXPECT_FALSE(right.apply(ParamTuple{60}, std::vector<Element>{*w->from_value(50)}).has_value());
}

TEST(Families, WordTranslationsRespectSide) {
  const auto w = Window::make(WindowKind::kFreeWords, 4, {'a', 'b'});
  const std::vector<Element> t{w->parse("ab")};
  const ParamTuple r{static_cast<std::int64_t>(w->parse("b").code)};
  EXPECT_EQ(w->display(*builtin_right_translations(w).apply(r, t)), "abb");
  EXPECT_EQ(w->display(*builtin_left_translations(w).apply(r, t)), "bab");
}

TEST(Families, AffineAndRegion) {
  const auto w = additive_window(100);
  const auto aff = builtin_affine(w);
  EXPECT_EQ(apply1(aff, {3, 2}, 5), 13);
  EXPECT_FALSE(aff.in_region(ParamTuple{3, 0}));
  try {
    aff.apply(ParamTuple{3, 0}, std::vector<Element>{*w->from_value(1)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParamsOutsideR);
  }
  EXPECT_FALSE(builtin_affine(w, 2).in_region(ParamTuple{0, 1}));
}

TEST(Families, GeoarithmeticIsBinary) {
  const auto w = additive_window(1000);
  const auto geo = builtin_geoarithmetic(w);
  EXPECT_EQ(geo.arity(), 2u);
  EXPECT_EQ(geo.param_arity(), 3u);
  // 2^3 (1 + 2 * 3) = 56
  const std::vector<Element> t{*w->from_value(3), *w->from_value(2)};
  EXPECT_EQ(w->value(*geo.apply(ParamTuple{2, 1, 3}, t)), 56);
  EXPECT_FALSE(geo.in_region(ParamTuple{1, 1, 1}));
}

TEST(Families, PairFamilyMatchesBuiltinAffine) {
  const auto w = additive_window(60);
  const auto pair = make_family_from_pair(w, 1, 2, "param0 + param1 * slot0",
                                          ParamRegion{{Predicate::all(), Predicate::parse("interval:1:60")}},
                                          ParamEnumeration{EnumMode::kBoundedScan, 10});
  const auto aff = builtin_affine(w);
  for (std::int64_t a = 0; a <= 5; ++a) {
    for (std::int64_t b = 1; b <= 5; ++b) {
      for (std::int64_t x = 0; x <= 8; ++x) EXPECT_EQ(apply1(pair, {a, b}, x), apply1(aff, {a, b}, x));
    }
  }
}

TEST(Families, PairFamilyRejectsAnchoredMode) {
  const auto w = additive_window(60);
  EXPECT_THROW(make_family_from_pair(w, 1, 1, "slot0 + param0", ParamRegion{{Predicate::all()}},
                                     ParamEnumeration{EnumMode::kCompleteAnchored, 0}),
               Error);
}

TEST(Families, AnchoredStreamIsSortedAndInRegion) {
  const auto w = additive_window(200);
  const auto B = GroundSet::from_predicate(w, Predicate::evens());
  for (const auto& fam : {builtin_right_translations(w), builtin_affine(w), builtin_affine(w, 3)}) {
    const auto F = elems(*w, {1, 3, 8});
    const auto stream = fam.enumerate_params(F, B);
    EXPECT_TRUE(stream.complete) << fam.name();
    EXPECT_FALSE(stream.params.empty());
    EXPECT_TRUE(std::is_sorted(stream.params.begin(), stream.params.end()));
    for (const auto& p : stream.params) EXPECT_TRUE(fam.in_region(p));
  }
}

TEST(Families, BoundedScanIsIncomplete) {
  const auto w = additive_window(500);
  const auto geo = builtin_geoarithmetic(w);
  const auto B = GroundSet::from_predicate(w, Predicate::evens());
  const auto F = elems(*w, {1, 2});
  EXPECT_FALSE(geo.enumerate_params(F, B, 10).complete);
}

TEST(Families, PolynomialFamilyExcludesConstants) {
  const auto w = additive_window(100);
  const auto S = GroundSet::from_values(w, std::vector<std::int64_t>{0, 1, 2});
  const auto poly = builtin_polynomial(w, S, {0, 1, 2}, 2);
  EXPECT_FALSE(poly.in_region(ParamTuple{2, 0, 0}));
  EXPECT_TRUE(poly.in_region(ParamTuple{0, 0, 1}));
  EXPECT_EQ(apply1(poly, {1, 2, 1}, 3), 16);
}

TEST(Families, WordSuffix) {
  const auto w = Window::make(WindowKind::kFreeWords, 5, {'a', 'b'});
  const auto fam = builtin_word_suffix(w, 'a');
  const std::vector<Element> t{w->parse("b")};
  EXPECT_EQ(w->display(*fam.apply(ParamTuple{2}, t)), "baa");
  EXPECT_FALSE(fam.apply(ParamTuple{5}, t).has_value());
}
