#include <gtest/gtest.h>

#include "finembed/error.hpp"
#include "finembed/io.hpp"

using namespace finembed;
using io::json;

namespace {

std::string message_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return "no error";
}

}  // namespace

TEST(Io, ParsesExplicitAndPredicateSets) {
  const auto a = io::parse_set(json::parse(R"({"window": {"kind": "additive-naturals", "bound": 40},
                                               "set": {"explicit": [3, 1, 2]}})"));
  EXPECT_EQ(a.values(), (std::vector<std::int64_t>{1, 2, 3}));
  const auto b = io::parse_set(json::parse(R"({"set": {"predicate": "evens"}})"), "b", a.window_ptr());
  EXPECT_TRUE(b.contains_value(40));
  EXPECT_FALSE(b.is_explicit());
}

TEST(Io, WordSets) {
  const auto s = io::parse_set(json::parse(R"({"window": {"kind": "free-words", "bound": 3, "alphabet": ["a", "b"]},
                                               "set": {"explicit": ["ab", "b"]}})"));
  EXPECT_EQ(s.count(), 2u);
  EXPECT_EQ(io::element_json(s.window(), s.elements().front()), json("b"));
}

TEST(Io, ErrorsNameTheField) {
  EXPECT_NE(message_of([] { io::parse_window(json::parse(R"({"kind": "additive-naturals", "bound": "x"})"), "a.json.window"); })
                .find("a.json.window.bound"),
            std::string::npos);
  EXPECT_NE(message_of([] { io::parse_set(json::parse(R"({"window": {"kind": "additive-naturals", "bound": 5},
                                                          "set": {"explicit": [1, 9]}})"), "s"); })
                .find("s.set.explicit[1]"),
            std::string::npos);
  EXPECT_NE(message_of([] { io::parse_window(json::parse(R"({"kind": "groups", "bound": 5})")); }).find("window.kind"),
            std::string::npos);
}

TEST(Io, FamiliesFromJson) {
  const auto w = additive_window(50);
  EXPECT_EQ(io::parse_family(json::parse(R"({"builtin": "affine", "args": {"min_slope": 2}})"), w).param_arity(), 2u);
  const auto pair = io::parse_family(
      json::parse(R"({"pair": {"n": 1, "k": 1, "term": "slot0 + param0", "R": "all",
                               "enum": {"mode": "bounded-scan", "bound": 10}}})"),
      w);
  EXPECT_EQ(pair.enumeration().mode, EnumMode::kBoundedScan);
  EXPECT_THROW(io::parse_family(json::parse(R"({"builtin": "rotations"})"), w), Error);
}

TEST(Io, VerdictJson) {
  const auto w = additive_window(40);
  const auto fam = builtin_affine(w);
  const auto A = GroundSet::from_values(w, std::vector<std::int64_t>{1, 2, 3});
  const auto v = fe_decide(A, GroundSet::from_predicate(w, Predicate::evens()), fam);
  const auto j = io::to_json(v, fam);
  EXPECT_EQ(j["outcome"], "yes");
  EXPECT_EQ(j["witness"]["params"], json::parse("[0, 2]"));
  EXPECT_EQ(j["witness"]["image"], json::parse("[2, 4, 6]"));
}

TEST(Io, Fnv1a) {
  EXPECT_EQ(io::fnv1a_hex(""), "cbf29ce484222325");
  EXPECT_EQ(io::fnv1a_hex("a"), "af63dc4c8601ec8c");
}
