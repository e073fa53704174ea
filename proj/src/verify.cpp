#include "finembed/verify.hpp"

#include <algorithm>
#include <array>

#include "finembed/error.hpp"
#include "finembed/rng.hpp"

namespace finembed {

using io::json;

std::string_view budget_name(Budget budget) {
  switch (budget) {
    case Budget::kTiny: return "tiny";
    case Budget::kSmall: return "small";
    case Budget::kMedium: return "medium";
    case Budget::kLarge: return "large";
  }
  return "";
}

Budget parse_budget(std::string_view name) {
  for (const auto b : {Budget::kTiny, Budget::kSmall, Budget::kMedium, Budget::kLarge}) {
    if (budget_name(b) == name) return b;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown budget '" + std::string(name) + "'");
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"listona",      "preorder",  "maxset",
                                              "density-mono", "strong-pr", "upward-closed"};
  return names;
}

bool VerifyRun::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteOutcome& s) { return s.passed(); });
}

namespace {

// Budget-indexed sizes {tiny, small, medium, large}.
using Scale = std::array<std::size_t, 4>;
std::size_t pick(const Scale& s, Budget b) { return s[static_cast<std::size_t>(b)]; }

// Each suite draws from its own stream so suites can run alone or together.
std::uint64_t suite_seed(std::uint64_t seed, std::string_view name) {
  return seed ^ std::stoull(io::fnv1a_hex(name), nullptr, 16);
}

class Recorder {
 public:
  explicit Recorder(SuiteOutcome& out) : out_(out) {}
  void check(bool ok, const std::function<json()>& reproducer) {
    ++out_.checks;
    if (ok) return;
    ++out_.failures;
    if (!out_.reproducer) out_.reproducer = reproducer();
  }

 private:
  SuiteOutcome& out_;
};

std::vector<std::int64_t> random_values(Rng& rng, std::size_t count, std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> v;
  const auto span = static_cast<std::size_t>(hi - lo + 1);
  count = std::min(count, span);
  while (v.size() < count) {
    const auto x = rng.uniform(lo, hi);
    if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
  }
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<std::int64_t> random_density(Rng& rng, std::int64_t lo, std::int64_t hi, std::uint64_t num,
                                         std::uint64_t den) {
  std::vector<std::int64_t> v;
  for (std::int64_t x = lo; x <= hi; ++x) {
    if (rng.coin(num, den)) v.push_back(x);
  }
  return v;
}

std::vector<std::int64_t> merged(std::vector<std::int64_t> a, const std::vector<std::int64_t>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

std::vector<std::int64_t> shifted(const std::vector<std::int64_t>& a, std::int64_t r) {
  std::vector<std::int64_t> out;
  for (const auto x : a) out.push_back(x + r);
  return out;
}

bool is_yes(const EmbedVerdict& v) { return v.outcome == Outcome::kYes; }

// Monotonicity in both arguments and the union split.
void suite_listona(SuiteOutcome& out, Rng& rng, Budget budget) {
  Recorder rec(out);
  const std::int64_t W = static_cast<std::int64_t>(pick({24, 32, 40, 40}, budget));
  const auto window = additive_window(static_cast<std::uint64_t>(W));
  const std::array<FamilySpec, 2> families{builtin_right_translations(window), builtin_affine(window)};
  const std::size_t trials = pick({100, 500, 2000, 5000}, budget);
  std::size_t yes_a2 = 0;
  std::size_t yes_b1 = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto& family = families[t % 2];
    const auto a2 = random_values(rng, static_cast<std::size_t>(rng.uniform(1, 4)), 0, W / 2);
    std::vector<std::int64_t> a1;
    for (const auto x : a2) {
      if (rng.coin(1, 2)) a1.push_back(x);
    }
    if (a1.empty()) a1.push_back(a2.front());
    std::vector<std::int64_t> b1;
    if (rng.coin(1, 2)) {
      const auto r = rng.uniform(0, W - a2.back());
      b1 = merged(shifted(a2, r), random_values(rng, 2, 0, W));
    } else {
      b1 = random_density(rng, 0, W, 1, 2);
    }
    const auto b2 = merged(b1, random_density(rng, 0, W, 1, 4));
    const auto A1 = GroundSet::from_values(window, a1);
    const auto A2 = GroundSet::from_values(window, a2);
    const auto B1 = GroundSet::from_values(window, b1);
    const auto B2 = GroundSet::from_values(window, b2);
    const auto repro = [&] {
      return json{{"family", family.name()}, {"window", W}, {"A1", a1}, {"A2", a2}, {"B1", b1}, {"B2", b2}};
    };

    const auto v2 = fe_decide(A2, B1, family);
    if (is_yes(v2)) {
      ++yes_a2;
      rec.check(verify_witness(*v2.witness, B1, family), repro);
      rec.check(is_yes(fe_decide(A1, B1, family)), repro);
    }
    const auto v1 = fe_decide(A1, B1, family);
    if (is_yes(v1)) {
      ++yes_b1;
      rec.check(is_yes(fe_decide(A1, B2, family)), repro);
    }
    // Verdicts are never "unknown" for anchored built-ins.
    rec.check(v2.outcome != Outcome::kUnknown, repro);
  }

  const std::array<FamilySpec, 3> pool{builtin_affine(window, 2), builtin_right_translations(window),
                                       builtin_affine(window)};
  const std::size_t splits = pick({30, 100, 300, 1000}, budget);
  for (std::size_t t = 0; t < splits; ++t) {
    const auto a = random_values(rng, static_cast<std::size_t>(rng.uniform(1, 3)), 0, W / 4);
    std::vector<std::int64_t> image;
    if (rng.coin(1, 2)) {
      image = shifted(a, rng.uniform(0, W - a.back()));
    } else {
      auto slope = rng.uniform(1, 3);
      if (slope * a.back() > W) slope = 1;
      const auto offset = rng.uniform(0, W - slope * a.back());
      for (const auto x : a) image.push_back(offset + slope * x);
    }
    const auto b = merged(image, random_values(rng, 2, 0, W));
    const auto A = GroundSet::from_values(window, a);
    const auto B = GroundSet::from_values(window, b);
    const auto repro = [&] { return json{{"window", W}, {"A", a}, {"B", b}}; };
    try {
      const auto split = check_union_split(A, B, pool);
      const auto again = fe_decide(A, B, pool[split.index]);
      rec.check(split.index < pool.size() && is_yes(again) && verify_witness(*again.witness, B, pool[split.index]),
                repro);
    } catch (const Error& e) {
      rec.check(false, [&] {
        auto j = repro();
        j["error"] = e.what();
        return j;
      });
    }
  }
  out.details = {{"window", W},
                 {"monotonicity_trials", trials},
                 {"a_side_premises", yes_a2},
                 {"b_side_premises", yes_b1},
                 {"union_splits", splits}};
}

// Transitivity and reflexivity criteria.
void suite_preorder(SuiteOutcome& out, Rng& rng, Budget budget) {
  Recorder rec(out);
  const std::int64_t W = 40;
  const auto window = additive_window(W);
  const std::size_t count = pick({20, 50, 100, 200}, budget);
  std::vector<std::vector<Element>> samples;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<Element> F;
    for (const auto v : random_values(rng, static_cast<std::size_t>(rng.uniform(1, 3)), 0, W / 4)) {
      F.push_back(*window->from_value(v));
    }
    samples.push_back(std::move(F));
  }
  json details = json::object();
  for (const auto& family : {builtin_right_translations(window), builtin_affine(window)}) {
    const auto report = check_transitive_criterion(family, samples);
    std::size_t composed = 0;
    for (const auto& c : report.cases) {
      if (c.status == CriterionStatus::kViolated) {
        rec.check(false, [&] {
          return json{{"family", family.name()},
                      {"F", io::elements_json(*window, c.F)},
                      {"f", c.f},
                      {"g", c.g}};
        });
      } else {
        rec.check(true, {});
      }
      composed += c.composed_valid ? 1 : 0;
    }
    details[family.name()] = {{"satisfied", report.tally.satisfied},
                              {"violated", report.tally.violated},
                              {"undetermined", report.tally.undetermined},
                              {"skipped", report.tally.skipped},
                              {"composed_witnesses", composed}};
  }
  const auto affine = builtin_affine(window);
  const auto reflexive = check_reflexive_criterion(affine, samples);
  for (const auto& c : reflexive.cases) {
    rec.check(c.status == CriterionStatus::kSatisfied, [&] {
      return json{{"family", "affine"}, {"F", io::elements_json(*window, c.F)}};
    });
  }
  // Translations restricted to positive shifts: {1, 2} has no f with f(F) ⊆ F.
  const auto positive = builtin_translations(window, TranslationSide::kRight, Predicate::interval(1, W));
  const std::vector<std::vector<Element>> probe{{Element{1}, Element{2}}};
  const auto restricted = check_reflexive_criterion(positive, probe);
  rec.check(restricted.tally.violated == 1, [] { return json{{"family", "translations r>=1"}, {"F", {1, 2}}}; });
  details["affine_reflexive"] = reflexive.tally.satisfied;
  details["samples"] = count;
  out.details = details;
}

// Maximality probes agree with the richness detectors.
void suite_maxset(SuiteOutcome& out, Rng& rng, Budget budget) {
  Recorder rec(out);
  const std::int64_t W = static_cast<std::int64_t>(pick({60, 80, 120, 160}, budget));
  const auto window = additive_window(static_cast<std::uint64_t>(W));
  const auto affine = builtin_affine(window);
  const auto translations = builtin_right_translations(window);
  const std::size_t trials = pick({30, 100, 300, 600}, budget);
  for (std::size_t t = 0; t < trials; ++t) {
    const auto values = random_density(rng, 0, W, static_cast<std::uint64_t>(rng.uniform(1, 4)), 5);
    const auto A = GroundSet::from_values(window, values);
    const auto ap = longest_ap(A);
    rec.check(verify_certificate(ap, A), [&] { return json{{"A", values}, {"check", "ap certificate"}}; });
    for (std::size_t k = 1; k <= 5; ++k) {
      std::vector<Element> F;
      for (std::uint64_t c = 0; c <= k; ++c) F.push_back(Element{c});
      const bool embeds = is_yes(embed_finite(F, A, affine));
      rec.check(embeds == (ap.length >= k + 1), [&] {
        return json{{"A", values}, {"k", k}, {"check", "ap vs affine"}};
      });
      const std::array<std::size_t, 1> lengths{k};
      const bool thick = is_thick_window(A, lengths).all_found();
      rec.check(thick == is_yes(embed_finite(F, A, translations)), [&] {
        return json{{"A", values}, {"k", k}, {"check", "thick vs translations"}};
      });
    }
  }
  const std::array<std::size_t, 4> sizes{2, 4, 8, 16};
  const auto evens = GroundSet::from_predicate(window, Predicate::evens());
  for (const auto& r : maximality_probe(evens, affine, sizes)) {
    rec.check(is_yes(r.verdict), [&] { return json{{"A", "evens"}, {"probe", r.requested_size}}; });
  }
  const auto full = GroundSet::from_predicate(window, Predicate::all());
  for (const auto& r : maximality_probe(full, translations, sizes)) {
    rec.check(is_yes(r.verdict), [&] { return json{{"A", "all"}, {"probe", r.requested_size}}; });
  }
  out.details = {{"window", W}, {"random_sets", trials}};
}

// Density monotonicity: (1/b) d*(A) <= d*(B) for A <= B under right translations.
void suite_density(SuiteOutcome& out, Rng& rng, Budget budget) {
  Recorder rec(out);
  const std::int64_t W = static_cast<std::int64_t>(pick({400, 1000, 2000, 4000}, budget));
  const auto window = additive_window(static_cast<std::uint64_t>(W));
  const auto net = interval_net(static_cast<std::size_t>(W / 4));
  const auto family = builtin_right_translations(window);
  const Rational tol = Rational::parse("0.02");
  const auto b = weak_cancellativity_bound(*window);
  rec.check(b == 1, [&] { return json{{"check", "weak cancellativity"}, {"b", b}}; });

  const std::size_t count = pick({20, 50, 100, 200}, budget);
  std::vector<DensityPair> pairs;
  std::vector<json> descriptions;
  for (std::size_t t = 0; t < count; ++t) {
    const auto density = static_cast<std::uint64_t>(rng.uniform(1, 9));
    auto a = random_density(rng, 0, W / 4, density, 10);
    if (a.empty()) a.push_back(rng.uniform(0, W / 4));
    const auto r = rng.uniform(0, W / 4);
    const auto b_values = merged(shifted(a, r), random_density(rng, 0, W, 1, 10));
    pairs.push_back({GroundSet::from_values(window, a), GroundSet::from_values(window, b_values), {}});
    descriptions.push_back({{"A", a}, {"shift", r}});
  }
  pairs.push_back({GroundSet::from_predicate(window, Predicate::evens()),
                   GroundSet::from_predicate(window, Predicate::evens()),
                   {3, 5, 8}});
  descriptions.push_back({{"A", "evens"}, {"B", "evens"}});

  const auto report = check_density_monotonicity(pairs, family, net, tol);
  for (std::size_t i = 0; i < report.pairs.size(); ++i) {
    rec.check(report.pairs[i].holds, [&] {
      auto j = descriptions[i];
      j["margin"] = report.pairs[i].margin.to_string();
      return j;
    });
  }
  const auto full = upper_density(GroundSet::from_predicate(window, Predicate::all()), net);
  rec.check(full.value == Rational(1), [&] { return json{{"check", "full window"}, {"value", full.value.to_string()}}; });
  const auto evens = upper_density(GroundSet::from_predicate(window, Predicate::evens()), net);
  rec.check(evens.value == Rational(1, 2), [&] { return json{{"check", "evens"}, {"value", evens.value.to_string()}}; });
  std::size_t tightest = 0;
  for (std::size_t i = 1; i < report.pairs.size(); ++i) {
    if (report.pairs[i].margin < report.pairs[tightest].margin) tightest = i;
  }
  out.details = {{"window", W},
                 {"net", net.label()},
                 {"b", b},
                 {"pairs", report.pairs.size()},
                 {"tolerance", tol.to_string()},
                 {"min_margin", report.pairs[tightest].margin.to_string()}};
}

// Strong PR on [1..N] equals the colouring search.
void suite_strong_pr(SuiteOutcome& out, Rng& rng, Budget budget) {
  Recorder rec(out);
  struct Case {
    Pattern pattern;
    std::int64_t n_max;
  };
  const std::vector<Case> cases{{Pattern::ap(3), 10}, {Pattern::schur(), 6}};
  json thresholds = json::object();
  for (const auto& c : cases) {
    std::optional<std::int64_t> first_forced;
    for (std::int64_t N = 1; N <= c.n_max; ++N) {
      std::vector<std::int64_t> range(static_cast<std::size_t>(N));
      for (std::int64_t i = 0; i < N; ++i) range[static_cast<std::size_t>(i)] = i + 1;
      const auto A = GroundSet::from_values(additive_window(static_cast<std::uint64_t>(N)), range);
      const auto strong = strong_pr_probe(A, c.pattern, 2);
      const auto weak = find_avoiding_coloring(N, 2, c.pattern);
      SearchOptions reversed;
      reversed.order = VariableOrder::kDescending;
      const auto weak_rev = find_avoiding_coloring(N, 2, c.pattern, reversed);
      const auto repro = [&] { return json{{"pattern", c.pattern.to_string()}, {"N", N}}; };
      rec.check(strong.outcome == weak.outcome && weak.outcome == weak_rev.outcome, repro);
      if (weak.outcome == ColoringOutcome::kAvoiding) {
        const auto instances = c.pattern.instances(N);
        rec.check(!find_monochromatic(weak.universe, weak.coloring, instances), repro);
        rec.check(!find_monochromatic(strong.universe, strong.coloring, instances), repro);
        rec.check(!first_forced, repro);  // forced at N implies forced above
      } else if (!first_forced) {
        first_forced = N;
      }
    }
    thresholds[c.pattern.to_string()] = first_forced ? json(*first_forced) : json(nullptr);
  }
  const std::size_t subsets = pick({20, 60, 200, 500}, budget);
  const auto window = additive_window(16);
  for (std::size_t t = 0; t < subsets; ++t) {
    const auto values = random_values(rng, static_cast<std::size_t>(rng.uniform(3, 10)), 1, 16);
    const auto A = GroundSet::from_values(window, values);
    const auto& pattern = cases[t % cases.size()].pattern;
    const auto exhaustive = strong_pr_probe(A, pattern, 2, StrongMode::kExhaustive);
    const auto backtracking = strong_pr_probe(A, pattern, 2, StrongMode::kBacktracking);
    rec.check(exhaustive.outcome == backtracking.outcome,
              [&] { return json{{"pattern", pattern.to_string()}, {"A", values}}; });
  }
  out.details = {{"thresholds", thresholds}, {"random_subsets", subsets}};
}

// AP-richness transfers along translations; "contains 0" does not.
void suite_upward(SuiteOutcome& out, Rng& rng, Budget budget) {
  Recorder rec(out);
  const std::int64_t W = static_cast<std::int64_t>(pick({60, 90, 120, 160}, budget));
  const auto window = additive_window(static_cast<std::uint64_t>(W));
  const auto family = builtin_right_translations(window);
  const std::size_t count = pick({30, 50, 100, 200}, budget);
  std::vector<UpwardPair> pairs;
  for (std::size_t t = 0; t < count; ++t) {
    auto a = random_values(rng, static_cast<std::size_t>(rng.uniform(2, 6)), 0, W / 3);
    if (rng.coin(1, 2)) {
      const auto start = rng.uniform(0, W / 3 - 6);
      const auto stride = rng.uniform(1, 2);
      for (std::int64_t i = 0; i < 4; ++i) a.push_back(start + i * stride);
      a = merged(a, {});
    }
    const auto r = rng.uniform(0, W - a.back());
    const auto b = merged(shifted(a, r), random_values(rng, 3, 0, W));
    pairs.push_back({GroundSet::from_values(window, a), GroundSet::from_values(window, b)});
  }
  const auto ap4 = check_upward_closed(named_property("ap:4"), pairs, family);
  std::size_t holding = 0;
  for (std::size_t i = 0; i < ap4.cases.size(); ++i) {
    holding += ap4.cases[i].holds_in_a ? 1 : 0;
    rec.check(ap4.cases[i].transfers(), [&] {
      return json{{"property", "ap:4"}, {"A", pairs[i].a.values()}, {"B", pairs[i].b.values()}};
    });
  }

  const std::vector<UpwardPair> zero{{GroundSet::from_values(window, std::vector<std::int64_t>{0}),
                                      GroundSet::from_values(window, std::vector<std::int64_t>{5})}};
  const auto contains0 = check_upward_closed(named_property("contains:0"), zero, family);
  rec.check(!contains0.closed(), [] { return json{{"property", "contains:0"}, {"expected", "counterexample"}}; });

  const auto mult = Window::make(WindowKind::kMultiplicativeNaturals, 200);
  const std::vector<std::int64_t> grid{4, 6, 8, 12};
  const std::vector<UpwardPair> scaled{{GroundSet::from_values(mult, grid),
                                        GroundSet::from_values(mult, std::vector<std::int64_t>{12, 18, 24, 36})}};
  const auto gap = check_upward_closed(named_property("gap:2"), scaled, builtin_right_translations(mult));
  rec.check(gap.closed() && gap.cases.front().holds_in_a, [] {
    return json{{"property", "gap:2"}, {"A", {4, 6, 8, 12}}, {"B", {12, 18, 24, 36}}};
  });
  out.details = {{"window", W},
                 {"pairs", count},
                 {"ap4_in_a", holding},
                 {"contains0_counterexample", contains0.first_counterexample ? json(*contains0.first_counterexample)
                                                                            : json(nullptr)}};
}

}  // namespace

SuiteOutcome run_suite(std::string_view name, std::uint64_t seed, Budget budget) {
  SuiteOutcome out;
  out.name = std::string(name);
  Rng rng(suite_seed(seed, name));
  if (name == "listona") {
    suite_listona(out, rng, budget);
  } else if (name == "preorder") {
    suite_preorder(out, rng, budget);
  } else if (name == "maxset") {
    suite_maxset(out, rng, budget);
  } else if (name == "density-mono") {
    suite_density(out, rng, budget);
  } else if (name == "strong-pr") {
    suite_strong_pr(out, rng, budget);
  } else if (name == "upward-closed") {
    suite_upward(out, rng, budget);
  } else {
    throw Error(ErrorCode::kUnknownSuite, "unknown suite '" + std::string(name) + "'");
  }
  return out;
}

VerifyRun run_verify(std::string_view suite, std::uint64_t seed, Budget budget) {
  VerifyRun run;
  if (suite == "all") {
    for (const auto& name : suite_names()) run.suites.push_back(run_suite(name, seed, budget));
  } else {
    run.suites.push_back(run_suite(suite, seed, budget));
  }
  return run;
}

json to_json(const SuiteOutcome& outcome) {
  json out{{"suite", outcome.name},
           {"checks", outcome.checks},
           {"failures", outcome.failures},
           {"status", outcome.passed() ? "pass" : "fail"},
           {"details", outcome.details}};
  if (outcome.reproducer) out["reproducer"] = *outcome.reproducer;
  return out;
}

}  // namespace finembed
