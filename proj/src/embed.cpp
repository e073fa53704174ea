#include "finembed/embed.hpp"

#include <algorithm>

#include "finembed/error.hpp"
#include "finembed/rng.hpp"

namespace finembed {

std::string_view outcome_name(Outcome outcome) {
  switch (outcome) {
    case Outcome::kYes: return "yes";
    case Outcome::kNo: return "no";
    case Outcome::kUnknown: return "unknown";
  }
  return "";
}

std::string_view criterion_status_name(CriterionStatus status) {
  switch (status) {
    case CriterionStatus::kSatisfied: return "satisfied";
    case CriterionStatus::kViolated: return "violated";
    case CriterionStatus::kUndetermined: return "undetermined";
    case CriterionStatus::kSkipped: return "skipped";
  }
  return "";
}

namespace {

std::vector<Element> sorted_unique(std::vector<Element> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// f(base^n), or nullopt if some value leaves the window.
std::optional<std::vector<Element>> image_of(const FamilySpec& family, const ParamTuple& params,
                                             std::span<const Element> base) {
  const TupleSet tuples(base, family.arity());
  std::vector<Element> out;
  out.reserve(tuples.size());
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    const auto y = family.evaluate(params, tuples[t]);
    if (!y) return std::nullopt;
    out.push_back(*y);
  }
  return sorted_unique(std::move(out));
}

void tally(CriterionTally& t, CriterionStatus s) {
  switch (s) {
    case CriterionStatus::kSatisfied: ++t.satisfied; break;
    case CriterionStatus::kViolated: ++t.violated; break;
    case CriterionStatus::kUndetermined: ++t.undetermined; break;
    case CriterionStatus::kSkipped: ++t.skipped; break;
  }
}

CriterionStatus status_of(const EmbedVerdict& v) {
  switch (v.outcome) {
    case Outcome::kYes: return CriterionStatus::kSatisfied;
    case Outcome::kNo: return CriterionStatus::kViolated;
    case Outcome::kUnknown: return CriterionStatus::kUndetermined;
  }
  return CriterionStatus::kUndetermined;
}

}  // namespace

EmbedVerdict embed_finite(std::span<const Element> F_in, const GroundSet& B, const FamilySpec& family,
                          const EmbedOptions& options) {
  if (F_in.empty()) throw Error(ErrorCode::kInvalidArgument, "F must be non-empty");
  if (!B.window().same_as(family.window())) {
    throw Error(ErrorCode::kWrongCarrier, "target set and family live on different windows");
  }
  for (const auto e : F_in) {
    if (!family.window().contains(e)) {
      throw Error(ErrorCode::kFOutsideWindow, "F member code " + std::to_string(e.code) + " outside window");
    }
  }
  const std::vector<Element> F = sorted_unique({F_in.begin(), F_in.end()});
  if (family.arity() >= 2 && F.size() > options.max_tuple_base) {
    throw Error(ErrorCode::kFTooLarge, "|F| = " + std::to_string(F.size()) + " exceeds the tuple cap " +
                                           std::to_string(options.max_tuple_base) + " for arity " +
                                           std::to_string(family.arity()));
  }
  const TupleSet tuples(F, family.arity());
  EmbedVerdict verdict;
  std::vector<Element> image;
  verdict.complete = family.for_each_param(F, B, tuples, [&](const ParamTuple& params) {
    ++verdict.params_examined;
    image.clear();
    for (std::size_t t = 0; t < tuples.size(); ++t) {
      const auto y = family.evaluate(params, tuples[t]);
      if (!y || !B.contains(*y)) return true;
      image.push_back(*y);
    }
    verdict.witness = EmbedWitness{F, params, sorted_unique(image)};
    return false;
  });
  if (verdict.witness) {
    verdict.outcome = Outcome::kYes;
  } else {
    verdict.outcome = verdict.complete ? Outcome::kNo : Outcome::kUnknown;
  }
  return verdict;
}

EmbedVerdict fe_decide(const GroundSet& A, const GroundSet& B, const FamilySpec& family, const EmbedOptions& options) {
  if (!A.is_explicit()) throw Error(ErrorCode::kANotExplicit, "fe_decide needs an explicit finite A; use fe_probe");
  const auto members = A.elements();
  if (members.empty()) {
    // Vacuous: the only finite subset of the empty set has empty image.
    EmbedVerdict v;
    v.outcome = Outcome::kYes;
    v.complete = true;
    v.witness = EmbedWitness{};
    return v;
  }
  return embed_finite(members, B, family, options);
}

std::vector<ProbeResult> fe_probe(const GroundSet& A, const GroundSet& B, const FamilySpec& family,
                                  std::span<const std::size_t> probe_sizes, const ProbeOptions& options) {
  if (!std::is_sorted(probe_sizes.begin(), probe_sizes.end())) {
    throw Error(ErrorCode::kInvalidArgument, "probe sizes must be ascending");
  }
  const std::size_t largest = probe_sizes.empty() ? 0 : probe_sizes.back();
  const auto prefix = A.elements(std::max<std::size_t>(largest, 1));
  if (prefix.empty()) throw Error(ErrorCode::kAEmpty, "A has no members inside the window");

  std::vector<ProbeResult> results;
  std::vector<Element> pool;
  if (options.random_subsets > 0) pool = A.elements();
  Rng rng(options.seed);
  for (const auto p : probe_sizes) {
    if (p == 0) throw Error(ErrorCode::kInvalidArgument, "probe sizes must be >= 1");
    const std::size_t take = std::min(p, prefix.size());
    ProbeResult r;
    r.requested_size = p;
    r.verdict = embed_finite(std::span(prefix.data(), take), B, family, options.embed);
    results.push_back(std::move(r));
    for (std::size_t k = 0; k < options.random_subsets; ++k) {
      // Partial Fisher-Yates over the member pool.
      std::vector<Element> shuffled = pool;
      const std::size_t m = std::min(p, shuffled.size());
      for (std::size_t i = 0; i < m; ++i) {
        const auto j = static_cast<std::size_t>(rng.uniform(static_cast<std::int64_t>(i),
                                                            static_cast<std::int64_t>(shuffled.size()) - 1));
        std::swap(shuffled[i], shuffled[j]);
      }
      ProbeResult extra;
      extra.requested_size = p;
      extra.random = true;
      extra.verdict = embed_finite(std::span(shuffled.data(), m), B, family, options.embed);
      results.push_back(std::move(extra));
    }
  }
  return results;
}

bool verify_witness(const EmbedWitness& witness, const GroundSet& B, const FamilySpec& family) {
  if (!family.in_region(witness.params)) return false;
  if (witness.F.empty()) return witness.image.empty();
  const TupleSet tuples(witness.F, family.arity());
  std::vector<Element> image;
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    const auto y = family.apply(witness.params, tuples[t]);
    if (!y || !B.contains(*y)) return false;
    image.push_back(*y);
  }
  return sorted_unique(std::move(image)) == witness.image;
}

UnionSplit check_union_split(const GroundSet& A, const GroundSet& B, std::span<const FamilySpec> families,
                             const EmbedOptions& options) {
  for (std::size_t i = 0; i < families.size(); ++i) {
    auto verdict = fe_decide(A, B, families[i], options);
    if (verdict.outcome == Outcome::kYes) return UnionSplit{i, std::move(verdict)};
  }
  throw Error(ErrorCode::kUnionEmbeddingFails, "A does not embed in B over the union of the given families");
}

TransitivityReport check_transitive_criterion(const FamilySpec& family, std::span<const std::vector<Element>> samples,
                                              const CriterionOptions& options) {
  TransitivityReport report;
  const auto params = family.sample_params(options.param_samples, options.param_bound);
  const WindowPtr& window = family.window_ptr();
  for (const auto& F_raw : samples) {
    const auto F = sorted_unique(F_raw);
    for (const auto& f : params) {
      for (const auto& g : params) {
        TransitivityCase c;
        c.F = F;
        c.f = f;
        c.g = g;
        const auto first = image_of(family, f, F);
        const auto second =
            first && (family.arity() == 1 || first->size() <= options.embed.max_tuple_base)
                ? image_of(family, g, *first)
                : std::nullopt;
        if (!second) {
          tally(report.tally, c.status);
          report.cases.push_back(std::move(c));
          continue;
        }
        c.target = *second;
        const auto target = GroundSet::explicit_set(window, c.target);
        const auto verdict = embed_finite(F, target, family, options.embed);
        c.status = status_of(verdict);
        if (verdict.witness) c.h = verdict.witness->params;
        if (family.arity() == 1) {
          c.composed = family.compose(f, g);
          if (c.composed) {
            const auto composed_image = image_of(family, *c.composed, F);
            c.composed_valid = composed_image && std::includes(c.target.begin(), c.target.end(),
                                                               composed_image->begin(), composed_image->end());
          }
        }
        tally(report.tally, c.status);
        report.cases.push_back(std::move(c));
      }
    }
  }
  return report;
}

ReflexivityReport check_reflexive_criterion(const FamilySpec& family, std::span<const std::vector<Element>> samples,
                                            const EmbedOptions& options) {
  ReflexivityReport report;
  for (const auto& F_raw : samples) {
    ReflexivityCase c;
    c.F = sorted_unique(F_raw);
    const auto self = GroundSet::explicit_set(family.window_ptr(), c.F);
    const auto verdict = embed_finite(c.F, self, family, options);
    c.status = status_of(verdict);
    if (verdict.witness) c.f = verdict.witness->params;
    tally(report.tally, c.status);
    report.cases.push_back(std::move(c));
  }
  return report;
}

UpwardClosureReport check_upward_closed(const SetProperty& property, std::span<const UpwardPair> pairs,
                                        const FamilySpec& family, const EmbedOptions& options) {
  UpwardClosureReport report;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& pair = pairs[i];
    if (!pair.a.is_explicit()) {
      throw Error(ErrorCode::kUnverifiedPair, "pair " + std::to_string(i) + ": A must be explicit to be verified");
    }
    const auto verdict = fe_decide(pair.a, pair.b, family, options);
    if (verdict.outcome != Outcome::kYes) {
      throw Error(ErrorCode::kUnverifiedPair,
                  "pair " + std::to_string(i) + ": A <=_F B not established (" +
                      std::string(outcome_name(verdict.outcome)) + ")");
    }
    UpwardClosureCase c;
    c.witness = *verdict.witness;
    c.holds_in_a = property.test(pair.a);
    c.holds_in_b = property.test(pair.b);
    if (!c.transfers()) {
      ++report.counterexamples;
      if (!report.first_counterexample) report.first_counterexample = i;
    }
    report.cases.push_back(std::move(c));
  }
  return report;
}

}  // namespace finembed
