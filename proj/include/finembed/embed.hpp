#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "finembed/carrier.hpp"
#include "finembed/families.hpp"

namespace finembed {

/// Proof that f(F^n) is contained in B for the family member f = G(., params).
struct EmbedWitness {
  std::vector<Element> F;
  ParamTuple params;
  std::vector<Element> image;
};

enum class Outcome { kYes, kNo, kUnknown };
std::string_view outcome_name(Outcome outcome);

/// `kNo` is only produced by complete enumerations; an exhausted bounded
/// scan yields `kUnknown`.
struct EmbedVerdict {
  Outcome outcome = Outcome::kUnknown;
  std::optional<EmbedWitness> witness;
  std::uint64_t params_examined = 0;
  bool complete = false;
};

struct EmbedOptions {
  /// Largest |F| accepted when the family arity is >= 2 (|F|^n tuples).
  std::size_t max_tuple_base = 12;
};

/// Decides whether some member of the family maps F^n into B. The reported
/// witness is the first one in ascending parameter order.
EmbedVerdict embed_finite(std::span<const Element> F, const GroundSet& B, const FamilySpec& family,
                          const EmbedOptions& options = {});

/// A <=_F B for an explicit finite A; the largest finite subset (A itself)
/// decides the relation.
EmbedVerdict fe_decide(const GroundSet& A, const GroundSet& B, const FamilySpec& family,
                       const EmbedOptions& options = {});

struct ProbeOptions {
  /// Extra seeded random subsets of A per probe size, beyond the canonical prefix.
  std::size_t random_subsets = 0;
  std::uint64_t seed = 0;
  EmbedOptions embed;
};

struct ProbeResult {
  std::size_t requested_size = 0;
  bool random = false;
  EmbedVerdict verdict;
};

/// Approximates A <=_F B for infinite-looking A by testing prefixes of A in
/// canonical order. A `kNo` at any probe refutes the relation.
std::vector<ProbeResult> fe_probe(const GroundSet& A, const GroundSet& B, const FamilySpec& family,
                                  std::span<const std::size_t> probe_sizes, const ProbeOptions& options = {});

/// Re-evaluates the witness through the checked family interface.
bool verify_witness(const EmbedWitness& witness, const GroundSet& B, const FamilySpec& family);

struct UnionSplit {
  std::size_t index = 0;  // 0-based position in the family list
  EmbedVerdict verdict;
};

/// Given A <= B over the union of the families, finds a single family that
/// already embeds A. Throws kUnionEmbeddingFails when the union does not.
UnionSplit check_union_split(const GroundSet& A, const GroundSet& B, std::span<const FamilySpec> families,
                             const EmbedOptions& options = {});

enum class CriterionStatus { kSatisfied, kViolated, kUndetermined, kSkipped };
std::string_view criterion_status_name(CriterionStatus status);

struct CriterionOptions {
  std::size_t param_samples = 4;   // f and g range over the first samples of R
  std::int64_t param_bound = 4;    // coordinate cap for the sample
  EmbedOptions embed;
};

struct TransitivityCase {
  std::vector<Element> F;
  ParamTuple f;
  ParamTuple g;
  std::vector<Element> target;  // g([f(F^n)]^n)
  CriterionStatus status = CriterionStatus::kSkipped;
  std::optional<ParamTuple> h;
  std::optional<ParamTuple> composed;  // g o f when the family knows it
  bool composed_valid = false;
};

struct CriterionTally {
  std::size_t satisfied = 0;
  std::size_t violated = 0;
  std::size_t undetermined = 0;
  std::size_t skipped = 0;
};

struct TransitivityReport {
  std::vector<TransitivityCase> cases;
  CriterionTally tally;
};

/// For each F and pair (f, g), searches h with h(F^n) inside g([f(F^n)]^n).
/// Pairs whose images leave the window are skipped.
TransitivityReport check_transitive_criterion(const FamilySpec& family, std::span<const std::vector<Element>> samples,
                                              const CriterionOptions& options = {});

struct ReflexivityCase {
  std::vector<Element> F;
  CriterionStatus status = CriterionStatus::kUndetermined;
  std::optional<ParamTuple> f;
};

struct ReflexivityReport {
  std::vector<ReflexivityCase> cases;
  CriterionTally tally;
};

/// For each F, searches f with f(F^n) inside F.
ReflexivityReport check_reflexive_criterion(const FamilySpec& family, std::span<const std::vector<Element>> samples,
                                            const EmbedOptions& options = {});

/// A named property of sets, e.g. "contains an AP of length 4".
struct SetProperty {
  std::string name;
  std::function<bool(const GroundSet&)> test;
};

struct UpwardPair {
  GroundSet a;
  GroundSet b;
};

struct UpwardClosureCase {
  EmbedWitness witness;
  bool holds_in_a = false;
  bool holds_in_b = false;
  bool transfers() const { return !holds_in_a || holds_in_b; }
};

struct UpwardClosureReport {
  std::vector<UpwardClosureCase> cases;
  std::size_t counterexamples = 0;
  std::optional<std::size_t> first_counterexample;
  bool closed() const { return counterexamples == 0; }
};

/// Checks A in P => B in P on pairs with A <=_F B. Each pair is verified
/// first; an explicit A that does not embed raises kUnverifiedPair.
UpwardClosureReport check_upward_closed(const SetProperty& property, std::span<const UpwardPair> pairs,
                                        const FamilySpec& family, const EmbedOptions& options = {});

}  // namespace finembed
