#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "finembed/carrier.hpp"
#include "finembed/polynomial.hpp"

namespace finembed {

/// Upper bound on instances a matcher may produce before
/// kPatternInstanceOverflow.
inline constexpr std::size_t kMaxPatternInstances = 4'000'000;

class Pattern {
 public:
  enum class Kind { kAp, kSchur, kGapGrid, kPolyProgression, kEquation };

  /// "ap:L", "schur", "gap-grid:n[:strict]", "poly:L:D[:S]" (D a comma
  /// list, S a predicate), "eq:POLY[:distinct]".
  static Pattern parse(std::string_view text);

  static Pattern ap(std::size_t length);
  static Pattern schur();
  /// Zero-based grid {b q^j (a + i d) : 0 <= i, j <= n}. Strict mode adds q
  /// and d to each instance.
  static Pattern gap_grid(std::size_t n, bool strict = false);
  /// {P(1), ..., P(l)} for non-constant P = sum a_i x^i, i in D, a_i in S.
  static Pattern poly_progression(std::size_t length, std::vector<int> exponents, Predicate coefficients);
  static Pattern equation(Polynomial polynomial, bool distinct = false);

  Kind kind() const noexcept { return kind_; }
  std::size_t length() const noexcept { return length_; }
  bool strict() const noexcept { return flag_; }
  bool distinct() const noexcept { return flag_; }
  const std::vector<int>& exponents() const noexcept { return exponents_; }
  const std::optional<Predicate>& coefficients() const noexcept { return coefficients_; }
  const std::optional<Polynomial>& polynomial() const noexcept { return polynomial_; }

  /// Every instance inside [1..N] as a sorted set of distinct values,
  /// deduplicated and sorted.
  std::vector<std::vector<std::int64_t>> instances(std::int64_t N) const;

  std::string to_string() const;

 private:
  Kind kind_ = Kind::kAp;
  std::size_t length_ = 0;
  bool flag_ = false;
  std::vector<int> exponents_;
  std::optional<Predicate> coefficients_;
  std::optional<Polynomial> polynomial_;
};

/// Ordered solutions of P = 0 with every entry in [1..N] (and in `allowed`
/// when given), in lexicographic order.
std::vector<std::vector<std::int64_t>> equation_solutions(const Polynomial& p, std::int64_t N, bool distinct = false,
                                                          const GroundSet* allowed = nullptr);

enum class ColoringOutcome { kAvoiding, kForced };
std::string_view coloring_outcome_name(ColoringOutcome outcome);

struct ColoringCertificate {
  ColoringOutcome outcome = ColoringOutcome::kForced;
  std::string pattern;
  std::vector<std::int64_t> universe;  // coloured elements, ascending
  std::vector<int> coloring;           // colour of universe[i]; empty when forced
  std::size_t colors = 0;
  std::uint64_t nodes = 0;
  bool exhaustive = false;
  std::size_t instance_count = 0;
};

enum class VariableOrder { kAscending, kDescending };

struct SearchOptions {
  VariableOrder order = VariableOrder::kAscending;
  std::uint64_t node_limit = 0;  // 0 = unlimited; exceeding it raises kBudgetExceeded
};

/// r-colourings of [1..N] with no monochromatic instance. The avoiding
/// colouring is relabelled so colours appear in order of first use; with
/// ascending order it is the lexicographically least one.
ColoringCertificate find_avoiding_coloring(std::int64_t N, std::size_t colors, const Pattern& pattern,
                                           const SearchOptions& options = {});

/// Same search over an arbitrary finite universe and instance list.
ColoringCertificate search_coloring(std::vector<std::int64_t> universe,
                                    const std::vector<std::vector<std::int64_t>>& instances, std::size_t colors,
                                    const SearchOptions& options = {});

/// Index of the first monochromatic instance, if any.
std::optional<std::size_t> find_monochromatic(const std::vector<std::int64_t>& universe,
                                              const std::vector<int>& coloring,
                                              const std::vector<std::vector<std::int64_t>>& instances);

struct ThresholdResult {
  std::optional<std::int64_t> threshold;  // least forced N, if within Nmax
  std::int64_t n_max = 0;
  std::optional<ColoringCertificate> last_avoiding;  // at threshold - 1 (or Nmax)
};

ThresholdResult ramsey_threshold(const Pattern& pattern, std::size_t colors, std::int64_t n_max,
                                 const SearchOptions& options = {});

enum class StrongMode { kExhaustive, kBacktracking };

inline constexpr std::uint64_t kStrongExhaustionBudget = std::uint64_t{1} << 24;

/// Every r-partition of A has a monochromatic instance (forced), or an
/// avoiding partition of A. Exhaustive mode walks all r^|A| colourings in
/// lexicographic order and raises kBudgetExceeded past the budget.
ColoringCertificate strong_pr_probe(const GroundSet& A, const Pattern& pattern, std::size_t colors,
                                    StrongMode mode = StrongMode::kExhaustive);

struct HomogeneousReport {
  std::string polynomial;
  bool homogeneous = false;
  std::vector<int> monomial_degrees;
  std::size_t solutions = 0;  // in-range ordered solutions
  ColoringCertificate certificate;
};

/// Throws kZeroVariables for constant P and kNonHomogeneousRejected for a
/// non-homogeneous P in strict mode.
HomogeneousReport homogeneous_pr_check(const Polynomial& p, std::size_t colors, std::int64_t N, bool distinct = false,
                                       bool strict = false, const SearchOptions& options = {});

/// Solutions of P = 0 with entries in A ∩ [1..N].
std::vector<std::vector<std::int64_t>> ps_solutions_experiment(const Polynomial& p, const GroundSet& A,
                                                               std::int64_t N, bool distinct = false);

}  // namespace finembed
