#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "finembed/carrier.hpp"
#include "finembed/embed.hpp"
#include "finembed/families.hpp"
#include "finembed/rational.hpp"

namespace finembed {

/// Increasing chain F_1 ⊆ F_2 ⊆ ... of non-empty finite sets, stored as
/// element values.
class Net {
 public:
  /// Throws kInvalidArgument for an empty level or a broken inclusion chain.
  static Net make(std::vector<std::vector<std::int64_t>> levels, std::string label = {});

  std::size_t size() const noexcept { return levels_.size(); }
  /// Level n, 1-based. Values are sorted and distinct.
  const std::vector<std::int64_t>& level(std::size_t n) const { return levels_.at(n - 1); }
  const std::string& label() const noexcept { return label_; }

 private:
  std::vector<std::vector<std::int64_t>> levels_;
  std::string label_;
};

/// F_n = {1, ..., n}. Throws kInvalidArgument when maxN < 1.
Net interval_net(std::size_t maxN);

/// "interval:N".
Net parse_net(std::string_view text);

struct DensityWitness {
  std::size_t n = 0;
  Element shift;
  bool formal_identity = false;  // shift is the adjoined identity of a non-unital window
  std::size_t hits = 0;          // |A ∩ F_n x|
  std::size_t level_size = 0;    // |F_n|
  Rational ratio;
};

/// For tail m: max over n >= m of the best shift for F_n.
struct TailMaximum {
  std::size_t m = 0;
  DensityWitness witness;
};

struct DensityReport {
  Rational value;
  std::size_t tail_start = 0;
  std::vector<TailMaximum> tails;  // m = 1 .. N
  std::uint64_t shifts_skipped = 0;
  const DensityWitness& witness() const { return tails.at(tail_start - 1).witness; }
};

/// Finite-scale d*_F(A): the value is the tail maximum at `tail` (default:
/// the last net index). Shifts x range over the window plus the identity;
/// shifts that push F_n x out of the window are skipped and counted.
/// Throws kNetExceedsWindow when some F_n is not inside the window.
DensityReport upper_density(const GroundSet& A, const Net& net, std::optional<std::size_t> tail = std::nullopt);

/// Recounts |A ∩ F_n x| / |F_n| for a witness.
bool verify_density_witness(const DensityWitness& witness, const GroundSet& A, const Net& net);

/// max over (x, y) of |{s : s x = y}| inside the window.
std::uint64_t weak_cancellativity_bound(const Window& window);

struct DensityPair {
  GroundSet a;
  GroundSet b;
  std::vector<std::size_t> probe_sizes;
};

struct DensityPairResult {
  Rational density_a;
  Rational density_b;
  Rational margin;  // d*(B) + tol - d*(A) / b
  bool holds = false;
};

struct MonotonicityReport {
  std::uint64_t b = 0;
  Rational tolerance;
  std::vector<DensityPairResult> pairs;
  std::size_t violations = 0;
};

/// Checks (1/b) d*(A) <= d*(B) + tolerance on pairs whose relation A <= B is
/// confirmed by fe_probe at the pair's probe sizes (fe_decide when A is
/// explicit and no probes are given). Throws kUnverifiedPair otherwise.
MonotonicityReport check_density_monotonicity(std::span<const DensityPair> pairs, const FamilySpec& family,
                                              const Net& net, const Rational& tolerance,
                                              const EmbedOptions& options = {});

}  // namespace finembed
