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

namespace finembed {

enum class ProgressionKind { kAp, kGapGrid, kGapGridZeroBased, kPolynomial };
std::string_view progression_kind_name(ProgressionKind kind);

/// Witness that a progression sits inside a set.
///
/// params by kind:
///   ap                   (start, stride)
///   gap-grid             (r, a, b)       cells r^i (a + j b), 1 <= i, j <= k
///   gap-grid-zero-based  (b, q, a, d, n) cells b q^j (a + i d), 0 <= i, j <= n
///   polynomial           coefficients a_i for i in `exponents`
/// `length` is the AP length, the grid side, or the number of values P(1..l).
struct ProgressionCertificate {
  ProgressionKind kind = ProgressionKind::kAp;
  std::vector<std::int64_t> params;
  std::vector<int> exponents;
  std::vector<std::int64_t> realized;
  std::size_t length = 0;
};

/// Recomputes every cell from the generator formula and checks membership.
bool verify_certificate(const ProgressionCertificate& certificate, const GroundSet& A);

struct ThickProbe {
  std::size_t length = 0;
  std::optional<Element> shift;
};

struct ThickReport {
  std::vector<ThickProbe> probes;
  bool all_found() const;
};

/// For each probe length L, the least s with F * s inside A, F the first L + 1
/// window elements (additive carriers: an interval of L + 1 members).
ThickReport is_thick_window(const GroundSet& A, std::span<const std::size_t> probe_lengths);

/// Longest AP with stride >= 1; ties prefer the smaller stride, then the
/// smaller start.
ProgressionCertificate longest_ap(const GroundSet& A);

enum class GridIndexing { kOneBased, kZeroBased };

/// Largest geoarithmetic grid inside A. Ties prefer the smaller ratio, then
/// lexicographically smaller remaining parameters.
ProgressionCertificate longest_gap_grid(const GroundSet& A, GridIndexing indexing = GridIndexing::kOneBased);

/// Longest {P(1), ..., P(l)} inside A for an (S, D)-polynomial P of degree
/// at most `degree`. Constant polynomials (D = {0}) are capped at the window
/// bound.
ProgressionCertificate longest_poly_progression(const GroundSet& A, int degree, const GroundSet& coefficients,
                                                std::vector<int> exponents);

/// embed_finite(first p window elements, A, family) for each probe size p.
std::vector<ProbeResult> maximality_probe(const GroundSet& A, const FamilySpec& family,
                                          std::span<const std::size_t> probe_sizes, const EmbedOptions& options = {});

struct SyndeticProbe {
  std::size_t span = 0;
  std::optional<std::int64_t> start;
};

struct SyndeticReport {
  std::int64_t gap = 0;
  std::vector<SyndeticProbe> probes;
  bool all_found() const;
};

/// Window-relative piecewise syndeticity.
/// Additive: for each span L some L consecutive integers in which every g
/// consecutive integers meet A (and A is met at all).
/// Multiplicative: some x with L x in the window such that the members of A
/// in [x, L x] have successive ratios at most g, counting both ends.
SyndeticReport is_piecewise_syndetic_window(const GroundSet& A, std::int64_t gap,
                                            std::span<const std::size_t> span_probes);

/// Properties by name: "ap:L", "gap:k", "gap0:n", "contains:x", "thick:L".
SetProperty named_property(std::string_view name);

}  // namespace finembed
