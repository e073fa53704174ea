#include "finembed/rich.hpp"

#include <algorithm>
#include <array>
#include <charconv>

#include "finembed/error.hpp"

namespace finembed {

std::string_view progression_kind_name(ProgressionKind kind) {
  switch (kind) {
    case ProgressionKind::kAp: return "ap";
    case ProgressionKind::kGapGrid: return "gap-grid";
    case ProgressionKind::kGapGridZeroBased: return "gap-grid-zero-based";
    case ProgressionKind::kPolynomial: return "polynomial";
  }
  return "";
}

bool ThickReport::all_found() const {
  return std::all_of(probes.begin(), probes.end(), [](const ThickProbe& p) { return p.shift.has_value(); });
}

bool SyndeticReport::all_found() const {
  return std::all_of(probes.begin(), probes.end(), [](const SyndeticProbe& p) { return p.start.has_value(); });
}

namespace {

// Dense membership over the window's value range.
struct ValueIndex {
  std::int64_t lo = 0;
  std::int64_t hi = -1;
  std::vector<char> member;
  std::vector<std::int64_t> values;

  explicit ValueIndex(const GroundSet& A) {
    if (!A.window().is_numeric()) throw Error(ErrorCode::kWrongCarrier, "detector needs a numeric window");
    lo = A.window().min_value();
    hi = A.window().max_value();
    member.assign(static_cast<std::size_t>(hi - lo + 1), 0);
    values = A.values();
    for (const auto v : values) member[static_cast<std::size_t>(v - lo)] = 1;
  }

  bool has(std::int64_t v) const { return v >= lo && v <= hi && member[static_cast<std::size_t>(v - lo)]; }
};

// r^e * m, or nullopt once it exceeds cap.
std::optional<std::int64_t> scaled_power(std::int64_t r, std::int64_t e, std::int64_t m, std::int64_t cap) {
  std::int64_t v = m;
  if (v > cap) return std::nullopt;
  for (std::int64_t i = 0; i < e; ++i) {
    if (v > cap / r) return std::nullopt;
    v *= r;
  }
  return v;
}

std::optional<std::int64_t> poly_value(std::span<const std::int64_t> coeffs, std::span<const int> exponents,
                                       std::int64_t x, std::int64_t cap) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    const auto term = scaled_power(x, exponents[i], coeffs[i], cap);
    if (!term || total > cap - *term) return std::nullopt;
    total += *term;
  }
  return total;
}

std::vector<std::int64_t> one_based_grid(std::int64_t r, std::int64_t a, std::int64_t b, std::size_t k) {
  std::vector<std::int64_t> cells;
  for (std::size_t i = 1; i <= k; ++i) {
    for (std::size_t j = 1; j <= k; ++j) {
      std::int64_t v = a + static_cast<std::int64_t>(j) * b;
      for (std::size_t e = 0; e < i; ++e) v *= r;
      cells.push_back(v);
    }
  }
  return cells;
}

std::vector<std::int64_t> zero_based_grid(std::int64_t b, std::int64_t q, std::int64_t a, std::int64_t d,
                                          std::int64_t n) {
  std::vector<std::int64_t> cells;
  for (std::int64_t i = 0; i <= n; ++i) {
    for (std::int64_t j = 0; j <= n; ++j) {
      std::int64_t v = b * (a + i * d);
      for (std::int64_t e = 0; e < j; ++e) v *= q;
      cells.push_back(v);
    }
  }
  return cells;
}

std::size_t parse_size(std::string_view text, std::string_view whole) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kMalformedInput, "bad property argument in '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

bool verify_certificate(const ProgressionCertificate& c, const GroundSet& A) {
  std::vector<std::int64_t> expected;
  const auto& p = c.params;
  switch (c.kind) {
    case ProgressionKind::kAp:
      if (c.length == 0) return c.realized.empty();
      if (p.size() != 2 || p[1] < 1) return false;
      for (std::size_t i = 0; i < c.length; ++i) expected.push_back(p[0] + static_cast<std::int64_t>(i) * p[1]);
      break;
    case ProgressionKind::kGapGrid:
      if (c.length == 0) return c.realized.empty();
      if (p.size() != 3 || p[0] < 2 || p[1] < 0 || p[2] < 1) return false;
      expected = one_based_grid(p[0], p[1], p[2], c.length);
      break;
    case ProgressionKind::kGapGridZeroBased:
      if (c.length == 0) return c.realized.empty();
      if (p.size() != 5 || p[0] < 1 || p[1] < 2 || p[2] < 1 || p[3] < 1) return false;
      if (static_cast<std::size_t>(p[4]) + 1 != c.length) return false;
      expected = zero_based_grid(p[0], p[1], p[2], p[3], p[4]);
      break;
    case ProgressionKind::kPolynomial:
      if (c.length == 0) return c.realized.empty();
      if (p.size() != c.exponents.size()) return false;
      for (std::size_t x = 1; x <= c.length; ++x) {
        std::int64_t v = 0;
        for (std::size_t i = 0; i < p.size(); ++i) {
          std::int64_t term = p[i];
          for (int e = 0; e < c.exponents[i]; ++e) term *= static_cast<std::int64_t>(x);
          v += term;
        }
        expected.push_back(v);
      }
      break;
  }
  if (expected != c.realized) return false;
  const auto& w = A.window();
  return std::all_of(expected.begin(), expected.end(), [&](std::int64_t v) {
    return v >= w.min_value() && v <= w.max_value() && A.contains_value(v);
  });
}

ThickReport is_thick_window(const GroundSet& A, std::span<const std::size_t> probe_lengths) {
  const Window& w = A.window();
  ThickReport report;
  for (const auto L : probe_lengths) {
    if (L > w.bound()) throw Error(ErrorCode::kInvalidArgument, "probe length exceeds the window bound");
    ThickProbe probe;
    probe.length = L;
    if (w.kind() == WindowKind::kAdditiveNaturals) {
      // Least s starting a run of L + 1 consecutive members.
      std::uint64_t run = 0;
      for (std::uint64_t code = 0; code < w.size(); ++code) {
        run = A.contains(Element{code}) ? run + 1 : 0;
        if (run == L + 1) {
          probe.shift = Element{code - L};
          break;
        }
      }
    } else {
      const std::size_t count = std::min<std::size_t>(L + 1, w.size());
      for (std::uint64_t s = 0; s < w.size() && !probe.shift; ++s) {
        bool inside = true;
        for (std::uint64_t f = 0; f < count && inside; ++f) {
          const auto y = w.op(Element{f}, Element{s});
          inside = y && A.contains(*y);
        }
        if (inside) probe.shift = Element{s};
      }
    }
    report.probes.push_back(probe);
  }
  return report;
}

ProgressionCertificate longest_ap(const GroundSet& A) {
  const ValueIndex index(A);
  ProgressionCertificate best;
  best.kind = ProgressionKind::kAp;
  if (index.values.empty()) return best;
  const auto& vals = index.values;
  best.length = 1;
  best.params = {vals.front(), 1};
  const std::int64_t spread = vals.back() - vals.front();
  std::vector<std::uint32_t> run(index.member.size(), 0);
  for (std::int64_t d = 1; d <= spread; ++d) {
    // No AP of stride d can beat the incumbent.
    if (spread / d + 1 <= static_cast<std::int64_t>(best.length)) break;
    for (const auto v : vals) {
      const auto at = static_cast<std::size_t>(v - index.lo);
      run[at] = index.has(v - d) ? run[static_cast<std::size_t>(v - d - index.lo)] + 1 : 1;
      if (run[at] > best.length) {
        best.length = run[at];
        best.params = {v - static_cast<std::int64_t>(run[at] - 1) * d, d};
      }
    }
  }
  for (std::size_t i = 0; i < best.length; ++i) {
    best.realized.push_back(best.params[0] + static_cast<std::int64_t>(i) * best.params[1]);
  }
  return best;
}

ProgressionCertificate longest_gap_grid(const GroundSet& A, GridIndexing indexing) {
  const ValueIndex index(A);
  const std::int64_t top = index.values.empty() ? 0 : index.values.back();
  ProgressionCertificate best;

  if (indexing == GridIndexing::kOneBased) {
    best.kind = ProgressionKind::kGapGrid;
    std::size_t best_k = 0;
    std::int64_t br = 0, ba = 0, bb = 0;
    // Largest cell of a k-grid: r^k (a + k b). Monotone in r, a and b.
    auto corner_fits = [&](std::int64_t r, std::int64_t a, std::int64_t b, std::size_t k) {
      return scaled_power(r, static_cast<std::int64_t>(k), a + static_cast<std::int64_t>(k) * b, top).has_value();
    };
    for (std::int64_t r = 2; corner_fits(r, 0, 1, best_k + 1); ++r) {
      for (std::int64_t a = 0; corner_fits(r, a, 1, best_k + 1); ++a) {
        for (std::int64_t b = 1; corner_fits(r, a, b, best_k + 1); ++b) {
          std::size_t k = 0;
          for (;;) {
            const std::size_t next = k + 1;
            bool ok = true;
            // New row i = next (j <= next) and new column j = next (i < next).
            for (std::size_t j = 1; j <= next && ok; ++j) {
              const auto v = scaled_power(r, static_cast<std::int64_t>(next), a + static_cast<std::int64_t>(j) * b, top);
              ok = v && index.has(*v);
            }
            for (std::size_t i = 1; i < next && ok; ++i) {
              const auto v =
                  scaled_power(r, static_cast<std::int64_t>(i), a + static_cast<std::int64_t>(next) * b, top);
              ok = v && index.has(*v);
            }
            if (!ok) break;
            k = next;
          }
          if (k > best_k) {
            best_k = k;
            br = r;
            ba = a;
            bb = b;
          }
        }
      }
    }
    best.length = best_k;
    if (best_k > 0) {
      best.params = {br, ba, bb};
      best.realized = one_based_grid(br, ba, bb, best_k);
    }
    return best;
  }

  best.kind = ProgressionKind::kGapGridZeroBased;
  std::int64_t best_n = -1;
  std::int64_t bb = 0, bq = 0, ba = 0, bd = 0;
  const auto first_positive = std::find_if(index.values.begin(), index.values.end(), [](auto v) { return v >= 1; });
  if (first_positive == index.values.end()) return best;
  best_n = 0;
  bb = 1;
  bq = 2;
  ba = *first_positive;
  bd = 1;
  // Largest cell of an n-grid: b q^n (a + n d).
  auto corner_fits = [&](std::int64_t b, std::int64_t q, std::int64_t a, std::int64_t d, std::int64_t n) {
    const auto inner = scaled_power(1, 0, a + n * d, top);
    if (!inner || *inner > top / b) return false;
    return scaled_power(q, n, b * *inner, top).has_value();
  };
  for (std::int64_t q = 2; corner_fits(1, q, 1, 1, best_n + 1); ++q) {
    for (std::int64_t b = 1; corner_fits(b, q, 1, 1, best_n + 1); ++b) {
      for (std::int64_t a = 1; corner_fits(b, q, a, 1, best_n + 1); ++a) {
        for (std::int64_t d = 1; corner_fits(b, q, a, d, best_n + 1); ++d) {
          std::int64_t n = -1;
          for (;;) {
            const std::int64_t next = n + 1;
            bool ok = true;
            for (std::int64_t j = 0; j <= next && ok; ++j) {
              const auto v = scaled_power(q, j, b * (a + next * d), top);
              ok = v && index.has(*v);
            }
            for (std::int64_t i = 0; i < next && ok; ++i) {
              const auto v = scaled_power(q, next, b * (a + i * d), top);
              ok = v && index.has(*v);
            }
            if (!ok) break;
            n = next;
          }
          if (n > best_n) {
            best_n = n;
            bb = b;
            bq = q;
            ba = a;
            bd = d;
          }
        }
      }
    }
  }
  best.length = static_cast<std::size_t>(best_n + 1);
  best.params = {bb, bq, ba, bd, best_n};
  best.realized = zero_based_grid(bb, bq, ba, bd, best_n);
  return best;
}

ProgressionCertificate longest_poly_progression(const GroundSet& A, int degree, const GroundSet& coefficients,
                                                std::vector<int> exponents) {
  if (exponents.empty()) throw Error(ErrorCode::kEmptyD, "exponent set D must be non-empty");
  std::sort(exponents.begin(), exponents.end());
  exponents.erase(std::unique(exponents.begin(), exponents.end()), exponents.end());
  if (degree < 0 || exponents.front() < 0 || exponents.back() > degree) {
    throw Error(ErrorCode::kInconsistentDegree, "D must be a subset of {0..d}");
  }
  const ValueIndex index(A);
  const std::int64_t top = index.values.empty() ? 0 : index.values.back();
  const std::int64_t length_cap = A.window().max_value();
  std::vector<std::int64_t> svals;
  for (const auto v : coefficients.values()) {
    if (v >= 0 && v <= top) svals.push_back(v);
  }

  ProgressionCertificate best;
  best.kind = ProgressionKind::kPolynomial;
  best.exponents = exponents;
  if (index.values.empty() || svals.empty()) return best;

  const std::size_t k = exponents.size();
  const bool constant_only = exponents.back() == 0;
  // Lexicographic order from the highest exponent down, so ties prefer the
  // smaller leading coefficient.
  std::vector<std::int64_t> coeffs(k, 0);
  std::size_t best_len = 0;
  std::vector<std::int64_t> best_coeffs;

  auto length_of = [&]() -> std::size_t {
    std::size_t l = 0;
    for (std::int64_t x = 1; static_cast<std::int64_t>(l) < length_cap; ++x) {
      const auto v = poly_value(coeffs, exponents, x, top);
      if (!v || !index.has(*v)) break;
      ++l;
      if (constant_only) {
        // P is constant: every later value repeats P(1).
        l = static_cast<std::size_t>(length_cap);
        break;
      }
    }
    return l;
  };

  // Returns false when the loop at `level` should stop because even its
  // first value cannot fit.
  auto recurse = [&](auto&& self, std::size_t level, std::int64_t partial_sum) -> bool {
    const std::size_t slot = k - 1 - level;
    bool any = false;
    for (const auto v : svals) {
      if (partial_sum + v > top) break;  // P(1) already too large
      coeffs[slot] = v;
      if (level + 1 == k) {
        bool nonconstant = constant_only;
        for (std::size_t i = 0; i < k && !nonconstant; ++i) nonconstant = exponents[i] >= 1 && coeffs[i] != 0;
        any = true;
        if (!nonconstant) continue;
        // P(best_len + 1) must fit to improve; monotone in this coefficient.
        if (!poly_value(coeffs, exponents, static_cast<std::int64_t>(best_len) + 1, top)) break;
        const std::size_t l = length_of();
        if (l > best_len) {
          best_len = l;
          best_coeffs = coeffs;
        }
      } else {
        any = true;
        self(self, level + 1, partial_sum + v);
      }
    }
    coeffs[slot] = 0;
    return any;
  };
  recurse(recurse, 0, 0);

  best.length = best_len;
  if (best_len > 0) {
    best.params = best_coeffs;
    const std::size_t shown = constant_only ? 1 : best_len;
    for (std::size_t x = 1; x <= shown; ++x) {
      best.realized.push_back(*poly_value(best_coeffs, exponents, static_cast<std::int64_t>(x), top));
    }
    if (constant_only) best.realized.assign(best_len, best.realized.front());
  }
  return best;
}

std::vector<ProbeResult> maximality_probe(const GroundSet& A, const FamilySpec& family,
                                          std::span<const std::size_t> probe_sizes, const EmbedOptions& options) {
  std::vector<ProbeResult> out;
  for (const auto p : probe_sizes) {
    if (p == 0 || p > A.window().size()) throw Error(ErrorCode::kInvalidArgument, "probe size outside 1..window size");
    std::vector<Element> F;
    for (std::uint64_t code = 0; code < p; ++code) F.push_back(Element{code});
    ProbeResult r;
    r.requested_size = p;
    r.verdict = embed_finite(F, A, family, options);
    out.push_back(std::move(r));
  }
  return out;
}

SyndeticReport is_piecewise_syndetic_window(const GroundSet& A, std::int64_t gap,
                                            std::span<const std::size_t> span_probes) {
  if (gap < 1) throw Error(ErrorCode::kInvalidArgument, "gap bound must be >= 1");
  const ValueIndex index(A);
  SyndeticReport report;
  report.gap = gap;
  const auto n = static_cast<std::int64_t>(index.member.size());

  if (A.window().kind() == WindowKind::kMultiplicativeNaturals) {
    for (const auto L : span_probes) {
      SyndeticProbe probe;
      probe.span = L;
      const auto factor = static_cast<std::int64_t>(L);
      for (std::int64_t x = 1; factor >= 1 && x <= index.hi / std::max<std::int64_t>(factor, 1); ++x) {
        const std::int64_t end = factor * x;
        auto it = std::lower_bound(index.values.begin(), index.values.end(), x);
        if (it == index.values.end() || *it > end) continue;
        bool ok = *it <= gap * x;
        std::int64_t previous = *it;
        for (++it; ok && it != index.values.end() && *it <= end; ++it) {
          ok = *it <= gap * previous;
          previous = *it;
        }
        ok = ok && end <= gap * previous;
        if (ok) {
          probe.start = x;
          break;
        }
      }
      report.probes.push_back(probe);
    }
    return report;
  }

  // bad[y]: the g integers starting at y are all non-members.
  std::vector<std::int64_t> bad_prefix(static_cast<std::size_t>(n) + 1, 0);
  std::vector<std::int64_t> member_prefix(static_cast<std::size_t>(n) + 1, 0);
  std::int64_t run = 0;
  std::vector<char> bad(static_cast<std::size_t>(n), 0);
  for (std::int64_t y = n - 1; y >= 0; --y) {
    run = index.member[static_cast<std::size_t>(y)] ? 0 : run + 1;
    bad[static_cast<std::size_t>(y)] = run >= gap;
  }
  for (std::int64_t y = 0; y < n; ++y) {
    bad_prefix[static_cast<std::size_t>(y) + 1] = bad_prefix[static_cast<std::size_t>(y)] + bad[static_cast<std::size_t>(y)];
    member_prefix[static_cast<std::size_t>(y) + 1] =
        member_prefix[static_cast<std::size_t>(y)] + index.member[static_cast<std::size_t>(y)];
  }
  for (const auto L_raw : span_probes) {
    SyndeticProbe probe;
    probe.span = L_raw;
    const auto L = static_cast<std::int64_t>(L_raw);
    for (std::int64_t x = 0; L >= 1 && x + L <= n; ++x) {
      const bool has_member = member_prefix[static_cast<std::size_t>(x + L)] > member_prefix[static_cast<std::size_t>(x)];
      // A bad run starting at y lies inside [x, x + L) iff x <= y <= x + L - g.
      const bool clean = L < gap || bad_prefix[static_cast<std::size_t>(x + L - gap + 1)] ==
                                        bad_prefix[static_cast<std::size_t>(x)];
      if (has_member && clean) {
        probe.start = index.lo + x;
        break;
      }
    }
    report.probes.push_back(probe);
  }
  return report;
}

SetProperty named_property(std::string_view name) {
  const auto colon = name.find(':');
  const std::string_view head = name.substr(0, colon);
  const std::string_view arg = colon == std::string_view::npos ? std::string_view{} : name.substr(colon + 1);
  const std::string label(name);
  if (head == "ap") {
    const auto L = parse_size(arg, name);
    return {label, [L](const GroundSet& A) { return longest_ap(A).length >= L; }};
  }
  if (head == "gap") {
    const auto k = parse_size(arg, name);
    return {label, [k](const GroundSet& A) { return longest_gap_grid(A).length >= k; }};
  }
  if (head == "gap0") {
    const auto n = parse_size(arg, name);
    return {label,
            [n](const GroundSet& A) { return longest_gap_grid(A, GridIndexing::kZeroBased).length >= n + 1; }};
  }
  if (head == "contains") {
    const auto x = static_cast<std::int64_t>(parse_size(arg, name));
    return {label, [x](const GroundSet& A) {
              const auto& w = A.window();
              return x >= w.min_value() && x <= w.max_value() && A.contains_value(x);
            }};
  }
  if (head == "thick") {
    const auto L = parse_size(arg, name);
    return {label, [L](const GroundSet& A) {
              const std::array<std::size_t, 1> probes{L};
              return is_thick_window(A, probes).all_found();
            }};
  }
  throw Error(ErrorCode::kMalformedInput, "unknown property '" + label + "'");
}

}  // namespace finembed
