#include "finembed/prsearch.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>

#include "finembed/error.hpp"

namespace finembed {

namespace {

using Instances = std::vector<std::vector<std::int64_t>>;

std::size_t parse_count(std::string_view text, std::string_view whole) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kMalformedInput, "bad number in pattern '" + std::string(whole) + "'");
  }
  return v;
}

std::vector<int> parse_exponents(std::string_view text, std::string_view whole) {
  std::vector<int> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    out.push_back(static_cast<int>(parse_count(text.substr(0, comma), whole)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (out.empty()) throw Error(ErrorCode::kEmptyD, "pattern '" + std::string(whole) + "' has an empty exponent set");
  return out;
}

void add_instance(Instances& out, std::vector<std::int64_t> cells) {
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  out.push_back(std::move(cells));
  if (out.size() > kMaxPatternInstances) {
    throw Error(ErrorCode::kPatternInstanceOverflow,
                "more than " + std::to_string(kMaxPatternInstances) + " pattern instances");
  }
}

void finish(Instances& out) {
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
}

// b q^n (a + n d) <= N, computed without overflow.
bool grid_fits(std::int64_t b, std::int64_t q, std::int64_t a, std::int64_t d, std::int64_t n, std::int64_t N) {
  __int128 v = static_cast<__int128>(b) * (a + static_cast<__int128>(n) * d);
  for (std::int64_t j = 0; j < n && v <= N; ++j) v *= q;
  return v <= N;
}

std::optional<std::int64_t> integer_root(__int128 value, int k) {
  if (value < 0) return std::nullopt;
  auto guess = static_cast<std::int64_t>(std::llround(std::pow(static_cast<long double>(value), 1.0L / k)));
  for (std::int64_t t = std::max<std::int64_t>(guess - 2, 0); t <= guess + 2; ++t) {
    __int128 p = 1;
    for (int e = 0; e < k && p <= value; ++e) p *= t;
    if (p == value) return t;
  }
  return std::nullopt;
}

}  // namespace

Pattern Pattern::ap(std::size_t length) {
  if (length < 1) throw Error(ErrorCode::kInvalidArgument, "ap length must be >= 1");
  Pattern p;
  p.kind_ = Kind::kAp;
  p.length_ = length;
  return p;
}

Pattern Pattern::schur() {
  Pattern p;
  p.kind_ = Kind::kSchur;
  p.length_ = 3;
  return p;
}

Pattern Pattern::gap_grid(std::size_t n, bool strict) {
  Pattern p;
  p.kind_ = Kind::kGapGrid;
  p.length_ = n;
  p.flag_ = strict;
  return p;
}

Pattern Pattern::poly_progression(std::size_t length, std::vector<int> exponents, Predicate coefficients) {
  if (length < 1) throw Error(ErrorCode::kInvalidArgument, "poly progression length must be >= 1");
  if (exponents.empty()) throw Error(ErrorCode::kEmptyD, "exponent set D must be non-empty");
  std::sort(exponents.begin(), exponents.end());
  exponents.erase(std::unique(exponents.begin(), exponents.end()), exponents.end());
  if (exponents.front() < 0) throw Error(ErrorCode::kInconsistentDegree, "exponents must be >= 0");
  Pattern p;
  p.kind_ = Kind::kPolyProgression;
  p.length_ = length;
  p.exponents_ = std::move(exponents);
  p.coefficients_ = std::move(coefficients);
  return p;
}

Pattern Pattern::equation(Polynomial polynomial, bool distinct) {
  if (polynomial.variable_count() == 0) throw Error(ErrorCode::kZeroVariables, "equation has no variables");
  Pattern p;
  p.kind_ = Kind::kEquation;
  p.length_ = polynomial.variable_count();
  p.flag_ = distinct;
  p.polynomial_ = std::move(polynomial);
  return p;
}

Pattern Pattern::parse(std::string_view text) {
  const auto colon = text.find(':');
  const auto head = text.substr(0, colon);
  const auto rest = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  if (head == "schur" && colon == std::string_view::npos) return schur();
  if (head == "ap") return ap(parse_count(rest, text));
  if (head == "gap-grid") {
    const auto c2 = rest.find(':');
    const bool strict = c2 != std::string_view::npos && rest.substr(c2 + 1) == "strict";
    if (c2 != std::string_view::npos && !strict) {
      throw Error(ErrorCode::kMalformedInput, "pattern '" + std::string(text) + "': expected ':strict'");
    }
    return gap_grid(parse_count(rest.substr(0, c2), text), strict);
  }
  if (head == "poly") {
    const auto c2 = rest.find(':');
    if (c2 == std::string_view::npos) {
      throw Error(ErrorCode::kMalformedInput, "pattern '" + std::string(text) + "': expected poly:L:D[:S]");
    }
    const auto length = parse_count(rest.substr(0, c2), text);
    const auto tail = rest.substr(c2 + 1);
    const auto c3 = tail.find(':');
    auto exponents = parse_exponents(tail.substr(0, c3), text);
    Predicate s = c3 == std::string_view::npos ? Predicate::all() : Predicate::parse(tail.substr(c3 + 1));
    return poly_progression(length, std::move(exponents), std::move(s));
  }
  if (head == "eq") {
    const auto c2 = rest.find(':');
    const bool distinct = c2 != std::string_view::npos && rest.substr(c2 + 1) == "distinct";
    if (c2 != std::string_view::npos && !distinct) {
      throw Error(ErrorCode::kMalformedInput, "pattern '" + std::string(text) + "': expected ':distinct'");
    }
    return equation(Polynomial::parse(rest.substr(0, c2)), distinct);
  }
  throw Error(ErrorCode::kMalformedInput, "unknown pattern '" + std::string(text) + "'");
}

std::string Pattern::to_string() const {
  switch (kind_) {
    case Kind::kAp: return "ap:" + std::to_string(length_);
    case Kind::kSchur: return "schur";
    case Kind::kGapGrid: return "gap-grid:" + std::to_string(length_) + (flag_ ? ":strict" : "");
    case Kind::kPolyProgression: {
      std::string out = "poly:" + std::to_string(length_) + ":";
      for (std::size_t i = 0; i < exponents_.size(); ++i) out += (i ? "," : "") + std::to_string(exponents_[i]);
      const auto s = coefficients_->to_string();
      if (s != Predicate::all().to_string()) out += ":" + s;
      return out;
    }
    case Kind::kEquation: return "eq:" + polynomial_->to_string() + (flag_ ? ":distinct" : "");
  }
  return "";
}

std::vector<std::vector<std::int64_t>> Pattern::instances(std::int64_t N) const {
  Instances out;
  switch (kind_) {
    case Kind::kAp: {
      const auto l = static_cast<std::int64_t>(length_);
      if (l == 1) {
        for (std::int64_t a = 1; a <= N; ++a) add_instance(out, {a});
        break;
      }
      for (std::int64_t d = 1; 1 + (l - 1) * d <= N; ++d) {
        for (std::int64_t a = 1; a + (l - 1) * d <= N; ++a) {
          std::vector<std::int64_t> cells(static_cast<std::size_t>(l));
          for (std::int64_t i = 0; i < l; ++i) cells[static_cast<std::size_t>(i)] = a + i * d;
          add_instance(out, std::move(cells));
        }
      }
      break;
    }
    case Kind::kSchur:
      for (std::int64_t x = 1; 2 * x <= N; ++x) {
        for (std::int64_t y = x; x + y <= N; ++y) add_instance(out, {x, y, x + y});
      }
      break;
    case Kind::kGapGrid: {
      const auto n = static_cast<std::int64_t>(length_);
      for (std::int64_t q = 2; grid_fits(1, q, 1, 1, n, N); ++q) {
        for (std::int64_t b = 1; grid_fits(b, q, 1, 1, n, N); ++b) {
          for (std::int64_t a = 1; grid_fits(b, q, a, 1, n, N); ++a) {
            for (std::int64_t d = 1; grid_fits(b, q, a, d, n, N); ++d) {
              if (flag_ && (q > N || d > N)) continue;
              std::vector<std::int64_t> cells;
              for (std::int64_t i = 0; i <= n; ++i) {
                std::int64_t v = b * (a + i * d);
                for (std::int64_t j = 0; j <= n; ++j) {
                  cells.push_back(v);
                  v *= q;
                }
              }
              if (flag_) {
                cells.push_back(q);
                cells.push_back(d);
              }
              add_instance(out, std::move(cells));
            }
          }
        }
      }
      break;
    }
    case Kind::kPolyProgression: {
      std::vector<std::int64_t> svals;
      for (std::int64_t v = 0; v <= N; ++v) {
        if (coefficients_->test(v)) svals.push_back(v);
      }
      const auto l = static_cast<std::int64_t>(length_);
      std::vector<std::int64_t> coeffs(exponents_.size(), 0);
      // Sum of a_i l^{e_i} so far; P(l) is the largest value.
      auto term_at_l = [&](std::size_t k, std::int64_t a) -> __int128 {
        __int128 t = a;
        for (int e = 0; e < exponents_[k] && t <= N; ++e) t *= l;
        return t;
      };
      auto recurse = [&](auto&& self, std::size_t k, __int128 partial) -> void {
        if (k == coeffs.size()) {
          bool nonconstant = false;
          for (std::size_t i = 0; i < coeffs.size(); ++i) nonconstant = nonconstant || (exponents_[i] > 0 && coeffs[i] > 0);
          if (!nonconstant) return;
          std::vector<std::int64_t> cells;
          for (std::int64_t x = 1; x <= l; ++x) {
            std::int64_t v = 0;
            for (std::size_t i = 0; i < coeffs.size(); ++i) {
              std::int64_t t = coeffs[i];
              for (int e = 0; e < exponents_[i]; ++e) t *= x;
              v += t;
            }
            cells.push_back(v);
          }
          add_instance(out, std::move(cells));
          return;
        }
        for (const auto a : svals) {
          const auto next = partial + term_at_l(k, a);
          if (next > N) break;
          coeffs[k] = a;
          self(self, k + 1, next);
        }
        coeffs[k] = 0;
      };
      recurse(recurse, 0, 0);
      break;
    }
    case Kind::kEquation:
      for (auto& s : equation_solutions(*polynomial_, N, flag_)) add_instance(out, std::move(s));
      break;
  }
  finish(out);
  return out;
}

std::vector<std::vector<std::int64_t>> equation_solutions(const Polynomial& p, std::int64_t N, bool distinct,
                                                          const GroundSet* allowed) {
  const std::size_t v = p.variable_count();
  if (v == 0) throw Error(ErrorCode::kZeroVariables, "polynomial has no variables");
  std::vector<char> ok(static_cast<std::size_t>(std::max<std::int64_t>(N, 0)) + 1, 0);
  std::vector<std::int64_t> vals;
  for (std::int64_t x = 1; x <= N; ++x) {
    bool in = true;
    if (allowed) {
      const auto& w = allowed->window();
      in = x >= w.min_value() && x <= w.max_value() && allowed->contains_value(x);
    }
    if (in) {
      ok[static_cast<std::size_t>(x)] = 1;
      vals.push_back(x);
    }
  }
  std::vector<std::vector<std::int64_t>> out;
  if (vals.empty()) return out;

  // Solve for the variable of least degree (the last one on ties).
  std::size_t solve = v - 1;
  for (std::size_t i = v; i-- > 0;) {
    if (p.degree_in(i) < p.degree_in(solve)) solve = i;
  }
  const std::size_t letter = p.variables()[solve];
  const int k = p.degree_in(solve);

  std::vector<std::int64_t> tuple(v, 0);
  std::vector<std::size_t> idx(v, 0);
  auto accept = [&](std::int64_t t) {
    if (t < 1 || t > N || !ok[static_cast<std::size_t>(t)]) return;
    tuple[solve] = t;
    if (distinct) {
      for (std::size_t i = 0; i < v; ++i) {
        for (std::size_t j = i + 1; j < v; ++j) {
          if (tuple[i] == tuple[j]) return;
        }
      }
    }
    out.push_back(tuple);
  };

  for (;;) {
    for (std::size_t i = 0, j = 0; i < v; ++i) {
      if (i != solve) tuple[i] = vals[idx[j++]];
    }
    // Univariate coefficients in the solved variable.
    std::vector<__int128> c(static_cast<std::size_t>(k) + 1, 0);
    bool overflow = false;
    for (const auto& m : p.monomials()) {
      __int128 t = m.coefficient;
      for (std::size_t i = 0; i < v && !overflow; ++i) {
        if (i == solve) continue;
        for (int e = 0; e < m.exponents[p.variables()[i]]; ++e) {
          t *= tuple[i];
          if (t > INT64_MAX || t < INT64_MIN) overflow = true;
        }
      }
      c[static_cast<std::size_t>(m.exponents[letter])] += t;
    }
    int top = k;
    while (top > 0 && c[static_cast<std::size_t>(top)] == 0) --top;
    bool pure = true;
    for (int e = 1; e < top; ++e) pure = pure && c[static_cast<std::size_t>(e)] == 0;
    if (overflow || !pure) {
      for (const auto t : vals) {
        tuple[solve] = t;
        const auto value = p.evaluate(tuple);
        if (value && *value == 0) accept(t);
      }
    } else if (top == 0) {
      if (c[0] == 0) {
        for (const auto t : vals) accept(t);
      }
    } else {
      // c_top t^top + c_0 = 0.
      const __int128 num = -c[0];
      const __int128 den = c[static_cast<std::size_t>(top)];
      if (num % den == 0) {
        if (const auto t = integer_root(num / den, top)) accept(*t);
      }
    }

    std::size_t j = v - 1;  // odometer over the free variables
    bool done = true;
    while (j-- > 0) {
      if (++idx[j] < vals.size()) {
        done = false;
        break;
      }
      idx[j] = 0;
    }
    if (done) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string_view coloring_outcome_name(ColoringOutcome outcome) {
  return outcome == ColoringOutcome::kAvoiding ? "avoiding" : "forced";
}

namespace {

constexpr std::size_t kMaxColors = 32;

class Searcher {
 public:
  Searcher(const std::vector<std::int64_t>& universe, const Instances& instances, std::size_t colors,
           const SearchOptions& options)
      : m_(universe.size()), r_(colors), limit_(options.node_limit), color_(universe.size(), -1) {
    for (const auto& inst : instances) {
      std::vector<std::uint32_t> members;
      for (const auto x : inst) {
        const auto it = std::lower_bound(universe.begin(), universe.end(), x);
        if (it == universe.end() || *it != x) {
          throw Error(ErrorCode::kInvalidArgument, "instance element " + std::to_string(x) + " is not coloured");
        }
        members.push_back(static_cast<std::uint32_t>(it - universe.begin()));
      }
      if (members.empty()) continue;
      if (members.size() == 1) singleton_ = true;
      members_.push_back(std::move(members));
    }
    of_.resize(m_);
    for (std::uint32_t i = 0; i < members_.size(); ++i) {
      for (const auto e : members_[i]) of_[e].push_back(i);
    }
    assigned_.assign(members_.size(), 0);
    distinct_.assign(members_.size(), 0);
    colour_sum_.assign(members_.size(), 0);
    per_colour_.assign(members_.size() * r_, 0);
    for (std::uint32_t e = 0; e < m_; ++e) order_.push_back(e);
    if (options.order == VariableOrder::kDescending) std::reverse(order_.begin(), order_.end());
  }

  std::optional<std::vector<int>> run() {
    if (singleton_) return std::nullopt;
    if (!dfs(0, 0)) return std::nullopt;
    return color_;
  }

  std::uint64_t nodes() const { return nodes_; }
  std::size_t instance_count() const { return members_.size(); }

 private:
  std::uint64_t full_mask() const { return r_ == 64 ? ~0ULL : (1ULL << r_) - 1; }

  // Colours that do not complete a monochromatic instance at e.
  std::uint64_t allowed(std::uint32_t e) const {
    std::uint64_t mask = full_mask();
    for (const auto i : of_[e]) {
      if (assigned_[i] + 1 == members_[i].size() && distinct_[i] == 1) {
        mask &= ~(1ULL << (colour_sum_[i] / assigned_[i]));
      }
    }
    return mask;
  }

  bool assign(std::uint32_t e, int c) {
    color_[e] = c;
    bool ok = true;
    for (const auto i : of_[e]) {
      if (per_colour_[i * r_ + static_cast<std::size_t>(c)]++ == 0) ++distinct_[i];
      ++assigned_[i];
      colour_sum_[i] += static_cast<std::uint64_t>(c);
    }
    // Forward check: an instance one short of monochromatic must leave its
    // last element some colour.
    for (const auto i : of_[e]) {
      if (!ok) break;
      if (assigned_[i] + 1 != members_[i].size() || distinct_[i] != 1) continue;
      for (const auto f : members_[i]) {
        if (color_[f] < 0) {
          ok = allowed(f) != 0;
          break;
        }
      }
    }
    return ok;
  }

  void unassign(std::uint32_t e, int c) {
    for (const auto i : of_[e]) {
      if (--per_colour_[i * r_ + static_cast<std::size_t>(c)] == 0) --distinct_[i];
      --assigned_[i];
      colour_sum_[i] -= static_cast<std::uint64_t>(c);
    }
    color_[e] = -1;
  }

  bool dfs(std::size_t pos, std::size_t used) {
    if (pos == m_) return true;
    ++nodes_;
    if (limit_ != 0 && nodes_ > limit_) {
      throw Error(ErrorCode::kBudgetExceeded, "search exceeded " + std::to_string(limit_) + " nodes");
    }
    const auto e = order_[pos];
    const auto mask = allowed(e);
    // New colours are introduced in order of first use.
    const std::size_t top = std::min(used + 1, r_);
    for (std::size_t c = 0; c < top; ++c) {
      if (!((mask >> c) & 1)) continue;
      const bool ok = assign(e, static_cast<int>(c));
      if (ok && dfs(pos + 1, std::max(used, c + 1))) return true;
      unassign(e, static_cast<int>(c));
    }
    return false;
  }

  std::size_t m_;
  std::size_t r_;
  std::uint64_t limit_;
  std::uint64_t nodes_ = 0;
  bool singleton_ = false;
  std::vector<int> color_;
  std::vector<std::vector<std::uint32_t>> members_;
  std::vector<std::vector<std::uint32_t>> of_;
  std::vector<std::uint32_t> assigned_;
  std::vector<std::uint32_t> distinct_;
  std::vector<std::uint64_t> colour_sum_;
  std::vector<std::uint32_t> per_colour_;
  std::vector<std::uint32_t> order_;
};

void check_colors(std::size_t colors) {
  if (colors < 1 || colors > kMaxColors) {
    throw Error(ErrorCode::kInvalidArgument, "colour count must lie in 1.." + std::to_string(kMaxColors));
  }
}

std::vector<int> canonical(std::vector<int> coloring) {
  std::vector<int> relabel;
  for (auto& c : coloring) {
    auto it = std::find(relabel.begin(), relabel.end(), c);
    if (it == relabel.end()) {
      relabel.push_back(c);
      it = relabel.end() - 1;
    }
    c = static_cast<int>(it - relabel.begin());
  }
  return coloring;
}

}  // namespace

ColoringCertificate search_coloring(std::vector<std::int64_t> universe, const Instances& instances,
                                    std::size_t colors, const SearchOptions& options) {
  check_colors(colors);
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
  Searcher searcher(universe, instances, colors, options);
  const auto found = searcher.run();
  ColoringCertificate cert;
  cert.universe = std::move(universe);
  cert.colors = colors;
  cert.nodes = searcher.nodes();
  cert.instance_count = searcher.instance_count();
  if (found) {
    cert.outcome = ColoringOutcome::kAvoiding;
    cert.coloring = canonical(*found);
  } else {
    cert.outcome = ColoringOutcome::kForced;
    cert.exhaustive = true;
  }
  return cert;
}

ColoringCertificate find_avoiding_coloring(std::int64_t N, std::size_t colors, const Pattern& pattern,
                                           const SearchOptions& options) {
  if (N < 1) throw Error(ErrorCode::kInvalidArgument, "N must be >= 1");
  std::vector<std::int64_t> universe(static_cast<std::size_t>(N));
  for (std::int64_t i = 0; i < N; ++i) universe[static_cast<std::size_t>(i)] = i + 1;
  auto cert = search_coloring(std::move(universe), pattern.instances(N), colors, options);
  cert.pattern = pattern.to_string();
  return cert;
}

std::optional<std::size_t> find_monochromatic(const std::vector<std::int64_t>& universe,
                                              const std::vector<int>& coloring, const Instances& instances) {
  for (std::size_t i = 0; i < instances.size(); ++i) {
    std::optional<int> colour;
    bool mono = !instances[i].empty();
    for (const auto x : instances[i]) {
      const auto it = std::lower_bound(universe.begin(), universe.end(), x);
      if (it == universe.end() || *it != x) {
        mono = false;
        break;
      }
      const int c = coloring[static_cast<std::size_t>(it - universe.begin())];
      if (colour && *colour != c) {
        mono = false;
        break;
      }
      colour = c;
    }
    if (mono) return i;
  }
  return std::nullopt;
}

ThresholdResult ramsey_threshold(const Pattern& pattern, std::size_t colors, std::int64_t n_max,
                                 const SearchOptions& options) {
  if (n_max < 1) throw Error(ErrorCode::kInvalidArgument, "Nmax must be >= 1");
  ThresholdResult result;
  result.n_max = n_max;
  for (std::int64_t N = 1; N <= n_max; ++N) {
    auto cert = find_avoiding_coloring(N, colors, pattern, options);
    if (cert.outcome == ColoringOutcome::kForced) {
      result.threshold = N;
      break;
    }
    result.last_avoiding = std::move(cert);
  }
  return result;
}

ColoringCertificate strong_pr_probe(const GroundSet& A, const Pattern& pattern, std::size_t colors, StrongMode mode) {
  check_colors(colors);
  if (!A.is_explicit()) throw Error(ErrorCode::kANotExplicit, "strong PR probe needs an explicit set");
  const auto universe = A.values();
  const std::int64_t top = universe.empty() ? 0 : universe.back();
  Instances inside;
  if (top >= 1) {
    for (auto& inst : pattern.instances(top)) {
      const bool sub = std::all_of(inst.begin(), inst.end(),
                                   [&](std::int64_t x) { return std::binary_search(universe.begin(), universe.end(), x); });
      if (sub) inside.push_back(std::move(inst));
    }
  }

  if (mode == StrongMode::kBacktracking) {
    auto cert = search_coloring(universe, inside, colors);
    cert.pattern = pattern.to_string();
    return cert;
  }

  const std::size_t m = universe.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (total > kStrongExhaustionBudget / colors) {
      throw Error(ErrorCode::kBudgetExceeded, std::to_string(colors) + "^" + std::to_string(m) +
                                                  " colourings exceed the exhaustion budget");
    }
    total *= colors;
  }
  ColoringCertificate cert;
  cert.pattern = pattern.to_string();
  cert.universe = universe;
  cert.colors = colors;
  cert.instance_count = inside.size();
  std::vector<int> coloring(m, 0);
  for (std::uint64_t n = 0; n < total; ++n) {
    ++cert.nodes;
    if (!find_monochromatic(universe, coloring, inside)) {
      cert.outcome = ColoringOutcome::kAvoiding;
      cert.coloring = coloring;
      return cert;
    }
    for (std::size_t j = m; j-- > 0;) {
      if (++coloring[j] < static_cast<int>(colors)) break;
      coloring[j] = 0;
    }
  }
  cert.outcome = ColoringOutcome::kForced;
  cert.exhaustive = true;
  return cert;
}

HomogeneousReport homogeneous_pr_check(const Polynomial& p, std::size_t colors, std::int64_t N, bool distinct,
                                       bool strict, const SearchOptions& options) {
  if (p.variable_count() == 0) throw Error(ErrorCode::kZeroVariables, "polynomial has no variables");
  HomogeneousReport report;
  report.polynomial = p.to_string();
  report.homogeneous = p.is_homogeneous();
  report.monomial_degrees = p.monomial_degrees();
  if (strict && !report.homogeneous) {
    throw Error(ErrorCode::kNonHomogeneousRejected, "'" + report.polynomial + "' is not homogeneous");
  }
  report.solutions = equation_solutions(p, N, distinct).size();
  report.certificate = find_avoiding_coloring(N, colors, Pattern::equation(p, distinct), options);
  return report;
}

std::vector<std::vector<std::int64_t>> ps_solutions_experiment(const Polynomial& p, const GroundSet& A,
                                                               std::int64_t N, bool distinct) {
  return equation_solutions(p, N, distinct, &A);
}

}  // namespace finembed
