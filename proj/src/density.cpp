#include "finembed/density.hpp"

#include <algorithm>
#include <charconv>

#include "finembed/error.hpp"

namespace finembed {

Net Net::make(std::vector<std::vector<std::int64_t>> levels, std::string label) {
  if (levels.empty()) throw Error(ErrorCode::kInvalidArgument, "net needs at least one level");
  for (auto& level : levels) {
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
    if (level.empty()) throw Error(ErrorCode::kInvalidArgument, "net levels must be non-empty");
  }
  for (std::size_t i = 1; i < levels.size(); ++i) {
    if (!std::includes(levels[i].begin(), levels[i].end(), levels[i - 1].begin(), levels[i - 1].end())) {
      throw Error(ErrorCode::kInvalidArgument, "net level " + std::to_string(i) + " is not contained in level " +
                                                   std::to_string(i + 1));
    }
  }
  Net net;
  net.levels_ = std::move(levels);
  net.label_ = std::move(label);
  return net;
}

Net interval_net(std::size_t maxN) {
  if (maxN < 1) throw Error(ErrorCode::kInvalidArgument, "net maxN must be >= 1");
  std::vector<std::vector<std::int64_t>> levels(maxN);
  for (std::size_t n = 1; n <= maxN; ++n) {
    levels[n - 1].resize(n);
    for (std::size_t i = 0; i < n; ++i) levels[n - 1][i] = static_cast<std::int64_t>(i + 1);
  }
  return Net::make(std::move(levels), "interval:" + std::to_string(maxN));
}

Net parse_net(std::string_view text) {
  constexpr std::string_view prefix = "interval:";
  if (text.substr(0, prefix.size()) == prefix) {
    const auto arg = text.substr(prefix.size());
    std::size_t n = 0;
    auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), n);
    if (!arg.empty() && ec == std::errc() && ptr == arg.data() + arg.size()) return interval_net(n);
  }
  throw Error(ErrorCode::kMalformedInput, "unknown net '" + std::string(text) + "', expected interval:N");
}

namespace {

std::vector<Element> level_elements(const Window& w, const Net& net, std::size_t n) {
  std::vector<Element> out;
  for (const auto v : net.level(n)) {
    const auto e = w.from_value(v);
    if (!e) {
      throw Error(ErrorCode::kNetExceedsWindow,
                  "net level " + std::to_string(n) + " contains " + std::to_string(v) + " outside the window");
    }
    out.push_back(*e);
  }
  return out;
}

bool is_contiguous(const std::vector<std::int64_t>& level) { return level.back() - level.front() + 1 == static_cast<std::int64_t>(level.size()); }

// Distinct images of F x inside the window, or nullopt if one leaves it.
std::optional<std::vector<Element>> shifted(const Window& w, std::span<const Element> F, std::optional<Element> x) {
  std::vector<Element> image;
  image.reserve(F.size());
  for (const auto f : F) {
    if (!x) {
      image.push_back(f);
      continue;
    }
    const auto y = w.op(f, *x);
    if (!y) return std::nullopt;
    image.push_back(*y);
  }
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  return image;
}

}  // namespace

DensityReport upper_density(const GroundSet& A, const Net& net, std::optional<std::size_t> tail) {
  const Window& w = A.window();
  const std::size_t N = net.size();
  if (tail && (*tail < 1 || *tail > N)) {
    throw Error(ErrorCode::kInvalidArgument, "tail must lie in 1.." + std::to_string(N));
  }
  std::vector<std::vector<Element>> levels;
  for (std::size_t n = 1; n <= N; ++n) levels.push_back(level_elements(w, net, n));

  DensityReport report;
  const bool formal_identity = !w.identity().has_value();
  std::vector<DensityWitness> best(N);

  std::vector<std::uint32_t> prefix;
  if (w.kind() == WindowKind::kAdditiveNaturals) {
    prefix.assign(w.size() + 1, 0);
    for (std::uint64_t c = 0; c < w.size(); ++c) prefix[c + 1] = prefix[c] + (A.contains(Element{c}) ? 1 : 0);
  }

  for (std::size_t n = 1; n <= N; ++n) {
    const auto& values = net.level(n);
    DensityWitness& top = best[n - 1];
    top.n = n;
    top.level_size = values.size();
    bool found = false;
    auto offer = [&](std::optional<Element> x, std::size_t hits) {
      if (!found || hits > top.hits) {
        found = true;
        top.hits = hits;
        top.shift = x.value_or(Element{0});
        top.formal_identity = !x.has_value();
      }
    };

    if (!prefix.empty() && is_contiguous(values)) {
      const auto lo = static_cast<std::uint64_t>(values.front());
      const auto hi = static_cast<std::uint64_t>(values.back());
      const std::uint64_t W = w.size() - 1;
      for (std::uint64_t x = 0; x + hi <= W; ++x) offer(Element{x}, prefix[hi + x + 1] - prefix[lo + x]);
      report.shifts_skipped += hi;
    } else {
      const auto& F = levels[n - 1];
      auto count_hits = [&](const std::vector<Element>& image) {
        return static_cast<std::size_t>(
            std::count_if(image.begin(), image.end(), [&](Element e) { return A.contains(e); }));
      };
      if (formal_identity) offer(std::nullopt, count_hits(*shifted(w, F, std::nullopt)));
      for (std::uint64_t c = 0; c < w.size(); ++c) {
        const auto image = shifted(w, F, Element{c});
        if (!image) {
          ++report.shifts_skipped;
          continue;
        }
        offer(Element{c}, count_hits(*image));
      }
    }
    top.ratio = Rational(static_cast<std::int64_t>(top.hits), static_cast<std::int64_t>(top.level_size));
  }

  report.tails.resize(N);
  for (std::size_t m = N; m >= 1; --m) {
    report.tails[m - 1].m = m;
    if (m == N || best[m - 1].ratio >= report.tails[m].witness.ratio) {
      report.tails[m - 1].witness = best[m - 1];
    } else {
      report.tails[m - 1].witness = report.tails[m].witness;
    }
  }
  report.tail_start = tail.value_or(N);
  report.value = report.witness().ratio;
  return report;
}

bool verify_density_witness(const DensityWitness& witness, const GroundSet& A, const Net& net) {
  if (witness.n < 1 || witness.n > net.size()) return false;
  const Window& w = A.window();
  const auto F = level_elements(w, net, witness.n);
  if (witness.level_size != F.size()) return false;
  std::optional<Element> x;
  if (!witness.formal_identity) x = witness.shift;
  if (x && !w.contains(*x)) return false;
  const auto image = shifted(w, F, x);
  if (!image) return false;
  std::size_t hits = 0;
  for (const auto e : *image) hits += A.contains(e) ? 1 : 0;
  return hits == witness.hits &&
         witness.ratio == Rational(static_cast<std::int64_t>(hits), static_cast<std::int64_t>(F.size()));
}

std::uint64_t weak_cancellativity_bound(const Window& w) {
  constexpr std::uint64_t kExhaustiveLimit = 4096;
  if (w.kind() != WindowKind::kTable && w.size() > kExhaustiveLimit) {
    // (N,+), (N,*) on positives and free monoids are cancellative.
    return 1;
  }
  std::uint64_t b = 0;
  std::vector<std::uint64_t> hist(w.size());
  for (std::uint64_t x = 0; x < w.size(); ++x) {
    std::fill(hist.begin(), hist.end(), 0);
    for (std::uint64_t s = 0; s < w.size(); ++s) {
      if (const auto y = w.op(Element{s}, Element{x})) b = std::max(b, ++hist[y->code]);
    }
  }
  return b;
}

MonotonicityReport check_density_monotonicity(std::span<const DensityPair> pairs, const FamilySpec& family,
                                              const Net& net, const Rational& tolerance,
                                              const EmbedOptions& options) {
  MonotonicityReport report;
  report.tolerance = tolerance;
  if (pairs.empty()) return report;
  report.b = weak_cancellativity_bound(pairs.front().a.window());
  const Rational inv_b(1, static_cast<std::int64_t>(report.b));
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& pair = pairs[i];
    bool verified = false;
    if (!pair.probe_sizes.empty()) {
      ProbeOptions probe;
      probe.embed = options;
      const auto results = fe_probe(pair.a, pair.b, family, pair.probe_sizes, probe);
      verified = std::all_of(results.begin(), results.end(),
                             [](const ProbeResult& r) { return r.verdict.outcome == Outcome::kYes; });
    } else if (pair.a.is_explicit()) {
      verified = fe_decide(pair.a, pair.b, family, options).outcome == Outcome::kYes;
    }
    if (!verified) {
      throw Error(ErrorCode::kUnverifiedPair, "pair " + std::to_string(i) + ": A <= B could not be confirmed");
    }
    DensityPairResult r;
    r.density_a = upper_density(pair.a, net).value;
    r.density_b = upper_density(pair.b, net).value;
    r.margin = r.density_b + tolerance - r.density_a * inv_b;
    r.holds = r.margin >= Rational(0);
    if (!r.holds) ++report.violations;
    report.pairs.push_back(r);
  }
  return report;
}

}  // namespace finembed
