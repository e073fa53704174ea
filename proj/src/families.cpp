#include "finembed/families.hpp"

#include <algorithm>

#include "finembed/error.hpp"

namespace finembed {

TupleSet::TupleSet(std::span<const Element> base, std::size_t arity) : arity_(arity), count_(1) {
  for (std::size_t i = 0; i < arity; ++i) count_ *= base.size();
  data_.reserve(count_ * arity);
  std::vector<std::size_t> digits(arity, 0);
  for (std::size_t t = 0; t < count_; ++t) {
    for (std::size_t i = 0; i < arity; ++i) data_.push_back(base[digits[i]]);
    for (std::size_t i = arity; i-- > 0;) {
      if (++digits[i] < base.size()) break;
      digits[i] = 0;
    }
  }
}

namespace {

std::optional<std::int64_t> checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) return std::nullopt;
  return out;
}

std::optional<std::int64_t> checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) return std::nullopt;
  return out;
}

std::optional<std::int64_t> checked_pow(std::int64_t base, std::int64_t exponent) {
  if (exponent < 0) return std::nullopt;
  if (base == 0) return exponent == 0 ? 1 : 0;
  if (base == 1) return 1;
  std::int64_t out = 1;
  for (std::int64_t i = 0; i < exponent; ++i) {
    if (__builtin_mul_overflow(out, base, &out)) return std::nullopt;
  }
  return out;
}

enum class ScanResult { kStopped, kDone, kFirstOverflow };

// Lexicographic scan over per-coordinate value lists. When `prune` is set the
// model is monotone, so the first overflowing point of a loop ends that loop
// and, if it was the loop's first point, the enclosing loop too.
class LexScanner {
 public:
  LexScanner(const FamilyModel& model, const TupleSet* tuples, bool prune, const ParamVisitor& visit,
             const std::vector<std::vector<std::int64_t>>& levels)
      : model_(model), tuples_(tuples), prune_(prune && tuples != nullptr), visit_(visit), levels_(levels),
        params_(levels.size(), 0) {}

  /// False if the visitor stopped the scan.
  bool run() {
    if (levels_.empty()) {
      return !model_.in_region(params_) || visit_(params_);
    }
    return scan(0) != ScanResult::kStopped;
  }

 private:
  bool overflows() const {
    for (std::size_t t = 0; t < tuples_->size(); ++t) {
      if (!model_.evaluate(params_, (*tuples_)[t])) return true;
    }
    return false;
  }

  ScanResult scan(std::size_t level) {
    bool first = true;
    const bool last = level + 1 == levels_.size();
    for (const auto v : levels_[level]) {
      params_[level] = v;
      if (last) {
        if (prune_ && overflows()) return first ? ScanResult::kFirstOverflow : ScanResult::kDone;
        if (model_.in_region(params_) && !visit_(params_)) return ScanResult::kStopped;
      } else {
        const auto r = scan(level + 1);
        if (r == ScanResult::kStopped) return r;
        if (r == ScanResult::kFirstOverflow) return first ? ScanResult::kFirstOverflow : ScanResult::kDone;
      }
      first = false;
    }
    return ScanResult::kDone;
  }

  const FamilyModel& model_;
  const TupleSet* tuples_;
  bool prune_;
  const ParamVisitor& visit_;
  const std::vector<std::vector<std::int64_t>>& levels_;
  ParamTuple params_;
};

std::vector<std::int64_t> range_values(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

bool visit_sorted(std::vector<ParamTuple> candidates, const ParamVisitor& visit) {
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const auto& p : candidates) {
    if (!visit(p)) return false;
  }
  return true;
}

Element min_element_of(std::span<const Element> F) { return *std::min_element(F.begin(), F.end()); }

void require_additive(const Window& window, const char* family) {
  if (window.kind() != WindowKind::kAdditiveNaturals) {
    throw Error(ErrorCode::kWrongCarrier, std::string(family) + " family needs an additive-naturals window");
  }
}

// ---------------------------------------------------------------------------

class TranslationModel final : public FamilyModel {
 public:
  TranslationModel(WindowPtr window, TranslationSide side, std::optional<Predicate> region)
      : window_(std::move(window)), side_(side), region_(std::move(region)) {}

  std::optional<Element> evaluate(std::span<const std::int64_t> params, std::span<const Element> tuple) const override {
    const auto r = window_->from_value(params[0]);
    if (!r) return std::nullopt;
    return side_ == TranslationSide::kRight ? window_->op(tuple[0], *r) : window_->op(*r, tuple[0]);
  }

  bool in_region(std::span<const std::int64_t> params) const override {
    return window_->from_value(params[0]).has_value() && (!region_ || region_->test(params[0]));
  }

  bool supports_anchored() const override { return true; }

  // Every witness r satisfies f0 * r in B for the least f0 in F, so the
  // candidates are exactly the solutions r of f0 * r = b, b in B.
  bool anchored(std::span<const Element> F, const GroundSet& B, const TupleSet&,
                const ParamVisitor& visit) const override {
    const Window& w = *window_;
    const Element f0 = min_element_of(F);
    std::vector<ParamTuple> candidates;
    auto add = [&](std::optional<Element> r) {
      if (r && in_region(std::array{w.value(*r)})) candidates.push_back({w.value(*r)});
    };
    switch (w.kind()) {
      case WindowKind::kAdditiveNaturals: {
        const std::int64_t f = w.value(f0);
        for (const auto b : B.values()) {
          if (b >= f) add(w.from_value(b - f));
        }
        break;
      }
      case WindowKind::kMultiplicativeNaturals: {
        const std::int64_t f = w.value(f0);
        for (const auto b : B.values()) {
          if (b % f == 0) add(w.from_value(b / f));
        }
        break;
      }
      case WindowKind::kFreeWords: {
        const std::string f = w.word(f0);
        for (const auto be : B.elements()) {
          const std::string b = w.word(be);
          if (b.size() <= f.size()) continue;
          if (side_ == TranslationSide::kRight && b.starts_with(f)) add(w.from_word(b.substr(f.size())));
          if (side_ == TranslationSide::kLeft && b.ends_with(f)) add(w.from_word(b.substr(0, b.size() - f.size())));
        }
        break;
      }
      case WindowKind::kTable: {
        for (std::uint64_t code = 0; code < w.size(); ++code) {
          const Element r{code};
          const auto image = side_ == TranslationSide::kRight ? w.op(f0, r) : w.op(r, f0);
          if (image && B.contains(*image)) add(r);
        }
        break;
      }
    }
    return visit_sorted(std::move(candidates), visit);
  }

  std::int64_t lower(std::size_t) const override { return window_->min_value(); }
  std::int64_t upper(std::size_t, std::int64_t bound) const override { return std::min(bound, window_->max_value()); }
  bool monotone() const override { return true; }

  std::optional<ParamTuple> compose(const ParamTuple& f, const ParamTuple& g) const override {
    const auto rf = window_->from_value(f[0]);
    const auto rg = window_->from_value(g[0]);
    if (!rf || !rg) return std::nullopt;
    // right: (s r_f) r_g = s (r_f r_g); left: r_g (r_f s) = (r_g r_f) s
    const auto h = side_ == TranslationSide::kRight ? window_->op(*rf, *rg) : window_->op(*rg, *rf);
    if (!h) return std::nullopt;
    ParamTuple out{window_->value(*h)};
    if (!in_region(out)) return std::nullopt;
    return out;
  }

  bool param_is_element(std::size_t) const override { return true; }

 private:
  WindowPtr window_;
  TranslationSide side_;
  std::optional<Predicate> region_;
};

class AffineModel final : public FamilyModel {
 public:
  AffineModel(WindowPtr window, std::int64_t min_slope) : window_(std::move(window)), min_slope_(min_slope) {}

  std::optional<Element> evaluate(std::span<const std::int64_t> params, std::span<const Element> tuple) const override {
    const auto bx = checked_mul(params[1], window_->value(tuple[0]));
    if (!bx) return std::nullopt;
    const auto y = checked_add(params[0], *bx);
    if (!y) return std::nullopt;
    return window_->from_value(*y);
  }

  bool in_region(std::span<const std::int64_t> params) const override {
    return params[0] >= 0 && params[1] >= min_slope_;
  }

  bool supports_anchored() const override { return true; }

  // |F| >= 2: a witness maps f1 = min F and f2 = max F to b1, b2 in B with
  // b2 - b1 = b (f2 - f1), so (b1, b) determines (a, b).
  // |F| = 1, f >= 1: a + b f = beta in B with b f <= beta.
  // F = {0}: the image is {a}; every a in B works with any slope, the
  // stream lists slopes up to max(W, min_slope) for each such a.
  bool anchored(std::span<const Element> F, const GroundSet& B, const TupleSet&,
                const ParamVisitor& visit) const override {
    std::vector<std::int64_t> xs;
    for (const auto e : F) xs.push_back(window_->value(e));
    std::sort(xs.begin(), xs.end());
    const std::int64_t W = window_->max_value();
    const auto targets = B.values();
    std::vector<ParamTuple> candidates;
    if (xs.front() != xs.back()) {
      const std::int64_t f1 = xs.front();
      const std::int64_t delta = xs.back() - f1;
      for (const auto b1 : targets) {
        for (std::int64_t b = min_slope_; b1 + b * delta <= W; ++b) {
          if (b1 >= b * f1 && B.contains_value(b1 + b * delta)) candidates.push_back({b1 - b * f1, b});
        }
      }
      return visit_sorted(std::move(candidates), visit);
    }
    const std::int64_t f = xs.front();
    if (f == 0) {
      for (const auto a : targets) {
        for (std::int64_t b = min_slope_; b <= std::max(W, min_slope_); ++b) {
          if (!visit(ParamTuple{a, b})) return false;
        }
      }
      return true;
    }
    for (const auto beta : targets) {
      for (std::int64_t b = min_slope_; b * f <= beta; ++b) candidates.push_back({beta - b * f, b});
    }
    return visit_sorted(std::move(candidates), visit);
  }

  std::int64_t lower(std::size_t index) const override { return index == 0 ? 0 : min_slope_; }
  bool monotone() const override { return true; }

  // g(f(x)) = a_g + b_g (a_f + b_f x)
  std::optional<ParamTuple> compose(const ParamTuple& f, const ParamTuple& g) const override {
    const auto ba = checked_mul(g[1], f[0]);
    const auto slope = checked_mul(g[1], f[1]);
    if (!ba || !slope) return std::nullopt;
    const auto a = checked_add(g[0], *ba);
    if (!a) return std::nullopt;
    return ParamTuple{*a, *slope};
  }

 private:
  WindowPtr window_;
  std::int64_t min_slope_;
};

class GeoarithmeticModel final : public FamilyModel {
 public:
  explicit GeoarithmeticModel(WindowPtr window) : window_(std::move(window)) {}

  std::optional<Element> evaluate(std::span<const std::int64_t> params, std::span<const Element> tuple) const override {
    const auto rn = checked_pow(params[0], window_->value(tuple[0]));
    const auto mb = checked_mul(window_->value(tuple[1]), params[2]);
    if (!rn || !mb) return std::nullopt;
    const auto inner = checked_add(params[1], *mb);
    if (!inner) return std::nullopt;
    const auto y = checked_mul(*rn, *inner);
    if (!y) return std::nullopt;
    return window_->from_value(*y);
  }

  bool in_region(std::span<const std::int64_t> p) const override { return p[0] > 1 && p[1] >= 0 && p[2] > 0; }

  std::int64_t lower(std::size_t index) const override { return index == 0 ? 2 : (index == 1 ? 0 : 1); }
  bool monotone() const override { return true; }

 private:
  WindowPtr window_;
};

class PolynomialModel final : public FamilyModel {
 public:
  PolynomialModel(WindowPtr window, GroundSet coefficients, std::vector<int> exponents)
      : window_(std::move(window)), coefficients_(std::move(coefficients)), exponents_(std::move(exponents)),
        coefficient_values_(coefficients_.values()) {}

  std::optional<Element> evaluate(std::span<const std::int64_t> params, std::span<const Element> tuple) const override {
    const std::int64_t x = window_->value(tuple[0]);
    std::int64_t total = 0;
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
      const auto power = checked_pow(x, exponents_[i]);
      if (!power) return std::nullopt;
      const auto term = checked_mul(params[i], *power);
      if (!term) return std::nullopt;
      const auto sum = checked_add(total, *term);
      if (!sum) return std::nullopt;
      total = *sum;
    }
    return window_->from_value(total);
  }

  bool in_region(std::span<const std::int64_t> params) const override {
    bool nonconstant = false;
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
      const std::int64_t a = params[i];
      if (a < coefficients_.window().min_value() || a > coefficients_.window().max_value()) return false;
      if (!coefficients_.contains_value(a)) return false;
      if (exponents_[i] >= 1 && a != 0) nonconstant = true;
    }
    return nonconstant || exponents_.back() == 0;
  }

  bool supports_anchored() const override { return true; }

  // R is a subset of S^k with S finite, so a full pruned scan over S^k is
  // complete.
  bool anchored(std::span<const Element>, const GroundSet&, const TupleSet& tuples,
                const ParamVisitor& visit) const override {
    std::vector<std::vector<std::int64_t>> levels(exponents_.size(), coefficient_values_);
    return LexScanner(*this, &tuples, true, visit, levels).run();
  }

  std::int64_t lower(std::size_t) const override { return 0; }
  bool monotone() const override { return true; }

 private:
  WindowPtr window_;
  GroundSet coefficients_;
  std::vector<int> exponents_;
  std::vector<std::int64_t> coefficient_values_;
};

class WordSuffixModel final : public FamilyModel {
 public:
  WordSuffixModel(WindowPtr window, char letter) : window_(std::move(window)), letter_(letter) {}

  std::optional<Element> evaluate(std::span<const std::int64_t> params, std::span<const Element> tuple) const override {
    const std::string w = window_->word(tuple[0]);
    if (params[0] < 0 || w.size() + static_cast<std::uint64_t>(params[0]) > window_->bound()) return std::nullopt;
    return window_->from_word(w + std::string(static_cast<std::size_t>(params[0]), letter_));
  }

  bool in_region(std::span<const std::int64_t> params) const override { return params[0] >= 0; }

  bool supports_anchored() const override { return true; }

  // A witness n maps the least f0 in F to f0 a^n in B: strip f0 from each
  // member of B and keep the remainders that are powers of the letter.
  bool anchored(std::span<const Element> F, const GroundSet& B, const TupleSet&,
                const ParamVisitor& visit) const override {
    const std::string f = window_->word(min_element_of(F));
    std::vector<ParamTuple> candidates;
    for (const auto be : B.elements()) {
      const std::string b = window_->word(be);
      if (!b.starts_with(f)) continue;
      const std::string_view rest = std::string_view(b).substr(f.size());
      if (std::all_of(rest.begin(), rest.end(), [&](char c) { return c == letter_; })) {
        candidates.push_back({static_cast<std::int64_t>(rest.size())});
      }
    }
    return visit_sorted(std::move(candidates), visit);
  }

  std::int64_t lower(std::size_t) const override { return 0; }
  std::int64_t upper(std::size_t, std::int64_t bound) const override {
    return std::min(bound, static_cast<std::int64_t>(window_->bound()));
  }
  bool monotone() const override { return true; }

  std::optional<ParamTuple> compose(const ParamTuple& f, const ParamTuple& g) const override {
    return ParamTuple{f[0] + g[0]};
  }

 private:
  WindowPtr window_;
  char letter_;
};

class PairModel final : public FamilyModel {
 public:
  PairModel(WindowPtr window, std::size_t arity, Term term, ParamRegion region)
      : window_(std::move(window)), arity_(arity), term_(std::move(term)), region_(std::move(region)) {}

  std::optional<Element> evaluate(std::span<const std::int64_t> params, std::span<const Element> tuple) const override {
    std::array<std::int64_t, 16> slots{};
    for (std::size_t i = 0; i < arity_; ++i) slots[i] = window_->value(tuple[i]);
    const auto v = term_.evaluate(std::span(slots.data(), arity_), params);
    if (!v) return std::nullopt;
    return window_->from_value(*v);
  }

  bool in_region(std::span<const std::int64_t> params) const override {
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (params[i] < 0) return false;
      if (region_.per_param.empty()) continue;
      const auto& p = region_.per_param.size() == 1 ? region_.per_param[0] : region_.per_param[i];
      if (!p.test(params[i])) return false;
    }
    return true;
  }

  std::int64_t lower(std::size_t) const override { return 0; }

 private:
  WindowPtr window_;
  std::size_t arity_;
  Term term_;
  ParamRegion region_;
};

}  // namespace

// ---------------------------------------------------------------------------

FamilySpec::FamilySpec(std::string name, std::size_t arity, std::size_t param_arity, WindowPtr window,
                       std::shared_ptr<const FamilyModel> model, ParamEnumeration enumeration)
    : name_(std::move(name)), arity_(arity), param_arity_(param_arity), window_(std::move(window)),
      model_(std::move(model)), enumeration_(enumeration) {}

std::int64_t FamilySpec::effective_bound() const noexcept {
  if (enumeration_.bound > 0) return enumeration_.bound;
  return std::max<std::int64_t>(static_cast<std::int64_t>(window_->bound()), 64);
}

FamilySpec FamilySpec::with_enumeration(ParamEnumeration enumeration) const {
  FamilySpec copy = *this;
  copy.enumeration_ = enumeration;
  return copy;
}

bool FamilySpec::in_region(std::span<const std::int64_t> params) const {
  return params.size() == param_arity_ && model_->in_region(params);
}

std::optional<Element> FamilySpec::apply(std::span<const std::int64_t> params, std::span<const Element> tuple) const {
  if (params.size() != param_arity_) {
    throw Error(ErrorCode::kArityMismatch, name_ + " takes " + std::to_string(param_arity_) + " parameter(s), got " +
                                               std::to_string(params.size()));
  }
  if (tuple.size() != arity_) {
    throw Error(ErrorCode::kArityMismatch,
                name_ + " takes " + std::to_string(arity_) + "-tuples, got " + std::to_string(tuple.size()));
  }
  for (const auto e : tuple) {
    if (!window_->contains(e)) throw Error(ErrorCode::kElementOutOfWindow, "tuple entry outside window");
  }
  if (!model_->in_region(params)) throw Error(ErrorCode::kParamsOutsideR, "parameters outside R for " + name_);
  return model_->evaluate(params, tuple);
}

bool FamilySpec::bounded_scan(const TupleSet& tuples, const ParamVisitor& visit) const {
  const std::int64_t bound = effective_bound();
  std::vector<std::vector<std::int64_t>> levels;
  for (std::size_t i = 0; i < param_arity_; ++i) {
    levels.push_back(range_values(model_->lower(i), model_->upper(i, bound)));
  }
  return LexScanner(*model_, &tuples, model_->monotone(), visit, levels).run();
}

bool FamilySpec::for_each_param(std::span<const Element> F, const GroundSet& B, const TupleSet& tuples,
                                const ParamVisitor& visit) const {
  if (enumeration_.mode == EnumMode::kCompleteAnchored && model_->supports_anchored() && !F.empty()) {
    model_->anchored(F, B, tuples, visit);
    return true;
  }
  bounded_scan(tuples, visit);
  return false;
}

ParamStream FamilySpec::enumerate_params(std::span<const Element> F, const GroundSet& B, std::size_t limit) const {
  ParamStream stream;
  const TupleSet tuples(F, arity_);
  stream.complete = for_each_param(F, B, tuples, [&](const ParamTuple& p) {
    stream.params.push_back(p);
    return stream.params.size() < limit;
  });
  return stream;
}

std::vector<ParamTuple> FamilySpec::sample_params(std::size_t limit, std::int64_t bound) const {
  std::vector<ParamTuple> out;
  if (limit == 0) return out;
  std::vector<std::vector<std::int64_t>> levels;
  for (std::size_t i = 0; i < param_arity_; ++i) {
    levels.push_back(range_values(model_->lower(i), model_->upper(i, bound)));
  }
  const ParamVisitor collect = [&](const ParamTuple& p) {
    out.push_back(p);
    return out.size() < limit;
  };
  LexScanner(*model_, nullptr, false, collect, levels).run();
  return out;
}

// ---------------------------------------------------------------------------

FamilySpec builtin_translations(WindowPtr window, TranslationSide side, std::optional<Predicate> region) {
  std::string name = side == TranslationSide::kRight ? "translations-right" : "translations-left";
  auto model = std::make_shared<TranslationModel>(window, side, std::move(region));
  return FamilySpec(std::move(name), 1, 1, std::move(window), std::move(model), {});
}

FamilySpec builtin_affine(WindowPtr window, std::int64_t min_slope) {
  require_additive(*window, "affine");
  if (min_slope < 1) throw Error(ErrorCode::kInvalidArgument, "affine min_slope must be >= 1");
  auto model = std::make_shared<AffineModel>(window, min_slope);
  return FamilySpec("affine", 1, 2, std::move(window), std::move(model), {});
}

FamilySpec builtin_geoarithmetic(WindowPtr window) {
  require_additive(*window, "geoarithmetic");
  auto model = std::make_shared<GeoarithmeticModel>(window);
  return FamilySpec("geoarithmetic", 2, 3, std::move(window), std::move(model),
                    ParamEnumeration{EnumMode::kBoundedScan, 0});
}

FamilySpec builtin_polynomial(WindowPtr window, const GroundSet& coefficients, std::vector<int> exponents,
                              int degree) {
  require_additive(*window, "polynomial");
  if (exponents.empty()) throw Error(ErrorCode::kEmptyD, "polynomial family needs a non-empty exponent set D");
  std::sort(exponents.begin(), exponents.end());
  exponents.erase(std::unique(exponents.begin(), exponents.end()), exponents.end());
  if (degree < 0 || exponents.front() < 0 || exponents.back() > degree) {
    throw Error(ErrorCode::kInconsistentDegree, "D must be a subset of {0..d}");
  }
  if (!coefficients.window().is_numeric() || coefficients.count() == 0) {
    throw Error(ErrorCode::kInvalidArgument, "coefficient set S must be a non-empty numeric set");
  }
  const std::size_t k = exponents.size();
  auto model = std::make_shared<PolynomialModel>(window, coefficients, std::move(exponents));
  return FamilySpec("polynomial", 1, k, std::move(window), std::move(model), {});
}

FamilySpec builtin_word_suffix(WindowPtr window, char letter) {
  if (window->kind() != WindowKind::kFreeWords) {
    throw Error(ErrorCode::kWrongCarrier, "word-suffix family needs a free-words window");
  }
  const auto& alphabet = window->alphabet();
  if (std::find(alphabet.begin(), alphabet.end(), letter) == alphabet.end()) {
    throw Error(ErrorCode::kLetterNotInAlphabet, std::string("letter '") + letter + "' not in alphabet");
  }
  auto model = std::make_shared<WordSuffixModel>(window, letter);
  return FamilySpec("word-suffix", 1, 1, std::move(window), std::move(model), {});
}

FamilySpec make_family_from_pair(WindowPtr window, std::size_t arity, std::size_t param_arity,
                                 const std::string& term_text, ParamRegion region, ParamEnumeration enumeration) {
  if (!window->is_numeric()) throw Error(ErrorCode::kWrongCarrier, "pair families need a numeric window");
  if (arity < 1 || arity > 16) throw Error(ErrorCode::kArityMismatch, "pair arity must be in 1..16");
  Term term = Term::parse(term_text);
  if (term.max_slot() >= static_cast<int>(arity)) {
    throw Error(ErrorCode::kMalformedTerm, "term uses slot" + std::to_string(term.max_slot()) + " but n = " +
                                               std::to_string(arity));
  }
  if (term.max_param() >= static_cast<int>(param_arity)) {
    throw Error(ErrorCode::kMalformedTerm, "term uses param" + std::to_string(term.max_param()) + " but k = " +
                                               std::to_string(param_arity));
  }
  if (region.per_param.size() > 1 && region.per_param.size() != param_arity) {
    throw Error(ErrorCode::kArityMismatch, "parameter region lists " + std::to_string(region.per_param.size()) +
                                               " predicates for k = " + std::to_string(param_arity));
  }
  if (enumeration.mode == EnumMode::kCompleteAnchored) {
    throw Error(ErrorCode::kInvalidArgument, "pair-defined families support bounded-scan enumeration only");
  }
  auto model = std::make_shared<PairModel>(window, arity, std::move(term), std::move(region));
  return FamilySpec("pair:" + term_text, arity, param_arity, std::move(window), std::move(model), enumeration);
}

}  // namespace finembed
