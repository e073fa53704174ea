#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "finembed/carrier.hpp"
#include "finembed/term.hpp"

namespace finembed {

using ParamTuple = std::vector<std::int64_t>;

enum class EnumMode { kCompleteAnchored, kBoundedScan };

struct ParamEnumeration {
  EnumMode mode = EnumMode::kCompleteAnchored;
  /// Per-coordinate magnitude cap for bounded scans; 0 selects
  /// max(window bound, 64).
  std::int64_t bound = 0;
};

/// All n-tuples over a finite set, stored row-major.
class TupleSet {
 public:
  TupleSet(std::span<const Element> base, std::size_t arity);

  std::size_t size() const noexcept { return count_; }
  std::size_t arity() const noexcept { return arity_; }
  std::span<const Element> operator[](std::size_t i) const {
    return {data_.data() + i * arity_, arity_};
  }

 private:
  std::size_t arity_;
  std::size_t count_;
  std::vector<Element> data_;
};

/// Return false to stop the enumeration.
using ParamVisitor = std::function<bool(const ParamTuple&)>;

struct ParamStream {
  std::vector<ParamTuple> params;
  /// True iff a witness, if one exists, is guaranteed to be in the stream.
  bool complete = false;
};

/// Internal interface each family kind implements.
class FamilyModel {
 public:
  virtual ~FamilyModel() = default;

  virtual std::optional<Element> evaluate(std::span<const std::int64_t> params,
                                          std::span<const Element> tuple) const = 0;
  virtual bool in_region(std::span<const std::int64_t> params) const = 0;
  virtual bool supports_anchored() const { return false; }
  /// Streams anchored candidates in ascending lexicographic order.
  /// Returns false if the visitor stopped early.
  virtual bool anchored(std::span<const Element> /*F*/, const GroundSet& /*B*/, const TupleSet& /*tuples*/,
                        const ParamVisitor& /*visit*/) const {
    return true;
  }
  virtual std::int64_t lower(std::size_t index) const = 0;
  virtual std::int64_t upper(std::size_t /*index*/, std::int64_t bound) const { return bound; }
  /// G nondecreasing in every parameter on the natural-number domain, so
  /// an overflow at some parameter tuple implies overflow everywhere above it.
  virtual bool monotone() const { return false; }
  virtual std::optional<ParamTuple> compose(const ParamTuple& /*f*/, const ParamTuple& /*g*/) const {
    return std::nullopt;
  }
  virtual bool param_is_element(std::size_t /*index*/) const { return false; }
};

/// A function family F(G, R): generating map G over n-tuples and k
/// parameters, a parameter region R, and a parameter enumeration strategy.
class FamilySpec {
 public:
  FamilySpec(std::string name, std::size_t arity, std::size_t param_arity, WindowPtr window,
             std::shared_ptr<const FamilyModel> model, ParamEnumeration enumeration);

  const std::string& name() const noexcept { return name_; }
  std::size_t arity() const noexcept { return arity_; }
  std::size_t param_arity() const noexcept { return param_arity_; }
  const Window& window() const noexcept { return *window_; }
  const WindowPtr& window_ptr() const noexcept { return window_; }
  const ParamEnumeration& enumeration() const noexcept { return enumeration_; }
  std::int64_t effective_bound() const noexcept;

  FamilySpec with_enumeration(ParamEnumeration enumeration) const;

  bool in_region(std::span<const std::int64_t> params) const;

  /// Checked evaluation; throws kArityMismatch, kParamsOutsideR or
  /// kElementOutOfWindow. nullopt means overflow.
  std::optional<Element> apply(std::span<const std::int64_t> params, std::span<const Element> tuple) const;

  /// Unchecked evaluation for hot loops; arguments must already be valid.
  std::optional<Element> evaluate(std::span<const std::int64_t> params, std::span<const Element> tuple) const {
    return model_->evaluate(params, tuple);
  }

  /// Streams candidate parameters for the query (F, B) in ascending
  /// lexicographic order, every one inside R. Returns the completeness flag.
  bool for_each_param(std::span<const Element> F, const GroundSet& B, const TupleSet& tuples,
                      const ParamVisitor& visit) const;

  ParamStream enumerate_params(std::span<const Element> F, const GroundSet& B,
                               std::size_t limit = SIZE_MAX) const;

  /// First `limit` parameter tuples of R with every coordinate <= bound.
  std::vector<ParamTuple> sample_params(std::size_t limit, std::int64_t bound) const;

  /// Parameters of g o f when the family is closed under composition
  /// (n = 1 only) and the result stays in the window.
  std::optional<ParamTuple> compose(const ParamTuple& f, const ParamTuple& g) const {
    return model_->compose(f, g);
  }

  bool param_is_element(std::size_t index) const { return model_->param_is_element(index); }

 private:
  bool bounded_scan(const TupleSet& tuples, const ParamVisitor& visit) const;

  std::string name_;
  std::size_t arity_;
  std::size_t param_arity_;
  WindowPtr window_;
  std::shared_ptr<const FamilyModel> model_;
  ParamEnumeration enumeration_;
};

enum class TranslationSide { kRight, kLeft };

/// f_r(s) = s * r (right) or r * s (left), r ranging over the window,
/// optionally restricted by `region`.
FamilySpec builtin_translations(WindowPtr window, TranslationSide side,
                                std::optional<Predicate> region = std::nullopt);
inline FamilySpec builtin_right_translations(WindowPtr window) {
  return builtin_translations(std::move(window), TranslationSide::kRight);
}
inline FamilySpec builtin_left_translations(WindowPtr window) {
  return builtin_translations(std::move(window), TranslationSide::kLeft);
}

/// f_{a,b}(x) = a + b x with a >= 0 and b >= min_slope (>= 1).
FamilySpec builtin_affine(WindowPtr window, std::int64_t min_slope = 1);

/// f_{r,a,b}(n, m) = r^n (a + m b) with r > 1, b > 0. Bounded scan only.
FamilySpec builtin_geoarithmetic(WindowPtr window);

/// P(x) = sum_{i in D} a_i x^i with every a_i drawn from `coefficients`,
/// excluding the polynomials that are constant when max(D) >= 1.
FamilySpec builtin_polynomial(WindowPtr window, const GroundSet& coefficients, std::vector<int> exponents,
                              int degree);

/// f_n(w) = w a^n on a free-word window.
FamilySpec builtin_word_suffix(WindowPtr window, char letter);

/// Per-parameter region for pair-defined families.
struct ParamRegion {
  std::vector<Predicate> per_param;  // size 1 applies to every parameter
};

/// Family generated by an arbitrary term over slots and parameters.
FamilySpec make_family_from_pair(WindowPtr window, std::size_t arity, std::size_t param_arity,
                                 const std::string& term, ParamRegion region, ParamEnumeration enumeration);

}  // namespace finembed
