#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace finembed {

/// Integer polynomial in up to four variables x, y, z, w.
class Polynomial {
 public:
  static constexpr std::size_t kMaxVariables = 4;
  static constexpr std::string_view kVariableNames = "xyzw";

  struct Monomial {
    std::int64_t coefficient = 0;
    std::array<int, kMaxVariables> exponents{};
    int degree() const;
  };

  /// Terms such as "x^2+y^2-z^2", "2x*y - 3", "x y". Like monomials are
  /// merged; zero terms are dropped. Throws kMalformedInput.
  static Polynomial parse(std::string_view text);

  const std::vector<Monomial>& monomials() const noexcept { return monomials_; }

  /// Letters that occur, in x, y, z, w order. Evaluation takes values in
  /// this order.
  const std::vector<std::size_t>& variables() const noexcept { return variables_; }
  std::size_t variable_count() const noexcept { return variables_.size(); }

  /// Highest total degree; 0 for constants and the zero polynomial.
  int degree() const;
  /// All monomials share one total degree.
  bool is_homogeneous() const;
  std::vector<int> monomial_degrees() const;

  /// Highest exponent of the i-th used variable.
  int degree_in(std::size_t variable_index) const;

  /// nullopt on 64-bit overflow.
  std::optional<std::int64_t> evaluate(std::span<const std::int64_t> values) const;

  std::string to_string() const;

 private:
  std::vector<Monomial> monomials_;
  std::vector<std::size_t> variables_;
};

}  // namespace finembed
