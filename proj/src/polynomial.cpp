#include "finembed/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "finembed/error.hpp"

namespace finembed {

namespace {

[[noreturn]] void malformed(std::string_view text, std::string_view why) {
  throw Error(ErrorCode::kMalformedInput, "polynomial '" + std::string(text) + "': " + std::string(why));
}

bool fits(__int128 v) { return v >= INT64_MIN && v <= INT64_MAX; }

}  // namespace

int Polynomial::Monomial::degree() const {
  int d = 0;
  for (const auto e : exponents) d += e;
  return d;
}

Polynomial Polynomial::parse(std::string_view text) {
  std::string s;
  for (const char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) malformed(text, "empty");

  std::map<std::array<int, kMaxVariables>, __int128> merged;
  std::size_t i = 0;
  auto read_number = [&](std::int64_t& out) {
    const std::size_t start = i;
    __int128 v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + (s[i] - '0');
      if (!fits(v)) malformed(text, "number too large");
      ++i;
    }
    if (i == start) return false;
    out = static_cast<std::int64_t>(v);
    return true;
  };

  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      malformed(text, "expected + or - at position " + std::to_string(i));
    }
    first = false;

    Monomial m;
    std::int64_t coefficient = 1;
    bool has_factor = false;
    if (read_number(coefficient)) has_factor = true;
    for (;;) {
      if (i < s.size() && s[i] == '*') {
        if (!has_factor) malformed(text, "'*' without a left factor");
        ++i;
        std::int64_t extra = 0;
        if (read_number(extra)) {
          coefficient *= extra;
          continue;
        }
        if (i >= s.size() || kVariableNames.find(s[i]) == std::string_view::npos) {
          malformed(text, "expected a factor after '*'");
        }
      }
      if (i >= s.size()) break;
      const auto var = kVariableNames.find(s[i]);
      if (var == std::string_view::npos) break;
      ++i;
      std::int64_t power = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        if (!read_number(power)) malformed(text, "expected an exponent after '^'");
        if (power > 64) malformed(text, "exponent too large");
      }
      m.exponents[var] += static_cast<int>(power);
      has_factor = true;
    }
    if (!has_factor) malformed(text, "empty term at position " + std::to_string(i));
    if (i < s.size() && s[i] != '+' && s[i] != '-') {
      malformed(text, "unexpected '" + std::string(1, s[i]) + "' at position " + std::to_string(i));
    }
    merged[m.exponents] += static_cast<__int128>(sign) * coefficient;
    if (!fits(merged[m.exponents])) malformed(text, "coefficient overflow");
  }

  Polynomial p;
  std::array<bool, kMaxVariables> used{};
  for (const auto& [exponents, coefficient] : merged) {
    if (coefficient == 0) continue;
    Monomial m;
    m.coefficient = static_cast<std::int64_t>(coefficient);
    m.exponents = exponents;
    for (std::size_t v = 0; v < kMaxVariables; ++v) used[v] = used[v] || exponents[v] > 0;
    p.monomials_.push_back(m);
  }
  // Highest degree first, then lexicographically larger exponent vectors.
  std::sort(p.monomials_.begin(), p.monomials_.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    return a.exponents > b.exponents;
  });
  for (std::size_t v = 0; v < kMaxVariables; ++v) {
    if (used[v]) p.variables_.push_back(v);
  }
  return p;
}

int Polynomial::degree() const {
  int d = 0;
  for (const auto& m : monomials_) d = std::max(d, m.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  return std::all_of(monomials_.begin(), monomials_.end(),
                     [&](const Monomial& m) { return m.degree() == monomials_.front().degree(); });
}

std::vector<int> Polynomial::monomial_degrees() const {
  std::vector<int> out;
  for (const auto& m : monomials_) out.push_back(m.degree());
  return out;
}

int Polynomial::degree_in(std::size_t variable_index) const {
  const auto v = variables_.at(variable_index);
  int d = 0;
  for (const auto& m : monomials_) d = std::max(d, m.exponents[v]);
  return d;
}

std::optional<std::int64_t> Polynomial::evaluate(std::span<const std::int64_t> values) const {
  if (values.size() != variables_.size()) {
    throw Error(ErrorCode::kArityMismatch, "polynomial expects " + std::to_string(variables_.size()) + " values");
  }
  std::array<std::int64_t, kMaxVariables> at{};
  for (std::size_t i = 0; i < variables_.size(); ++i) at[variables_[i]] = values[i];
  __int128 total = 0;
  for (const auto& m : monomials_) {
    __int128 term = m.coefficient;
    for (std::size_t v = 0; v < kMaxVariables; ++v) {
      for (int e = 0; e < m.exponents[v]; ++e) {
        term *= at[v];
        if (!fits(term)) return std::nullopt;
      }
    }
    total += term;
    if (!fits(total)) return std::nullopt;
  }
  return static_cast<std::int64_t>(total);
}

std::string Polynomial::to_string() const {
  if (monomials_.empty()) return "0";
  std::string out;
  for (const auto& m : monomials_) {
    const std::int64_t magnitude = m.coefficient < 0 ? -m.coefficient : m.coefficient;
    if (out.empty()) {
      if (m.coefficient < 0) out += "-";
    } else {
      out += m.coefficient < 0 ? "-" : "+";
    }
    std::string factors;
    for (std::size_t v = 0; v < kMaxVariables; ++v) {
      if (m.exponents[v] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += kVariableNames[v];
      if (m.exponents[v] > 1) factors += "^" + std::to_string(m.exponents[v]);
    }
    if (factors.empty()) {
      out += std::to_string(magnitude);
    } else {
      if (magnitude != 1) out += std::to_string(magnitude) + "*";
      out += factors;
    }
  }
  return out;
}

}  // namespace finembed
