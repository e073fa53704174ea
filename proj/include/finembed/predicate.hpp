#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace finembed {

/// Named membership predicates over the naturals, e.g. "multiples:3",
/// "interval:10:20" or "union(evens,squares)".
class Predicate {
 public:
  enum class Kind { kAll, kEvens, kOdds, kMultiples, kSquares, kPrimes, kInterval, kUnion, kIntersect };

  static Predicate parse(std::string_view text);

  static Predicate all() { return Predicate(Kind::kAll); }
  static Predicate evens() { return Predicate(Kind::kEvens); }
  static Predicate odds() { return Predicate(Kind::kOdds); }
  static Predicate multiples(std::int64_t m);
  static Predicate squares() { return Predicate(Kind::kSquares); }
  static Predicate primes() { return Predicate(Kind::kPrimes); }
  static Predicate interval(std::int64_t lo, std::int64_t hi);
  static Predicate union_of(std::vector<Predicate> parts);
  static Predicate intersect_of(std::vector<Predicate> parts);

  bool test(std::int64_t value) const;
  Kind kind() const noexcept { return kind_; }

  /// Canonical text form; parse(to_string()) reproduces the predicate.
  std::string to_string() const;

 private:
  explicit Predicate(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::int64_t lo_ = 0;
  std::int64_t hi_ = 0;
  std::vector<Predicate> parts_;
};

bool is_prime(std::int64_t value);
bool is_square(std::int64_t value);

}  // namespace finembed
