#include "finembed/predicate.hpp"

#include <charconv>

#include "finembed/error.hpp"

namespace finembed {
namespace {

std::int64_t parse_arg(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw Error(ErrorCode::kMalformedInput, "bad predicate argument in '" + std::string(whole) + "'");
  }
  return value;
}

// Splits "a,b(c,d),e" on top-level commas.
std::vector<std::string_view> split_top_level(std::string_view text) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == ',' && depth == 0) {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(text.substr(start));
  return parts;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

bool is_prime(std::int64_t value) {
  if (value < 2) return false;
  if (value < 4) return true;
  if (value % 2 == 0 || value % 3 == 0) return false;
  for (std::int64_t d = 5; d * d <= value; d += 6) {
    if (value % d == 0 || value % (d + 2) == 0) return false;
  }
  return true;
}

bool is_square(std::int64_t value) {
  if (value < 0) return false;
  std::int64_t root = 0;
  std::int64_t step = std::int64_t{1} << 31;
  while (step > 0) {
    const std::int64_t candidate = root + step;
    if (candidate <= 3037000499 && candidate * candidate <= value) root = candidate;
    step >>= 1;
  }
  return root * root == value;
}

Predicate Predicate::multiples(std::int64_t m) {
  if (m < 1) throw Error(ErrorCode::kMalformedInput, "multiples:<m> needs m >= 1");
  Predicate p(Kind::kMultiples);
  p.lo_ = m;
  return p;
}

Predicate Predicate::interval(std::int64_t lo, std::int64_t hi) {
  Predicate p(Kind::kInterval);
  p.lo_ = lo;
  p.hi_ = hi;
  return p;
}

Predicate Predicate::union_of(std::vector<Predicate> parts) {
  if (parts.empty()) throw Error(ErrorCode::kMalformedInput, "union() needs at least one part");
  Predicate p(Kind::kUnion);
  p.parts_ = std::move(parts);
  return p;
}

Predicate Predicate::intersect_of(std::vector<Predicate> parts) {
  if (parts.empty()) throw Error(ErrorCode::kMalformedInput, "intersect() needs at least one part");
  Predicate p(Kind::kIntersect);
  p.parts_ = std::move(parts);
  return p;
}

Predicate Predicate::parse(std::string_view text) {
  const std::string_view whole = text;
  text = trim(text);
  for (const auto& [name, kind] : {std::pair{std::string_view("union("), Kind::kUnion},
                                  std::pair{std::string_view("intersect("), Kind::kIntersect}}) {
    if (text.starts_with(name)) {
      if (!text.ends_with(")")) throw Error(ErrorCode::kMalformedInput, "unbalanced predicate '" + std::string(whole) + "'");
      std::vector<Predicate> parts;
      for (auto part : split_top_level(text.substr(name.size(), text.size() - name.size() - 1))) {
        parts.push_back(parse(part));
      }
      return kind == Kind::kUnion ? union_of(std::move(parts)) : intersect_of(std::move(parts));
    }
  }
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ':') {
      fields.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  const std::string_view head = fields.front();
  auto expect_args = [&](std::size_t n) {
    if (fields.size() != n + 1) {
      throw Error(ErrorCode::kMalformedInput, "predicate '" + std::string(whole) + "' expects " + std::to_string(n) + " argument(s)");
    }
  };
  if (head == "all" || head == "N") {
    expect_args(0);
    return all();
  }
  if (head == "evens") {
    expect_args(0);
    return evens();
  }
  if (head == "odds") {
    expect_args(0);
    return odds();
  }
  if (head == "squares") {
    expect_args(0);
    return squares();
  }
  if (head == "primes") {
    expect_args(0);
    return primes();
  }
  if (head == "multiples") {
    expect_args(1);
    return multiples(parse_arg(fields[1], whole));
  }
  if (head == "interval") {
    expect_args(2);
    return interval(parse_arg(fields[1], whole), parse_arg(fields[2], whole));
  }
  throw Error(ErrorCode::kMalformedInput, "unknown predicate '" + std::string(whole) + "'");
}

bool Predicate::test(std::int64_t value) const {
  switch (kind_) {
    case Kind::kAll: return true;
    case Kind::kEvens: return value % 2 == 0;
    case Kind::kOdds: return value % 2 != 0;
    case Kind::kMultiples: return value % lo_ == 0;
    case Kind::kSquares: return is_square(value);
    case Kind::kPrimes: return is_prime(value);
    case Kind::kInterval: return lo_ <= value && value <= hi_;
    case Kind::kUnion:
      for (const auto& p : parts_) {
        if (p.test(value)) return true;
      }
      return false;
    case Kind::kIntersect:
      for (const auto& p : parts_) {
        if (!p.test(value)) return false;
      }
      return true;
  }
  return false;
}

std::string Predicate::to_string() const {
  switch (kind_) {
    case Kind::kAll: return "all";
    case Kind::kEvens: return "evens";
    case Kind::kOdds: return "odds";
    case Kind::kMultiples: return "multiples:" + std::to_string(lo_);
    case Kind::kSquares: return "squares";
    case Kind::kPrimes: return "primes";
    case Kind::kInterval: return "interval:" + std::to_string(lo_) + ":" + std::to_string(hi_);
    case Kind::kUnion:
    case Kind::kIntersect: {
      std::string out = kind_ == Kind::kUnion ? "union(" : "intersect(";
      for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) out += ',';
        out += parts_[i].to_string();
      }
      return out + ")";
    }
  }
  return {};
}

}  // namespace finembed
