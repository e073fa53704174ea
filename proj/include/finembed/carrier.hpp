#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "finembed/predicate.hpp"

namespace finembed {

/// An element of a window, identified by its index in the window's
/// canonical order.
struct Element {
  std::uint64_t code = 0;

  friend auto operator<=>(const Element&, const Element&) = default;
};

enum class WindowKind { kAdditiveNaturals, kMultiplicativeNaturals, kFreeWords, kTable };

std::string_view window_kind_name(WindowKind kind);
WindowKind parse_window_kind(std::string_view name);

class Window;
using WindowPtr = std::shared_ptr<const Window>;

/// Largest number of elements a window may hold.
inline constexpr std::uint64_t kMaxWindowSize = std::uint64_t{1} << 28;

/// A closed truncation of a concrete semigroup.
///
/// Canonical orders: ascending integers for numeric carriers ([0..W] under +,
/// [1..W] under *), length-then-lexicographic for words of length 1..L over
/// the alphabet, and row index for operation tables. Products that leave the
/// window are reported as std::nullopt (overflow) instead of wrapping.
class Window {
 public:
  static WindowPtr make(WindowKind kind, std::uint64_t bound, std::vector<char> alphabet = {});

  /// Finite semigroup given by its Cayley table; rejects non-associative tables.
  static WindowPtr make_table(std::vector<std::vector<std::uint32_t>> table);

  WindowKind kind() const noexcept { return kind_; }
  std::uint64_t bound() const noexcept { return bound_; }
  const std::vector<char>& alphabet() const noexcept { return alphabet_; }
  std::uint64_t size() const noexcept { return size_; }

  bool is_numeric() const noexcept { return kind_ != WindowKind::kFreeWords; }
  bool contains(Element e) const noexcept { return e.code < size_; }

  /// x * y, or nullopt when the product leaves the window.
  std::optional<Element> op(Element x, Element y) const;

  std::optional<Element> identity() const;

  std::string display(Element e) const;
  Element parse(std::string_view text) const;

  /// Integer view of an element: the number itself for numeric carriers and
  /// the encoding for words.
  std::int64_t value(Element e) const;
  std::optional<Element> from_value(std::int64_t value) const;
  std::int64_t min_value() const noexcept { return kind_ == WindowKind::kMultiplicativeNaturals ? 1 : 0; }
  std::int64_t max_value() const noexcept { return min_value() + static_cast<std::int64_t>(size_) - 1; }

  std::string word(Element e) const;
  std::optional<Element> from_word(std::string_view word) const;
  std::size_t word_length(Element e) const;

  bool same_as(const Window& other) const;

 private:
  Window() = default;

  std::uint64_t words_before(std::size_t length) const;
  std::uint64_t power(std::size_t exponent) const;

  WindowKind kind_ = WindowKind::kAdditiveNaturals;
  std::uint64_t bound_ = 0;
  std::uint64_t size_ = 0;
  std::vector<char> alphabet_;
  std::vector<std::vector<std::uint32_t>> table_;
  std::optional<Element> identity_;
};

/// Free-function spelling of Window::op that validates both operands.
std::optional<Element> op_apply(const Window& window, Element x, Element y);

struct AssociativityReport {
  bool associative = true;
  std::uint64_t triples_checked = 0;
  std::optional<std::array<Element, 3>> counterexample;
};

/// Exhaustive over all triples when the window has at most 64 elements,
/// otherwise `samples` seeded random triples. Triples whose intermediate
/// products overflow are skipped.
AssociativityReport check_associativity(const Window& window, std::uint64_t seed = 0,
                                        std::uint64_t samples = 100000);

/// A subset of a window, either listed explicitly or given by a predicate
/// whose membership is memoised on first use.
class GroundSet {
 public:
  static GroundSet explicit_set(WindowPtr window, std::vector<Element> members, std::string label = {});
  static GroundSet from_values(WindowPtr window, std::span<const std::int64_t> values, std::string label = {});
  static GroundSet from_predicate(WindowPtr window, Predicate predicate, std::string label = {});

  const Window& window() const noexcept { return *window_; }
  const WindowPtr& window_ptr() const noexcept { return window_; }
  const std::string& label() const noexcept { return label_; }
  bool is_explicit() const noexcept;
  const Predicate* predicate() const noexcept;

  /// Throws kElementOutOfWindow for elements outside the window.
  bool contains(Element e) const;
  bool contains_value(std::int64_t value) const;

  /// First `cap` members in canonical order.
  std::vector<Element> elements(std::size_t cap) const;
  std::vector<Element> elements() const;
  std::vector<std::int64_t> values() const;
  std::size_t count() const;

 private:
  struct Impl;
  GroundSet(WindowPtr window, std::shared_ptr<const Impl> impl, std::string label);

  WindowPtr window_;
  std::shared_ptr<const Impl> impl_;
  std::string label_;
};

/// Window [0..bound] under + (the common case everywhere downstream).
inline WindowPtr additive_window(std::uint64_t bound) { return Window::make(WindowKind::kAdditiveNaturals, bound); }

}  // namespace finembed
