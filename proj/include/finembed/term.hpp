#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace finembed {

/// Integer expression over tuple slots and parameter slots, used as the
/// generating function of pair-defined families.
///
/// Grammar: sums and differences of products of powers of atoms, where an
/// atom is a non-negative integer literal, `slotN`, `paramN` or a
/// parenthesised term. `^` binds tightest and associates to the right.
class Term {
 public:
  static Term parse(std::string_view text);

  /// nullopt on arithmetic overflow or a negative exponent.
  std::optional<std::int64_t> evaluate(std::span<const std::int64_t> slots,
                                       std::span<const std::int64_t> params) const;

  int max_slot() const noexcept { return max_slot_; }
  int max_param() const noexcept { return max_param_; }
  bool uses_subtraction() const noexcept { return uses_subtraction_; }
  const std::string& text() const noexcept { return text_; }

  struct Node;

 private:
  std::shared_ptr<const Node> root_;
  std::string text_;
  int max_slot_ = -1;
  int max_param_ = -1;
  bool uses_subtraction_ = false;
};

}  // namespace finembed
