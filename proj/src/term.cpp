#include "finembed/term.hpp"

#include <cctype>
#include <vector>

#include "finembed/error.hpp"

namespace finembed {

struct Term::Node {
  enum class Op { kLiteral, kSlot, kParam, kAdd, kSub, kMul, kPow };
  Op op = Op::kLiteral;
  std::int64_t value = 0;  // literal value or slot/param index
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

using NodePtr = std::shared_ptr<const Term::Node>;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parse() {
    auto node = sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return node;
  }

  int max_slot = -1;
  int max_param = -1;
  bool subtraction = false;

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::kMalformedTerm, why + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static NodePtr binary(Term::Node::Op op, NodePtr lhs, NodePtr rhs) {
    auto node = std::make_shared<Term::Node>();
    node->op = op;
    node->lhs = std::move(lhs);
    node->rhs = std::move(rhs);
    return node;
  }

  NodePtr sum() {
    auto node = product();
    for (;;) {
      if (accept('+')) {
        node = binary(Term::Node::Op::kAdd, node, product());
      } else if (accept('-')) {
        subtraction = true;
        node = binary(Term::Node::Op::kSub, node, product());
      } else {
        return node;
      }
    }
  }

  NodePtr product() {
    auto node = power();
    while (accept('*')) node = binary(Term::Node::Op::kMul, node, power());
    return node;
  }

  NodePtr power() {
    auto base = atom();
    if (accept('^')) return binary(Term::Node::Op::kPow, base, power());
    return base;
  }

  std::int64_t number() {
    const std::size_t start = pos_;
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > (INT64_MAX - 9) / 10) fail("integer literal too large");
      v = v * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer");
    return v;
  }

  NodePtr atom() {
    skip_space();
    if (accept('(')) {
      auto node = sum();
      if (!accept(')')) fail("expected ')'");
      return node;
    }
    auto node = std::make_shared<Term::Node>();
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      node->value = number();
      return node;
    }
    for (const auto& [word, op] : {std::pair{std::string_view("slot"), Term::Node::Op::kSlot},
                                  std::pair{std::string_view("param"), Term::Node::Op::kParam}}) {
      if (text_.substr(pos_).starts_with(word)) {
        pos_ += word.size();
        node->op = op;
        node->value = number();
        if (node->value > 64) fail("slot/param index too large");
        int& top = op == Term::Node::Op::kSlot ? max_slot : max_param;
        top = std::max(top, static_cast<int>(node->value));
        return node;
      }
    }
    fail("expected a literal, slotN, paramN or '('");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::optional<std::int64_t> eval(const Term::Node& node, std::span<const std::int64_t> slots,
                                 std::span<const std::int64_t> params) {
  using Op = Term::Node::Op;
  switch (node.op) {
    case Op::kLiteral: return node.value;
    case Op::kSlot: return slots[static_cast<std::size_t>(node.value)];
    case Op::kParam: return params[static_cast<std::size_t>(node.value)];
    default: break;
  }
  const auto lhs = eval(*node.lhs, slots, params);
  if (!lhs) return std::nullopt;
  const auto rhs = eval(*node.rhs, slots, params);
  if (!rhs) return std::nullopt;
  std::int64_t out = 0;
  switch (node.op) {
    case Op::kAdd:
      if (__builtin_add_overflow(*lhs, *rhs, &out)) return std::nullopt;
      return out;
    case Op::kSub:
      if (__builtin_sub_overflow(*lhs, *rhs, &out)) return std::nullopt;
      return out;
    case Op::kMul:
      if (__builtin_mul_overflow(*lhs, *rhs, &out)) return std::nullopt;
      return out;
    case Op::kPow: {
      if (*rhs < 0) return std::nullopt;
      std::int64_t result = 1;
      std::int64_t base = *lhs;
      std::int64_t exponent = *rhs;
      // |base| <= 1 never overflows, whatever the exponent.
      if (base == 0) return exponent == 0 ? 1 : 0;
      if (base == 1) return 1;
      if (base == -1) return exponent % 2 == 0 ? 1 : -1;
      for (std::int64_t i = 0; i < exponent; ++i) {
        if (__builtin_mul_overflow(result, base, &result)) return std::nullopt;
      }
      return result;
    }
    default: return std::nullopt;
  }
}

}  // namespace

Term Term::parse(std::string_view text) {
  Parser parser(text);
  Term term;
  term.root_ = parser.parse();
  term.text_ = std::string(text);
  term.max_slot_ = parser.max_slot;
  term.max_param_ = parser.max_param;
  term.uses_subtraction_ = parser.subtraction;
  return term;
}

std::optional<std::int64_t> Term::evaluate(std::span<const std::int64_t> slots,
                                           std::span<const std::int64_t> params) const {
  if (max_slot_ >= static_cast<int>(slots.size()) || max_param_ >= static_cast<int>(params.size())) {
    throw Error(ErrorCode::kArityMismatch, "term '" + text_ + "' evaluated with too few slots or params");
  }
  return eval(*root_, slots, params);
}

}  // namespace finembed
