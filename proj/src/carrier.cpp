#include "finembed/carrier.hpp"

#include <algorithm>
#include <bit>
#include <mutex>

#include "finembed/error.hpp"
#include "finembed/rng.hpp"

namespace finembed {

std::string_view window_kind_name(WindowKind kind) {
  switch (kind) {
    case WindowKind::kAdditiveNaturals: return "additive-naturals";
    case WindowKind::kMultiplicativeNaturals: return "multiplicative-naturals";
    case WindowKind::kFreeWords: return "free-words";
    case WindowKind::kTable: return "table";
  }
  return "";
}

WindowKind parse_window_kind(std::string_view name) {
  for (auto kind : {WindowKind::kAdditiveNaturals, WindowKind::kMultiplicativeNaturals, WindowKind::kFreeWords,
                    WindowKind::kTable}) {
    if (window_kind_name(kind) == name) return kind;
  }
  throw Error(ErrorCode::kInvalidKind, "unknown window kind '" + std::string(name) + "'");
}

WindowPtr Window::make(WindowKind kind, std::uint64_t bound, std::vector<char> alphabet) {
  if (kind == WindowKind::kTable) {
    throw Error(ErrorCode::kInvalidKind, "table windows are built from an operation table");
  }
  if (kind == WindowKind::kFreeWords) {
    if (alphabet.empty()) throw Error(ErrorCode::kEmptyAlphabet, "free-words window needs a non-empty alphabet");
  } else if (!alphabet.empty()) {
    throw Error(ErrorCode::kInvalidKind, "only free-words windows take an alphabet");
  }
  if (bound < 1) throw Error(ErrorCode::kBoundTooLarge, "window bound must be >= 1");

  std::shared_ptr<Window> w(new Window());
  w->kind_ = kind;
  w->bound_ = bound;
  switch (kind) {
    case WindowKind::kAdditiveNaturals:
      if (bound >= kMaxWindowSize) throw Error(ErrorCode::kBoundTooLarge, "additive bound exceeds encoding range");
      w->size_ = bound + 1;
      w->identity_ = Element{0};
      break;
    case WindowKind::kMultiplicativeNaturals:
      if (bound > kMaxWindowSize) throw Error(ErrorCode::kBoundTooLarge, "multiplicative bound exceeds encoding range");
      w->size_ = bound;
      w->identity_ = Element{0};
      break;
    case WindowKind::kFreeWords: {
      std::vector<char> sorted = alphabet;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw Error(ErrorCode::kInvalidKind, "alphabet letters must be distinct");
      }
      w->alphabet_ = std::move(alphabet);
      std::uint64_t total = 0;
      std::uint64_t layer = 1;
      for (std::uint64_t len = 1; len <= bound; ++len) {
        if (layer > kMaxWindowSize / w->alphabet_.size()) {
          throw Error(ErrorCode::kBoundTooLarge, "word window exceeds encoding range");
        }
        layer *= w->alphabet_.size();
        total += layer;
        if (total > kMaxWindowSize) throw Error(ErrorCode::kBoundTooLarge, "word window exceeds encoding range");
      }
      w->size_ = total;
      break;
    }
    case WindowKind::kTable: break;
  }
  return w;
}

WindowPtr Window::make_table(std::vector<std::vector<std::uint32_t>> table) {
  const std::size_t m = table.size();
  if (m == 0) throw Error(ErrorCode::kBoundTooLarge, "operation table must be non-empty");
  if (m > 256) throw Error(ErrorCode::kBoundTooLarge, "operation tables are limited to 256 elements");
  for (const auto& row : table) {
    if (row.size() != m) throw Error(ErrorCode::kMalformedInput, "operation table must be square");
    for (auto v : row) {
      if (v >= m) throw Error(ErrorCode::kMalformedInput, "operation table entry out of range");
    }
  }
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      for (std::size_t z = 0; z < m; ++z) {
        if (table[table[x][y]][z] != table[x][table[y][z]]) {
          throw Error(ErrorCode::kNonAssociative, "table is not associative at (" + std::to_string(x) + "," +
                                                      std::to_string(y) + "," + std::to_string(z) + ")");
        }
      }
    }
  }
  std::shared_ptr<Window> w(new Window());
  w->kind_ = WindowKind::kTable;
  w->bound_ = m - 1;
  w->size_ = m;
  w->table_ = std::move(table);
  for (std::size_t e = 0; e < m && !w->identity_; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < m && ok; ++x) ok = w->table_[e][x] == x && w->table_[x][e] == x;
    if (ok) w->identity_ = Element{e};
  }
  return w;
}

std::uint64_t Window::power(std::size_t exponent) const {
  std::uint64_t p = 1;
  for (std::size_t i = 0; i < exponent; ++i) p *= alphabet_.size();
  return p;
}

std::uint64_t Window::words_before(std::size_t length) const {
  std::uint64_t total = 0;
  std::uint64_t layer = 1;
  for (std::size_t len = 1; len < length; ++len) {
    layer *= alphabet_.size();
    total += layer;
  }
  return total;
}

std::size_t Window::word_length(Element e) const {
  std::size_t len = 1;
  std::uint64_t start = 0;
  std::uint64_t layer = alphabet_.size();
  while (e.code >= start + layer) {
    start += layer;
    layer *= alphabet_.size();
    ++len;
  }
  return len;
}

std::string Window::word(Element e) const {
  if (kind_ != WindowKind::kFreeWords) throw Error(ErrorCode::kWrongCarrier, "word() on a numeric window");
  if (!contains(e)) throw Error(ErrorCode::kElementOutOfWindow, "code " + std::to_string(e.code));
  const std::size_t len = word_length(e);
  std::uint64_t rank = e.code - words_before(len);
  std::string out(len, ' ');
  for (std::size_t i = len; i-- > 0;) {
    out[i] = alphabet_[rank % alphabet_.size()];
    rank /= alphabet_.size();
  }
  return out;
}

std::optional<Element> Window::from_word(std::string_view w) const {
  if (kind_ != WindowKind::kFreeWords) throw Error(ErrorCode::kWrongCarrier, "from_word() on a numeric window");
  if (w.empty() || w.size() > bound_) return std::nullopt;
  std::uint64_t rank = 0;
  for (char c : w) {
    const auto it = std::find(alphabet_.begin(), alphabet_.end(), c);
    if (it == alphabet_.end()) return std::nullopt;
    rank = rank * alphabet_.size() + static_cast<std::uint64_t>(it - alphabet_.begin());
  }
  return Element{words_before(w.size()) + rank};
}

std::optional<Element> Window::op(Element x, Element y) const {
  if (!contains(x) || !contains(y)) {
    throw Error(ErrorCode::kElementOutOfWindow, "operand outside window of size " + std::to_string(size_));
  }
  switch (kind_) {
    case WindowKind::kAdditiveNaturals: {
      const std::uint64_t sum = x.code + y.code;
      if (sum > bound_) return std::nullopt;
      return Element{sum};
    }
    case WindowKind::kMultiplicativeNaturals: {
      const std::uint64_t a = x.code + 1;
      const std::uint64_t b = y.code + 1;
      if (a > bound_ / b) return std::nullopt;
      return Element{a * b - 1};
    }
    case WindowKind::kFreeWords: {
      const std::size_t lx = word_length(x);
      const std::size_t ly = word_length(y);
      if (lx + ly > bound_) return std::nullopt;
      const std::uint64_t rx = x.code - words_before(lx);
      const std::uint64_t ry = y.code - words_before(ly);
      return Element{words_before(lx + ly) + rx * power(ly) + ry};
    }
    case WindowKind::kTable: return Element{table_[x.code][y.code]};
  }
  return std::nullopt;
}

std::optional<Element> op_apply(const Window& window, Element x, Element y) { return window.op(x, y); }

std::optional<Element> Window::identity() const { return identity_; }

std::int64_t Window::value(Element e) const {
  if (!contains(e)) throw Error(ErrorCode::kElementOutOfWindow, "code " + std::to_string(e.code));
  return static_cast<std::int64_t>(e.code) + min_value();
}

std::optional<Element> Window::from_value(std::int64_t v) const {
  if (v < min_value() || v > max_value()) return std::nullopt;
  return Element{static_cast<std::uint64_t>(v - min_value())};
}

std::string Window::display(Element e) const {
  if (kind_ == WindowKind::kFreeWords) return word(e);
  return std::to_string(value(e));
}

Element Window::parse(std::string_view text) const {
  std::optional<Element> e;
  if (kind_ == WindowKind::kFreeWords) {
    e = from_word(text);
  } else {
    std::int64_t v = 0;
    bool digits = !text.empty();
    for (char c : text) {
      if (c < '0' || c > '9' || v > (INT64_MAX - 9) / 10) {
        digits = false;
        break;
      }
      v = v * 10 + (c - '0');
    }
    if (digits) e = from_value(v);
  }
  if (!e) throw Error(ErrorCode::kElementOutOfWindow, "'" + std::string(text) + "' is not an element of the window");
  return *e;
}

bool Window::same_as(const Window& other) const {
  return kind_ == other.kind_ && bound_ == other.bound_ && alphabet_ == other.alphabet_ && table_ == other.table_;
}

AssociativityReport check_associativity(const Window& window, std::uint64_t seed, std::uint64_t samples) {
  AssociativityReport report;
  auto check = [&](Element x, Element y, Element z) {
    const auto xy = window.op(x, y);
    const auto yz = window.op(y, z);
    if (!xy || !yz) return true;
    const auto left = window.op(*xy, z);
    const auto right = window.op(x, *yz);
    if (!left || !right) return true;
    ++report.triples_checked;
    if (*left != *right) {
      report.associative = false;
      report.counterexample = std::array<Element, 3>{x, y, z};
      return false;
    }
    return true;
  };
  const std::uint64_t n = window.size();
  if (n <= 64) {
    for (std::uint64_t x = 0; x < n; ++x)
      for (std::uint64_t y = 0; y < n; ++y)
        for (std::uint64_t z = 0; z < n; ++z)
          if (!check(Element{x}, Element{y}, Element{z})) return report;
    return report;
  }
  Rng rng(seed);
  const auto hi = static_cast<std::int64_t>(n - 1);
  for (std::uint64_t i = 0; i < samples; ++i) {
    const Element x{static_cast<std::uint64_t>(rng.uniform(0, hi))};
    const Element y{static_cast<std::uint64_t>(rng.uniform(0, hi))};
    const Element z{static_cast<std::uint64_t>(rng.uniform(0, hi))};
    if (!check(x, y, z)) return report;
  }
  return report;
}

// ---------------------------------------------------------------------------
// GroundSet

namespace {
constexpr std::uint64_t kChunkBits = 4096;
constexpr std::uint64_t kChunkWords = kChunkBits / 64;
}  // namespace

struct GroundSet::Impl {
  std::optional<Predicate> predicate;
  std::vector<Element> members;  // explicit sets only, sorted
  mutable std::vector<std::uint64_t> bits;
  std::unique_ptr<std::once_flag[]> chunk_once;  // predicate sets only
  std::uint64_t chunks = 0;
  std::uint64_t size = 0;
  const Window* window = nullptr;

  void fill_chunk(std::uint64_t chunk) const {
    const std::uint64_t begin = chunk * kChunkBits;
    const std::uint64_t end = std::min(size, begin + kChunkBits);
    for (std::uint64_t code = begin; code < end; ++code) {
      if (predicate->test(window->value(Element{code}))) bits[code / 64] |= std::uint64_t{1} << (code % 64);
    }
  }

  bool test(std::uint64_t code) const {
    if (predicate) {
      const std::uint64_t chunk = code / kChunkBits;
      std::call_once(chunk_once[chunk], [&] { fill_chunk(chunk); });
    }
    return (bits[code / 64] >> (code % 64)) & 1U;
  }
};

GroundSet::GroundSet(WindowPtr window, std::shared_ptr<const Impl> impl, std::string label)
    : window_(std::move(window)), impl_(std::move(impl)), label_(std::move(label)) {}

GroundSet GroundSet::explicit_set(WindowPtr window, std::vector<Element> members, std::string label) {
  auto impl = std::make_shared<Impl>();
  impl->window = window.get();
  impl->size = window->size();
  impl->bits.assign((window->size() + 63) / 64, 0);
  for (const auto e : members) {
    if (!window->contains(e)) {
      throw Error(ErrorCode::kElementOutOfWindow, "set member code " + std::to_string(e.code) + " outside window");
    }
    impl->bits[e.code / 64] |= std::uint64_t{1} << (e.code % 64);
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  impl->members = std::move(members);
  return GroundSet(std::move(window), std::move(impl), std::move(label));
}

GroundSet GroundSet::from_values(WindowPtr window, std::span<const std::int64_t> values, std::string label) {
  std::vector<Element> members;
  members.reserve(values.size());
  for (auto v : values) {
    const auto e = window->from_value(v);
    if (!e) throw Error(ErrorCode::kElementOutOfWindow, std::to_string(v) + " is outside the window");
    members.push_back(*e);
  }
  return explicit_set(std::move(window), std::move(members), std::move(label));
}

GroundSet GroundSet::from_predicate(WindowPtr window, Predicate predicate, std::string label) {
  if (!window->is_numeric() && predicate.kind() != Predicate::Kind::kAll) {
    throw Error(ErrorCode::kWrongCarrier, "numeric predicates need a numeric window");
  }
  auto impl = std::make_shared<Impl>();
  impl->window = window.get();
  impl->size = window->size();
  impl->predicate = std::move(predicate);
  impl->bits.assign((window->size() + 63) / 64, 0);
  impl->chunks = (window->size() + kChunkBits - 1) / kChunkBits;
  impl->chunk_once = std::make_unique<std::once_flag[]>(impl->chunks);
  return GroundSet(std::move(window), std::move(impl), std::move(label));
}

bool GroundSet::is_explicit() const noexcept { return !impl_->predicate.has_value(); }

const Predicate* GroundSet::predicate() const noexcept {
  return impl_->predicate ? &*impl_->predicate : nullptr;
}

bool GroundSet::contains(Element e) const {
  if (!window_->contains(e)) {
    throw Error(ErrorCode::kElementOutOfWindow,
                "membership query for code " + std::to_string(e.code) + " outside window bound");
  }
  return impl_->test(e.code);
}

bool GroundSet::contains_value(std::int64_t value) const {
  const auto e = window_->from_value(value);
  if (!e) {
    throw Error(ErrorCode::kElementOutOfWindow, "membership query for " + std::to_string(value) + " outside window");
  }
  return impl_->test(e->code);
}

std::vector<Element> GroundSet::elements(std::size_t cap) const {
  if (is_explicit()) {
    const std::size_t n = std::min(cap, impl_->members.size());
    return {impl_->members.begin(), impl_->members.begin() + static_cast<std::ptrdiff_t>(n)};
  }
  std::vector<Element> out;
  for (std::uint64_t code = 0; code < window_->size() && out.size() < cap; ++code) {
    if (impl_->test(code)) out.push_back(Element{code});
  }
  return out;
}

std::vector<Element> GroundSet::elements() const { return elements(window_->size()); }

std::vector<std::int64_t> GroundSet::values() const {
  std::vector<std::int64_t> out;
  for (const auto e : elements()) out.push_back(window_->value(e));
  return out;
}

std::size_t GroundSet::count() const {
  if (is_explicit()) return impl_->members.size();
  std::size_t total = 0;
  for (std::uint64_t chunk = 0; chunk < impl_->chunks; ++chunk) {
    std::call_once(impl_->chunk_once[chunk], [&] { impl_->fill_chunk(chunk); });
  }
  for (auto w : impl_->bits) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

}  // namespace finembed
