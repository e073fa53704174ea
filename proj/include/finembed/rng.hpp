#pragma once

#include <cstdint>
#include <random>

namespace finembed {

/// Seeded generator whose draws are identical on every platform.
/// std::uniform_int_distribution is implementation-defined, so bounded
/// draws go through rejection sampling on the raw 64-bit stream instead.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return lo + static_cast<std::int64_t>(engine_());
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t draw = engine_();
    while (draw >= limit) draw = engine_();
    return lo + static_cast<std::int64_t>(draw % span);
  }

  bool coin(std::uint64_t num, std::uint64_t den) {
    return static_cast<std::uint64_t>(uniform(0, static_cast<std::int64_t>(den) - 1)) < num;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace finembed
