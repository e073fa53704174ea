#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "finembed/io.hpp"

namespace finembed {

enum class Budget { kTiny, kSmall, kMedium, kLarge };
std::string_view budget_name(Budget budget);
/// Throws kInvalidArgument for unknown names.
Budget parse_budget(std::string_view name);

struct SuiteOutcome {
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  io::json details = io::json::object();
  /// Inputs of the first violation.
  std::optional<io::json> reproducer;
  bool passed() const { return failures == 0; }
};

/// listona, preorder, maxset, density-mono, strong-pr, upward-closed.
const std::vector<std::string>& suite_names();

/// Throws kUnknownSuite.
SuiteOutcome run_suite(std::string_view name, std::uint64_t seed, Budget budget);

struct VerifyRun {
  std::vector<SuiteOutcome> suites;
  bool passed() const;
};

/// `suite` may be "all".
VerifyRun run_verify(std::string_view suite, std::uint64_t seed, Budget budget);

io::json to_json(const SuiteOutcome& outcome);

}  // namespace finembed
