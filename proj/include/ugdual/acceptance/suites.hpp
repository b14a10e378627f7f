#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ugdual::acceptance {

struct SuiteResult {
  int id = 0;
  std::string key;
  std::string title;
  std::size_t passed = 0;
  std::size_t total = 0;
  std::vector<std::string> failures;  // first few only
  double seconds = 0;
  double limit_seconds = 0;  // 0 means no limit

  [[nodiscard]] bool within_limit() const { return limit_seconds <= 0 || seconds <= limit_seconds; }
  [[nodiscard]] bool ok() const { return total > 0 && passed == total && within_limit(); }
};

inline constexpr int kSuiteCount = 12;

/// Runs criterion `id` (1..12) with all randomness derived from `seed`.
SuiteResult run_suite(int id, std::uint64_t seed);

/// "ac3", "3" or "all" to suite ids.
std::vector<int> parse_suite_selector(const std::string& text);

/// One line; timing is included only when `with_time` is set so reports can
/// be byte-identical across runs.
std::string format_line(const SuiteResult& r, bool with_time);

}  // namespace ugdual::acceptance
