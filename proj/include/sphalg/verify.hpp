#pragma once

// Randomized and exhaustive verification suites. Every suite is
// deterministic for a given seed: samples are drawn serially, then checked
// (optionally in parallel) and reported in sample order.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sphalg::verify {

inline constexpr std::uint64_t kDefaultSeed = 20250611;

struct Options {
  std::uint64_t seed = kDefaultSeed;
  bool parallel = true;
};

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::vector<std::string> messages;  // first few failures
  double seconds = 0;

  bool passed() const noexcept { return failures == 0 && checks > 0; }
  /// Counts one check; keeps msg when it fails.
  void expect(bool ok, const std::string& msg);
};

using SuiteFn = SuiteResult (*)(const Options&);

struct Suite {
  std::string_view name;
  std::string_view summary;
  SuiteFn run;
  bool acceptance;  // one of the twelve acceptance criteria
};

/// Acceptance suites first, in criterion order, then the property suites.
std::span<const Suite> suites();
const Suite* find_suite(std::string_view name);

/// Runs one suite and fills in its name and elapsed time.
SuiteResult run_suite(const Suite& s, const Options& opts);

}  // namespace sphalg::verify
