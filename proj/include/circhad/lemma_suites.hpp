#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace circhad {

struct SuiteResult {
  std::string name;
  /// Short description of the identity being exercised.
  std::string anchor;
  std::uint64_t instances = 0;
  bool passed = false;
  /// First failure, empty on success.
  std::string detail;
};

/// Names accepted by run_lemma_suite, in execution order.
const std::vector<std::string>& lemma_suite_names();

/// Runs one invariant suite. Randomized suites draw from a generator seeded
/// with `seed`. Throws std::invalid_argument for an unknown name.
SuiteResult run_lemma_suite(std::string_view name, std::uint64_t seed = 0);

}  // namespace circhad
