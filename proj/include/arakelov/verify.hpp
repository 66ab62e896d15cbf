#pragma once

// Programmatic reproduction of the headline numbers, grouped in suites.
// Output depends only on the suite and the seed.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace arakelov {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

/// heights, measures, bounds, fekete.
const std::vector<std::string>& suite_names();

/// One suite, or every suite for "all". Throws DomainError on an unknown
/// suite. A check that throws is reported as failed with the message.
std::vector<CheckResult> run_verify(std::string_view suite, std::uint64_t seed);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace arakelov
