#pragma once

// Seeded suites comparing the library against the brute-force oracles.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace idealforge::oracle {

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t checks = 0;
  std::size_t mismatches = 0;
  std::vector<std::string> failures;  // first few, human readable

  [[nodiscard]] bool ok() const { return mismatches == 0; }
};

const std::vector<std::string>& suite_names();

/// Throws PreconditionError for an unknown suite name.
SuiteReport run_suite(const std::string& name, std::size_t trials, std::uint64_t seed);

}  // namespace idealforge::oracle
