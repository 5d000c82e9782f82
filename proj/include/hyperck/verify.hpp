#pragma once

// Seeded randomized verification suites. Each suite checks a family of
// identities over a list of settings and reports per-law trial counts and
// failures with full counterexample payloads.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperck/serialize.hpp"

namespace hyperck {

struct LawResult {
  std::string theorem;
  int trials = 0;
  std::vector<Json> failures;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<LawResult> results;  // sorted by theorem name

  bool passed() const;
  Json to_json() const;
};

struct VerifyOptions {
  std::string suite = "all";
  std::optional<std::string> setting;  // restrict to one setting
  std::vector<int> qs;                 // restrict to these q (settings derived from R_{0,5} and octonions)
  int degree = 0;                      // 0: suite default
  int trials = 0;                      // 0: suite default
  std::uint64_t seed = 42;
};

const std::vector<std::string>& suite_names();

// Throws DomainError for an unknown suite or an invalid q selection.
SuiteReport run_suite(const VerifyOptions& options);

}  // namespace hyperck
