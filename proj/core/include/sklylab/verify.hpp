#pragma once

// The ten acceptance criteria as reusable checks, shared by the CLI's
// full-verify command and the acceptance test binary.

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace sklylab {

struct CriterionResult {
  int id = 0;
  std::string key;    // short name used by --only
  std::string title;
  bool checks_passed = false;
  double seconds = 0;
  double limit_seconds = 0;  // 0 when no budget applies
  std::string detail;
  nlohmann::json data;

  bool within_budget() const { return limit_seconds <= 0 || seconds <= limit_seconds; }
  bool passed() const { return checks_passed && within_budget(); }
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  int rational_triples = 5;
  int prime_triples = 5;
  std::uint64_t prime = 10007;
  int h4_triples = 10;
  int poisson_samples = 50;
  double h4_tol = 1e-9;
  double automorphism_tol = 1e-8;
};

struct CriterionInfo {
  int id;
  const char* key;
  const char* title;
  double limit_seconds;
};

const std::vector<CriterionInfo>& acceptance_criteria();

/// Runs one criterion by id (1..10). Exceptions from the modules are caught
/// and reported as failures.
CriterionResult run_criterion(int id, const VerifyOptions& opts);

/// Runs the selected criteria (all when `only` is empty) in order. Keys or
/// numeric ids are accepted; throws RangeError for unknown ones.
std::vector<CriterionResult> run_acceptance(const VerifyOptions& opts, const std::set<std::string>& only = {},
                                            const std::function<void(const CriterionResult&)>& on_done = {});

nlohmann::json to_json(const CriterionResult& r, bool with_timing);

}  // namespace sklylab
