#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "loopforge/parallel.hpp"

namespace loopforge {

struct VerifyOptions {
  std::uint64_t seed = 20240917;
  std::size_t workers = worker_count();
  /// Criterion numbers to run (1..10); empty runs all of them.
  std::vector<int> only;
  std::size_t random_cases = 200;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::size_t cases = 0;
  std::size_t mismatches = 0;
  /// The first few mismatches in full, followed by other observations.
  std::vector<std::string> notes;

  bool passed() const noexcept { return mismatches == 0 && cases > 0; }
};

/// Runs the theorem suites in order. `progress` (if set) is called with each
/// result as soon as it is available.
std::vector<CriterionResult> run_verification(VerifyOptions const& options,
                                              std::function<void(CriterionResult const&)> const& progress = {});

CriterionResult verify_criterion(int id, VerifyOptions const& options);

/// "[PASS] 1 nuclearity gate: 612 cases, 0 mismatches", then notes indented.
std::string format_result(CriterionResult const& result);

}  // namespace loopforge
