#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace skewent {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t instances = 0;
  /// Largest observed violation measure (check specific; <= tol means pass).
  double worst = 0.0;
  double tol = 0.0;
  std::string detail;
  double seconds = 0.0;
};

struct SelftestOptions {
  std::uint64_t seed = 20240611;
  std::size_t skew_instances = 200;
  std::size_t rotations = 50;
  std::size_t subsystem_states = 40;
  std::size_t fuzz_states = 1000;
  bool include_tables = true;
};

/// Signature shared by the individual checks so callers can pick a subset.
using Check = std::function<CheckResult(const SelftestOptions&)>;

struct NamedCheck {
  std::string name;
  Check run;
};

/// The invariant suite, in execution order.
std::vector<NamedCheck> selftest_checks();

/// Runs every check; `on_result` (if set) sees each result as soon as it finishes.
std::vector<CheckResult> run_selftest(const SelftestOptions& options,
                                      const std::function<void(const CheckResult&)>& on_result = {});

/// Runs one named check.
CheckResult run_check(const std::string& name, const SelftestOptions& options);

}  // namespace skewent
