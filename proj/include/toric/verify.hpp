/**
 * Invariant suites run by `toric verify`. Each check reports a name, a
 * pass/fail flag and, on failure, the first counterexample found.
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "toric/polytope.hpp"

namespace toric {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  unsigned threads = 0;
  std::size_t viewpoints = 8;  // per classification kind
};

enum class Suite { All, Combinatorics, Classify, Ehrhart, Cohomology };

/// Parses all|combinatorics|classify|ehrhart|cohomology.
Suite parse_suite(const std::string& name);

std::vector<CheckResult> combinatorics_checks(const LatticePolytope& p, const SuiteOptions& options);
std::vector<CheckResult> classify_checks(const LatticePolytope& p, const SuiteOptions& options);
std::vector<CheckResult> ehrhart_checks(const LatticePolytope& p, const SuiteOptions& options);
std::vector<CheckResult> cohomology_checks(const LatticePolytope& p, const SuiteOptions& options);

/// Runs the requested suite. Hand-assembled polytopes whose facet data is
/// inconsistent fail the combinatorics checks; later suites are then skipped
/// because their inputs cannot be trusted.
std::vector<CheckResult> run_suite(const LatticePolytope& p, Suite suite, const SuiteOptions& options);

}  // namespace toric
