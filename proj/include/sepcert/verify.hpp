#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sepcert/types.hpp"

namespace sepcert {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // failure diagnostics, empty on pass
};

/// Runs one property suite.  Known suites: simplex, gap, ppt-appendixA,
/// modulus, detectors, thermal, all.  `samples` scales the Monte Carlo sizes
/// as a percentage of the per-check defaults; pass 0 for the defaults.  When a counterexample state is found and
/// `counterexample_path` is non-empty, the state is written there in the
/// matrix exchange format.
std::vector<CheckResult> run_suite(const std::string& suite, int samples, std::uint64_t seed,
                                   const std::string& counterexample_path = "");

}  // namespace sepcert
