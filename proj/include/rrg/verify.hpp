#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rrg {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 42;
  std::size_t grid_points = 1'000'000;
  unsigned jobs = 1;
  double tol = 1e-9;
};

/// Cross-checks every closed form for one degree against the brute-force,
/// finite-difference and Monte Carlo oracles.
std::vector<CheckResult> verify_degree(int d, const VerifyOptions& options);

}  // namespace rrg
