#pragma once

#include <cstddef>
#include <cstdint>

#include "rrg/smm_search.hpp"

namespace rrg {

/// Sample mean with its standard error sample_std / sqrt(samples).
struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;

  static McEstimate from_sums(double sum, double sum_sq, std::uint64_t samples, std::uint64_t seed);

  /// |mean - expected| <= sigmas * std_error, with a floor for zero-variance runs.
  bool agrees_with(double expected, double sigmas = 3.0) const;
};

/// Brute-force maximization of f over a uniform grid of n_points on [0, alpha].
LocalMax grid_argmax_f(int d, double alpha, std::size_t n_points);

struct BroadcastEstimates {
  McEstimate root_one;        // root labelled 1; expect alpha
  McEstimate zero_zero_edge;  // root and its first child both 0; expect 1 - 2 alpha
  McEstimate full_zero;
  McEstimate isolated;
};

/// Samples the Markovian independent set on the radius-2 ball of the
/// d-regular tree by broadcasting from the root. Being full-zero or isolated
/// full-zero depends only on that ball, so the truncation is exact.
BroadcastEstimates mc_broadcast_full_zero(int d, double alpha, std::uint64_t samples,
                                          std::uint64_t seed, unsigned jobs = 1);

struct GwComponentEstimate {
  McEstimate size;       // vertices in the root's full-zero component
  McEstimate truncated;  // fraction of runs stopped at max_size
};

inline constexpr std::uint64_t kDefaultComponentCap = 1'000'000;

/// Explores the full-zero component of a full-zero root: the root has d
/// neighbours and every later vertex d - 1 new ones, each full-zero with
/// probability p^{d-1}.
GwComponentEstimate mc_gw_component(int d, double alpha, std::uint64_t samples,
                                    std::uint64_t max_size, std::uint64_t seed, unsigned jobs = 1);

/// Expected component size 1 + d q / (1 - (d-1) q), q = p^{d-1}; infinite when
/// the process is not subcritical.
double gw_expected_component_size(int d, double alpha);

/// |analytic - central difference| / (1 + |analytic|) for df/dbeta.
double fd_derivative_check(int d, double alpha, double beta, double step);

}  // namespace rrg
