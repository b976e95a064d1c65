#pragma once

#include <optional>

#include "rrg/smm_search.hpp"

namespace rrg {

/// P(neighbour is 0 | vertex is 0) = (1 - 2 alpha) / (1 - alpha).
double conditional_p(double alpha);

/// (1 - alpha) p^d.
double full_zero_prob(int d, double alpha);

/// (1 - alpha) p^d (1 - p^{d-1})^d.
double isolated_full_zero_prob(int d, double alpha);

/// Offspring mean (d - 1) p^{d-1} of the full-zero branching process.
double gw_offspring_mean(int d, double alpha);

/// alpha + (1 - alpha) p^d (1 + (1 - p^{d-1})^d) / 2.
/// Throws GwSupercritical when the offspring mean exceeds 1.
double alpha_hat(int d, double alpha);

/// (2/d)(ln d - ln ln d + 1 - ln 2). Comparator only.
double asymptotic_reference(int d);

struct AugmentationReport {
  int d = 0;
  double alpha = 0.0;
  double p = 0.0;
  double q_full_zero = 0.0;
  double q_isolated = 0.0;
  double gw_offspring_mean = 0.0;
  std::optional<double> alpha_hat;  // empty when the branching process is supercritical
  bool gw_ok = false;
  bool gw_borderline = false;  // mean within 1e-9 below 1

  double gw_margin() const noexcept { return 1.0 - gw_offspring_mean; }
};

AugmentationReport augment(int d, double alpha);

struct LowerBound {
  SmmOutcome search;
  AugmentationReport augmentation;

  double alpha() const noexcept { return search.alpha_star; }
  double alpha_hat() const { return augmentation.alpha_hat.value(); }
};

/// Threshold search followed by augmentation. Throws GwSupercritical if the
/// augmentation step is not justified at the threshold density.
LowerBound lower_bound(int d, double tol = kDefaultTolerance);

}  // namespace rrg
