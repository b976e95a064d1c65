#include "rrg/augmentation.hpp"

#include <cmath>

#include <fmt/format.h>

#include "rrg/entropy.hpp"
#include "rrg/errors.hpp"

namespace rrg {
namespace {

void check_density(double alpha) {
  if (!(alpha >= 0.0 && alpha < 0.5)) {
    throw DomainError(fmt::format("density {:.17g} outside [0, 1/2)", alpha));
  }
}

void check_degree(int d) {
  if (d < kMinDegree || d > kMaxDegree) {
    throw DomainError(fmt::format("degree {} outside [{}, {}]", d, kMinDegree, kMaxDegree));
  }
}

// ln p, computed as log1p(-alpha / (1 - alpha)) to keep precision for small alpha
double log_p(double alpha) { return std::log1p(-alpha / (1.0 - alpha)); }

// ln (1 - p^{d-1})^d
double log_no_full_zero_neighbour(int d, double alpha) {
  const double p_pow = std::exp((d - 1.0) * log_p(alpha));
  return d * std::log1p(-p_pow);
}

}  // namespace

double conditional_p(double alpha) {
  check_density(alpha);
  return (1.0 - 2.0 * alpha) / (1.0 - alpha);
}

double full_zero_prob(int d, double alpha) {
  check_degree(d);
  check_density(alpha);
  return (1.0 - alpha) * std::exp(d * log_p(alpha));
}

double isolated_full_zero_prob(int d, double alpha) {
  check_degree(d);
  check_density(alpha);
  return (1.0 - alpha) * std::exp(d * log_p(alpha) + log_no_full_zero_neighbour(d, alpha));
}

double gw_offspring_mean(int d, double alpha) {
  check_degree(d);
  check_density(alpha);
  return (d - 1.0) * std::exp((d - 1.0) * log_p(alpha));
}

double alpha_hat(int d, double alpha) {
  const double mean = gw_offspring_mean(d, alpha);
  if (mean > 1.0) throw GwSupercritical(d, mean);
  const double isolated_share = std::exp(log_no_full_zero_neighbour(d, alpha));
  return alpha + full_zero_prob(d, alpha) * 0.5 * (1.0 + isolated_share);
}

double asymptotic_reference(int d) {
  check_degree(d);
  const double ld = std::log(static_cast<double>(d));
  return 2.0 / d * (ld - std::log(ld) + 1.0 - std::log(2.0));
}

AugmentationReport augment(int d, double alpha) {
  AugmentationReport r;
  r.d = d;
  r.alpha = alpha;
  r.p = conditional_p(alpha);
  r.q_full_zero = full_zero_prob(d, alpha);
  r.q_isolated = isolated_full_zero_prob(d, alpha);
  r.gw_offspring_mean = gw_offspring_mean(d, alpha);
  r.gw_ok = r.gw_offspring_mean <= 1.0;
  r.gw_borderline = r.gw_ok && r.gw_offspring_mean > 1.0 - 1e-9;
  if (r.gw_ok) r.alpha_hat = alpha_hat(d, alpha);
  return r;
}

LowerBound lower_bound(int d, double tol) {
  LowerBound lb{alpha_star(d, tol), {}};
  lb.augmentation = augment(d, lb.search.alpha_star);
  if (!lb.augmentation.gw_ok) throw GwSupercritical(d, lb.augmentation.gw_offspring_mean);
  return lb;
}

}  // namespace rrg
