#include "rrg/smm_search.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "rrg/coupling.hpp"
#include "rrg/entropy.hpp"
#include "rrg/errors.hpp"

namespace rrg {
namespace {

constexpr int kMaxRefineSteps = 200;
constexpr int kEndpointRefinements = 60;

std::vector<double> scan_grid(double alpha, std::size_t n) {
  const double step = alpha / static_cast<double>(n);
  std::vector<double> grid;
  grid.reserve(n + 2 * kEndpointRefinements + 64);

  // Geometric points below the first uniform node, far enough to bracket
  // alpha^2 from the left even when alpha^2 << alpha / n.
  const double floor_beta = std::min(step, alpha * alpha) * 1e-3;
  for (double b = step * 0.5; b > floor_beta; b *= 0.5) grid.push_back(b);

  for (std::size_t i = 1; i < n; ++i) grid.push_back(alpha * static_cast<double>(i) / n);

  for (int k = 1; k <= kEndpointRefinements; ++k) {
    const double gap = step * std::ldexp(1.0, -k);
    if (gap < 1e-15 * alpha) break;
    grid.push_back(alpha - gap);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

LocalMax refine(int d, double alpha, double lo, double hi) {
  const double width_tol = 1e-14 * alpha;
  for (int step = 0; step < kMaxRefineSteps; ++step) {
    const double mid = 0.5 * (lo + hi);
    const double slope = f_derivative(d, alpha, mid);
    if (std::abs(slope) <= 1e-12 || hi - lo <= width_tol) {
      return {mid, f_value(d, alpha, mid)};
    }
    (slope > 0.0 ? lo : hi) = mid;
  }
  throw NumericalFailure(fmt::format(
      "local maximum refinement did not converge (d={}, alpha={:.17g}, bracket [{:.17g}, {:.17g}])",
      d, alpha, lo, hi));
}

bool near_independent(double beta, double alpha) {
  const double a2 = alpha * alpha;
  return std::abs(beta - a2) <= 1e-6 * a2 + 1e-13 * alpha;
}

}  // namespace

std::size_t default_grid_size(int d) {
  const auto root = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(d))));
  return std::max<std::size_t>(2048, 32 * root);
}

MaximaScan local_maxima(int d, double alpha, std::size_t grid_size) {
  RateParams::make(d, alpha);
  if (grid_size < 256) throw DomainError(fmt::format("grid size {} below 256", grid_size));

  MaximaScan scan;
  scan.at_zero = {0.0, f_value(d, alpha, 0.0)};
  scan.at_alpha = {alpha, f_value(d, alpha, alpha)};

  const auto grid = scan_grid(alpha, grid_size);
  double prev_beta = grid.front();
  double prev_slope = f_derivative(d, alpha, prev_beta);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double beta = grid[i];
    const double slope = f_derivative(d, alpha, beta);
    if (prev_slope >= 0.0 && slope < 0.0) {
      scan.interior.push_back(refine(d, alpha, prev_beta, beta));
    }
    prev_beta = beta;
    prev_slope = slope;
  }
  return scan;
}

ConditionResult condition_holds(int d, double alpha) {
  return condition_holds(d, alpha, default_grid_size(d));
}

ConditionResult condition_holds(int d, double alpha, std::size_t grid_size) {
  ConditionResult result;
  result.scan = local_maxima(d, alpha, grid_size);
  result.f_independent = f_value(d, alpha, alpha * alpha);

  result.best_competitor = result.scan.at_zero.f >= result.scan.at_alpha.f ? result.scan.at_zero
                                                                           : result.scan.at_alpha;
  for (const auto& m : result.scan.interior) {
    if (!near_independent(m.beta, alpha) && m.f > result.best_competitor.f) {
      result.best_competitor = m;
    }
  }
  result.margin = result.f_independent - result.best_competitor.f;
  result.holds = result.margin >= -kTieTolerance;
  return result;
}

SmmOutcome alpha_star(int d, double tol) {
  if (d < kMinDegree || d > kMaxDegree) {
    throw DomainError(fmt::format("degree {} outside [{}, {}]", d, kMinDegree, kMaxDegree));
  }
  if (!(tol >= 1e-12)) throw DomainError(fmt::format("tolerance {:.3g} below 1e-12", tol));

  const auto grid = default_grid_size(d);
  const auto passes = [&](double a) { return condition_holds(d, a, grid).holds; };

  constexpr double kCeiling = 0.499;
  double lo = 1.0 / d;
  if (!passes(lo)) {
    throw NumericalFailure(fmt::format("condition fails at the lower bracket alpha=1/{}", d));
  }
  double hi = std::min(kCeiling, 4.0 * std::log(static_cast<double>(d)) / d + 0.2);
  while (passes(hi)) {
    lo = hi;
    if (hi >= kCeiling) break;
    hi = std::min(kCeiling, 0.5 * (hi + kCeiling) + 1e-12);
  }

  SmmOutcome out;
  out.d = d;
  if (lo == hi) {
    // condition holds on the whole searched range
    hi = kCeiling;
  } else {
    while (hi - lo > tol) {
      const double mid = 0.5 * (lo + hi);
      (passes(mid) ? lo : hi) = mid;
      ++out.iterations;
    }
  }
  out.alpha_star = lo;
  out.alpha_fail = hi;

  const auto at_threshold = condition_holds(d, lo, grid);
  out.maxima = at_threshold.scan.interior;
  out.margin_at_threshold = at_threshold.margin;

  const double below = lo - std::min(1e-6, 0.5 * lo);
  const double above = lo + 1e-5;
  out.crossover_verified = passes(below) && (above >= 0.5 || !passes(above));
  return out;
}

}  // namespace rrg
