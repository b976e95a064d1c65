#pragma once

#include <cstddef>
#include <vector>

namespace rrg {

struct LocalMax {
  double beta = 0.0;
  double f = 0.0;
};

/// Result of scanning f_{d,alpha} over [0, alpha].
struct MaximaScan {
  std::vector<LocalMax> interior;  // refined interior local maxima, ascending in beta
  LocalMax at_zero;
  LocalMax at_alpha;
};

/// Scan size used by the threshold search: max(2048, 32 ceil(sqrt d)).
std::size_t default_grid_size(int d);

/// Locates every interior local maximum of beta -> f_value(d, alpha, beta)
/// through sign changes of the analytic derivative on a grid that is
/// geometrically refined next to both endpoints, then bisects each bracket.
/// Throws NumericalFailure if a refinement exceeds 200 steps.
MaximaScan local_maxima(int d, double alpha, std::size_t grid_size);

/// Tolerance under which a competing value ties with the independent coupling.
inline constexpr double kTieTolerance = 1e-12;

struct ConditionResult {
  bool holds = false;
  double margin = 0.0;         // f(alpha^2) minus the best competing value
  double f_independent = 0.0;  // f(alpha^2)
  LocalMax best_competitor;    // best maximum or endpoint away from alpha^2
  MaximaScan scan;
};

/// Second-moment condition: f_{d,alpha} attains its maximum at alpha^2.
ConditionResult condition_holds(int d, double alpha);
ConditionResult condition_holds(int d, double alpha, std::size_t grid_size);

struct SmmOutcome {
  int d = 0;
  double alpha_star = 0.0;  // largest density found to pass the condition
  double alpha_fail = 0.0;  // smallest density found to fail it
  std::vector<LocalMax> maxima;
  double margin_at_threshold = 0.0;
  int iterations = 0;
  /// Passing slightly below and failing slightly above the threshold.
  bool crossover_verified = false;
};

inline constexpr double kDefaultTolerance = 1e-9;

/// Bisection for the largest alpha satisfying the condition, to width tol.
/// Throws DomainError for d outside [3, 500000] or tol < 1e-12 and
/// NumericalFailure if the lower bracket end does not pass.
SmmOutcome alpha_star(int d, double tol = kDefaultTolerance);

}  // namespace rrg
