#pragma once

namespace rrg {

/// Values within this distance outside [0,1] are clamped instead of rejected.
inline constexpr double kClampSlack = 1e-12;

inline constexpr int kMinDegree = 3;
inline constexpr int kMaxDegree = 500000;

/// h(x) = -x ln x with h(0) = 0. Throws DomainError outside [-slack, 1+slack].
double entropy_term(double x);

/// h(1 - x), evaluated through log1p so small x keeps full precision.
double entropy_term_complement(double x);

/// Exchangeable distribution of the label pair on a directed edge.
struct EdgeDistribution {
  double p00 = 1.0;
  double p01 = 0.0;
  double p10 = 0.0;
  double p11 = 0.0;

  /// Edge marginal of the Markovian independent set of density alpha.
  static EdgeDistribution independent_set(double alpha);

  /// Throws DomainError unless exchangeable, nonnegative and normalized.
  void validate() const;

  double prob_one() const noexcept { return p01 + p11; }
  double prob_zero() const noexcept { return p00 + p01; }
  bool is_independent_set() const noexcept { return p11 == 0.0; }
};

double edge_entropy(const EdgeDistribution& pi);

/// h(alpha) + h(1 - alpha).
double vertex_entropy(double alpha);

/// Degree and density of a Markovian independent set.
struct RateParams {
  int d;
  double alpha;

  /// Validated construction: 3 <= d <= 500000 and 0 < alpha < 1/2.
  static RateParams make(int d, double alpha);
};

/// Exponential growth rate (d/2) H(pi) - (d-1) H(pi_vtx) of the expected
/// number of independent sets with density alpha.
double sigma_rate(const RateParams& params);

}  // namespace rrg
