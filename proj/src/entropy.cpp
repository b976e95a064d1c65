#include "rrg/entropy.hpp"

#include <cmath>

#include <fmt/format.h>

#include "rrg/errors.hpp"

namespace rrg {

double entropy_term(double x) {
  if (!(x >= -kClampSlack && x <= 1.0 + kClampSlack)) {
    throw DomainError(fmt::format("entropy_term: argument {:.17g} outside [0,1]", x));
  }
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 0.0;
  return -x * std::log(x);
}

double entropy_term_complement(double x) {
  if (!(x >= -kClampSlack && x <= 1.0 + kClampSlack)) {
    throw DomainError(fmt::format("entropy_term_complement: argument {:.17g} outside [0,1]", x));
  }
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -(1.0 - x) * std::log1p(-x);
}

EdgeDistribution EdgeDistribution::independent_set(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 0.5)) {
    throw DomainError(fmt::format("independent-set density {:.17g} outside [0,1/2]", alpha));
  }
  return {1.0 - 2.0 * alpha, alpha, alpha, 0.0};
}

void EdgeDistribution::validate() const {
  for (double v : {p00, p01, p10, p11}) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw DomainError(fmt::format("edge distribution cell {:.17g} outside [0,1]", v));
    }
  }
  if (p01 != p10) {
    throw DomainError("edge distribution is not exchangeable (p01 != p10)");
  }
  if (std::abs(p00 + p01 + p10 + p11 - 1.0) > 1e-12) {
    throw DomainError("edge distribution does not sum to 1");
  }
}

double edge_entropy(const EdgeDistribution& pi) {
  pi.validate();
  return entropy_term(pi.p00) + entropy_term(pi.p01) + entropy_term(pi.p10) +
         entropy_term(pi.p11);
}

double vertex_entropy(double alpha) {
  if (!(alpha >= -kClampSlack && alpha <= 0.5 + kClampSlack)) {
    throw DomainError(fmt::format("vertex_entropy: density {:.17g} outside [0,1/2]", alpha));
  }
  return entropy_term(alpha) + entropy_term_complement(alpha);
}

RateParams RateParams::make(int d, double alpha) {
  if (d < kMinDegree || d > kMaxDegree) {
    throw DomainError(fmt::format("degree {} outside [{}, {}]", d, kMinDegree, kMaxDegree));
  }
  if (!(alpha > 0.0 && alpha < 0.5)) {
    throw DomainError(fmt::format("density {:.17g} outside (0, 1/2)", alpha));
  }
  return {d, alpha};
}

double sigma_rate(const RateParams& params) {
  const auto [d, alpha] = RateParams::make(params.d, params.alpha);
  const double edge = 2.0 * entropy_term(alpha) + entropy_term_complement(2.0 * alpha);
  return 0.5 * d * edge - (d - 1.0) * vertex_entropy(alpha);
}

}  // namespace rrg
