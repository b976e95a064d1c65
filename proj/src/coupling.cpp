#include "rrg/coupling.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "rrg/entropy.hpp"
#include "rrg/errors.hpp"

namespace rrg {
namespace {

void check_alpha_beta(double alpha, double beta) {
  if (!(alpha > 0.0 && alpha < 0.5)) {
    throw DomainError(fmt::format("coupling density {:.17g} outside (0, 1/2)", alpha));
  }
  if (!(beta >= -kClampSlack && beta <= alpha + kClampSlack)) {
    throw DomainError(fmt::format("beta {:.17g} outside [0, alpha={:.17g}]", beta, alpha));
  }
}

}  // namespace

double gamma_star(double alpha, double beta) {
  check_alpha_beta(alpha, beta);
  const double gap = std::max(alpha - beta, 0.0);
  const double r = 0.5 - alpha;
  // (alpha - 1/2) + sqrt(r^2 + gap^2) rationalized
  const double g = gap * gap / (std::hypot(r, gap) + r);
  return std::clamp(g, 0.0, gap);
}

CouplingPoint coupling_cells(double alpha, double beta, double gamma) {
  check_alpha_beta(alpha, beta);
  CouplingPoint c;
  c.alpha = alpha;
  c.beta = beta;
  c.gamma = gamma;
  c.v11 = beta;
  c.v10 = alpha - beta;
  c.v00 = 1.0 - 2.0 * alpha + beta;
  c.p0011 = beta;
  c.p0110 = gamma;
  c.p0100 = alpha - beta - gamma;
  c.p0000 = 1.0 - 4.0 * alpha + 2.0 * beta + 2.0 * gamma;
  for (double cell : {c.v11, c.v10, c.v00, c.p0011, c.p0110, c.p0100, c.p0000}) {
    if (cell < -kClampSlack) {
      throw InfeasiblePoint(fmt::format(
          "infeasible coupling (alpha={:.17g}, beta={:.17g}, gamma={:.17g}): cell {:.3g}",
          alpha, beta, gamma, cell));
    }
  }
  return c;
}

double coupling_edge_entropy(const CouplingPoint& c) {
  return 2.0 * entropy_term(c.p0011) + 2.0 * entropy_term(c.p0110) +
         4.0 * entropy_term(c.p0100) +
         entropy_term_complement(4.0 * c.alpha - 2.0 * c.beta - 2.0 * c.gamma);
}

double coupling_vertex_entropy(const CouplingPoint& c) {
  return entropy_term(c.v11) + 2.0 * entropy_term(c.v10) +
         entropy_term_complement(2.0 * c.alpha - c.beta);
}

double coupling_rate(int d, const CouplingPoint& c) {
  return 0.5 * d * coupling_edge_entropy(c) - (d - 1.0) * coupling_vertex_entropy(c);
}

double f_value(int d, double alpha, double beta) {
  if (d < kMinDegree) throw DomainError(fmt::format("degree {} below {}", d, kMinDegree));
  return coupling_rate(d, coupling_cells(alpha, beta, gamma_star(alpha, beta)));
}

double f_derivative(int d, double alpha, double beta) {
  if (d < kMinDegree) throw DomainError(fmt::format("degree {} below {}", d, kMinDegree));
  check_alpha_beta(alpha, beta);
  if (!(beta > 0.0 && beta < alpha)) {
    throw DomainError(fmt::format("f_derivative needs interior beta, got {:.17g}", beta));
  }
  const double gamma = gamma_star(alpha, beta);
  const double gap = alpha - beta;
  const double side = gap - gamma;
  const double corner = 1.0 - 4.0 * alpha + 2.0 * beta + 2.0 * gamma;
  if (!(side > 0.0 && corner > 0.0)) {
    throw NumericalFailure(fmt::format(
        "f_derivative: degenerate cells at alpha={:.17g}, beta={:.17g}", alpha, beta));
  }
  // corner = 1 - (4a - 2b - 2g); log1p keeps precision when alpha is tiny
  const double edge = -2.0 * std::log(beta) + 4.0 * std::log(side) -
                      2.0 * std::log1p(-(4.0 * alpha - 2.0 * beta - 2.0 * gamma));
  const double vertex = -std::log(beta) + 2.0 * std::log(gap) - std::log1p(-(2.0 * alpha - beta));
  return 0.5 * d * edge - (d - 1.0) * vertex;
}

}  // namespace rrg
