#pragma once

namespace rrg {

/// A coupling of two copies (red and blue) of the independent-set edge
/// marginal of density alpha. Two parameters determine every cell:
/// beta is the probability a vertex is in both sets, gamma the probability
/// of the edge pattern (red 1, blue 0 | red 0, blue 1).
///
/// Edge cells are named p_{ij,kl} with ij the (red, blue) labels at the
/// first endpoint and kl those at the second; cells not listed are forced
/// to zero by independence of each colour.
struct CouplingPoint {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;

  // vertex cells (red, blue)
  double v11 = 0.0;  // beta
  double v10 = 0.0;  // alpha - beta, also v01
  double v00 = 1.0;  // 1 - 2 alpha + beta

  // edge cells
  double p0011 = 0.0;  // p_{00,11} = p_{11,00} = beta
  double p0110 = 0.0;  // p_{01,10} = p_{10,01} = gamma
  double p0100 = 0.0;  // p_{01,00} = p_{00,01} = p_{10,00} = p_{00,10}
  double p0000 = 1.0;  // 1 - 4 alpha + 2 beta + 2 gamma

  /// Mass of the full 16-cell edge table, counting multiplicities.
  double edge_mass() const noexcept { return 2 * p0011 + 2 * p0110 + 4 * p0100 + p0000; }
  double vertex_mass() const noexcept { return v11 + 2 * v10 + v00; }
};

/// Maximizer in gamma of the coupling entropy for fixed (alpha, beta):
/// (alpha - 1/2) + sqrt((alpha - 1/2)^2 + (alpha - beta)^2), evaluated in a
/// cancellation-free form.
double gamma_star(double alpha, double beta);

/// Throws InfeasiblePoint if any cell is below -1e-12.
CouplingPoint coupling_cells(double alpha, double beta, double gamma);

/// H(nu): entropy of the edge table.
double coupling_edge_entropy(const CouplingPoint& point);

/// H(nu_vtx): entropy of the vertex table.
double coupling_vertex_entropy(const CouplingPoint& point);

/// (d/2) H(nu) - (d-1) H(nu_vtx) for an arbitrary feasible coupling.
double coupling_rate(int d, const CouplingPoint& point);

/// max over gamma of the coupling rate, as a function of beta in [0, alpha].
double f_value(int d, double alpha, double beta);

/// Analytic df/dbeta for beta strictly inside (0, alpha). By the envelope
/// theorem gamma is held at gamma_star.
double f_derivative(int d, double alpha, double beta);

}  // namespace rrg
