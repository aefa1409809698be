#pragma once

#include <vector>

#include "qlmass/axisym_metric.hpp"

namespace qlmass {

// Axisymmetric symmetric (0,2) tensor on S^2 in coordinate components:
//   h = tt dtheta^2 + 2 tp dtheta dphi + pp dphi^2.
struct AxisymTensor2 {
  ThetaGridPtr grid;
  Vec tt, pp, tp;

  static AxisymTensor2 zero(ThetaGridPtr grid);
  // c times the unit round metric.
  static AxisymTensor2 round_multiple(double c, ThetaGridPtr grid);
  // Lie derivative of the round metric along the azimuthal field w(theta) d_phi
  // (a differential rotation): only the theta-phi component survives.
  static AxisymTensor2 lie_rotational(const Vec& w, ThetaGridPtr grid);
};

// Solution Y of the linearized isometric-embedding equation 2 dX.dY = h on
// the unit round background X = n. Y is expanded in the axisymmetric frame
//   Y = a(theta) n + b(theta) th_hat + c(theta) ph_hat,
// with a in Legendre modes P_l and b, c in sin(theta) P_l'(cos theta),
// truncated at degree L = n/2. The rigid-motion kernel (axial translation in
// (a,b), axial rotation in c) is fixed by Y(north pole) = 0 and gamma_1 = 0.
struct LinearizedSolution {
  ThetaGridPtr grid;
  Vec alpha, beta, gamma;  // mode coefficients
  Vec a, b, c;             // frame components at the nodes
  double residual = 0.0;   // max scaled pointwise equation defect
  double pole_norm = 0.0;  // |Y| at the normalization point (north pole)

  // Frame components and theta-derivatives reconstructed from the modes.
  void evaluate(Vec& a_out, Vec& ap, Vec& b_out, Vec& bp, Vec& b_over_sin,
                Vec& c_out, Vec& cp, Vec& c_over_sin) const;
};

LinearizedSolution linearized_embedding_round(const AxisymTensor2& h);

// Order-of-contact test for the path G(t) = X + tY: the induced metric of
// G(t) must match (round + t h) to O(t^2). Returns the log-log slope of the
// defect against t; degenerate data (defect at rounding noise) is an error.
struct QuadraticCloseness {
  double slope = 0.0;
  std::vector<double> t, defect;
};
QuadraticCloseness quadratic_closeness_check(const AxisymTensor2& h,
                                             const std::vector<double>& t_values);

}  // namespace qlmass
