#pragma once

#include <optional>
#include <string>

#include "qlmass/theta_grid.hpp"

namespace qlmass {

// Axisymmetric metric sigma = A(theta) dtheta^2 + B(theta) dphi^2 on S^2,
// sampled on a ThetaGrid. Smoothness at the poles requires
// B/(A sin^2) -> 1, which validate() checks by extrapolation to x = +-1.
struct AxisymMetric2 {
  ThetaGridPtr grid;
  Vec A, B;
  std::string provenance;
  // Set when sigma = F^2 (round metric); enables the conformal curvature
  // formula K = (1 - lap log F)/F^2.
  std::optional<Vec> conformal_factor;

  static AxisymMetric2 round(double c, ThetaGridPtr grid);
  static AxisymMetric2 spheroid(double a, double b, ThetaGridPtr grid);
  static AxisymMetric2 conformal_round(const Vec& F, ThetaGridPtr grid);
  static AxisymMetric2 from_coefficients(Vec A, Vec B, ThetaGridPtr grid,
                                         std::string provenance);

  void validate(double pole_tol = 1e-6) const;
};

// Intrinsic Gaussian curvature at the nodes.
Vec intrinsic_gauss_curvature(const AxisymMetric2& sigma);

}  // namespace qlmass
