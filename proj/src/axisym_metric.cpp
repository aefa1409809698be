#include "qlmass/axisym_metric.hpp"

#include <cmath>

namespace qlmass {

AxisymMetric2 AxisymMetric2::round(double c, ThetaGridPtr grid) {
  require(c > 0.0, ErrorKind::InvalidParameter, "round radius must be positive");
  AxisymMetric2 s;
  s.grid = std::move(grid);
  const int n = s.grid->size();
  s.A = Vec::Constant(n, c * c);
  s.B = (c * c * (1.0 - s.grid->x().array().square())).matrix();
  s.provenance = "round";
  s.conformal_factor = Vec::Constant(n, c);
  return s;
}

AxisymMetric2 AxisymMetric2::spheroid(double a, double b, ThetaGridPtr grid) {
  require(a > 0.0 && b > 0.0, ErrorKind::InvalidParameter,
          "spheroid semi-axes must be positive");
  AxisymMetric2 s;
  s.grid = std::move(grid);
  const int n = s.grid->size();
  s.A.resize(n);
  s.B.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = s.grid->x()[i];
    double s2 = (1.0 - x) * (1.0 + x);
    s.A[i] = a * a * x * x + b * b * s2;
    s.B[i] = a * a * s2;
  }
  s.provenance = "spheroid";
  return s;
}

AxisymMetric2 AxisymMetric2::conformal_round(const Vec& F, ThetaGridPtr grid) {
  require(F.size() == grid->size(), ErrorKind::InvalidParameter,
          "conformal factor length does not match grid");
  require((F.array() > 0.0).all(), ErrorKind::InvalidParameter,
          "conformal factor must be positive");
  AxisymMetric2 s;
  s.grid = std::move(grid);
  s.A = F.array().square().matrix();
  s.B = (s.A.array() * (1.0 - s.grid->x().array().square())).matrix();
  s.provenance = "conformal_round";
  s.conformal_factor = F;
  return s;
}

AxisymMetric2 AxisymMetric2::from_coefficients(Vec A, Vec B, ThetaGridPtr grid,
                                               std::string provenance) {
  require(A.size() == grid->size() && B.size() == grid->size(),
          ErrorKind::InvalidParameter, "coefficient length does not match grid");
  AxisymMetric2 s;
  s.grid = std::move(grid);
  s.A = std::move(A);
  s.B = std::move(B);
  s.provenance = std::move(provenance);
  return s;
}

void AxisymMetric2::validate(double pole_tol) const {
  require(grid != nullptr, ErrorKind::InvalidParameter, "metric has no grid");
  require(A.size() == grid->size() && B.size() == grid->size(),
          ErrorKind::InvalidParameter, "coefficient length does not match grid");
  require((A.array() > 0.0).all(), ErrorKind::InvalidParameter,
          "A must be positive everywhere");
  require((B.array() > 0.0).all(), ErrorKind::InvalidParameter,
          "B must be positive on the open interval");
  // Pole regularity: B/(A sin^2) -> 1 at both poles.
  Vec ratio =
      (B.array() / (A.array() * (1.0 - grid->x().array().square()))).matrix();
  for (bool north : {true, false}) {
    double v = grid->pole_value(ratio, north);
    require(std::abs(v - 1.0) <= pole_tol, ErrorKind::InvalidParameter,
            "metric is not smooth at a pole: B/(A sin^2) -> " +
                std::to_string(v));
  }
}

Vec intrinsic_gauss_curvature(const AxisymMetric2& sigma) {
  sigma.validate();
  const ThetaGrid& g = *sigma.grid;
  const int n = g.size();

  if (sigma.conformal_factor) {
    // K = (1 - lap_round log F) / F^2.
    const Vec& F = *sigma.conformal_factor;
    Vec logF = F.array().log().matrix();
    Vec lap = g.laplace_round(logF);
    Vec K = ((1.0 - lap.array()) / F.array().square()).matrix();
    require(K.allFinite(), ErrorKind::NumericalDomain,
            "non-finite curvature sample");
    return K;
  }

  // K = -(B'/sqrt(AB))' / (2 sqrt(AB)), all derivatives in theta. Both B and
  // the intermediate ratio are smooth functions of cos(theta), so collocation
  // differentiation applies.
  Vec Bp = g.differentiate(sigma.B, 1);
  Vec sqrtAB = (sigma.A.array() * sigma.B.array()).sqrt().matrix();
  Vec G = (Bp.array() / sqrtAB.array()).matrix();
  Vec Gp = g.differentiate(G, 1);
  Vec K = (-Gp.array() / (2.0 * sqrtAB.array())).matrix();
  require(K.allFinite(), ErrorKind::NumericalDomain,
          "non-finite curvature sample");
  return K;
}

}  // namespace qlmass
