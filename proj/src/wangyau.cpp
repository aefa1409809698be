#include "qlmass/wangyau.hpp"

#include <cmath>

namespace qlmass {

MetricFamily MetricFamily::dilation(ThetaGridPtr grid) {
  MetricFamily fam;
  fam.name = "dilation";
  fam.sigma = [grid](double t) {
    return AxisymMetric2::round(1.0 + t, grid);
  };
  fam.dsigma = [grid](double t) {
    return AxisymTensor2::round_multiple(2.0 * (1.0 + t), grid);
  };
  return fam;
}

MetricFamily MetricFamily::spheroid_stretch(ThetaGridPtr grid) {
  MetricFamily fam;
  fam.name = "spheroid_stretch";
  fam.sigma = [grid](double t) {
    return AxisymMetric2::spheroid(1.0, 1.0 + t, grid);
  };
  fam.dsigma = [grid](double t) {
    AxisymTensor2 h = AxisymTensor2::zero(grid);
    h.tt = (2.0 * (1.0 + t) * (1.0 - grid->x().array().square())).matrix();
    return h;
  };
  return fam;
}

MetricFamily MetricFamily::conformal_p2(ThetaGridPtr grid) {
  auto p2 = [grid]() {
    Vec v(grid->size());
    for (int i = 0; i < grid->size(); ++i) v[i] = legendre::p(2, grid->x()[i]);
    return v;
  }();
  MetricFamily fam;
  fam.name = "conformal_p2";
  fam.sigma = [grid, p2](double t) {
    Vec F = (1.0 + t * p2.array()).matrix();
    return AxisymMetric2::conformal_round(F, grid);
  };
  fam.dsigma = [grid, p2](double t) {
    Vec F = (1.0 + t * p2.array()).matrix();
    AxisymTensor2 h = AxisymTensor2::zero(grid);
    h.tt = (2.0 * F.array() * p2.array()).matrix();
    h.pp = (h.tt.array() * (1.0 - grid->x().array().square())).matrix();
    return h;
  };
  return fam;
}

MetricFamily MetricFamily::by_name(const std::string& name, ThetaGridPtr grid) {
  if (name == "dilation") return dilation(grid);
  if (name == "spheroid") return spheroid_stretch(grid);
  if (name == "conformal_p2") return conformal_p2(grid);
  fail(ErrorKind::InvalidParameter, "unknown metric family: " + name);
}

double total_mean_curvature(const AxisymMetric2& sigma) {
  auto emb = embed_axisym(sigma);
  const ThetaGrid& g = *sigma.grid;
  Vec ae = (sigma.A.array() * sigma.B.array()).sqrt() /
           g.sin_theta().array();
  return 2.0 * M_PI * g.integrate((emb.H0.array() * ae.array()).matrix());
}

WangYauCheck wangyau_derivative_check(const MetricFamily& family, double t0,
                                      double step) {
  require(step > 0.0, ErrorKind::InvalidParameter, "step must be positive");

  auto I = [&](double t) { return total_mean_curvature(family.sigma(t)); };
  auto centered = [&](double d) { return (I(t0 + d) - I(t0 - d)) / (2.0 * d); };
  const double d1 = centered(step), d2 = centered(0.5 * step);

  WangYauCheck out;
  out.lhs_fd = (4.0 * d2 - d1) / 3.0;

  // Right side at t0 from the embedding and the analytic metric velocity.
  AxisymMetric2 sig = family.sigma(t0);
  AxisymTensor2 h = family.dsigma(t0);
  auto emb = embed_axisym(sig);
  const ThetaGrid& g = *sig.grid;
  Vec integrand(g.size());
  for (int i = 0; i < g.size(); ++i) {
    const double trh = h.tt[i] / sig.A[i] + h.pp[i] / sig.B[i];
    const double a0h =
        emb.kappa1[i] * h.tt[i] / sig.A[i] + emb.kappa2[i] * h.pp[i] / sig.B[i];
    const double ae = std::sqrt(sig.A[i] * sig.B[i]) / g.sin_theta()[i];
    integrand[i] = 0.5 * (emb.H0[i] * trh - a0h) * ae;
  }
  out.rhs = 2.0 * M_PI * g.integrate(integrand);
  out.rel_diff = std::abs(out.lhs_fd - out.rhs) /
                 std::max({std::abs(out.lhs_fd), std::abs(out.rhs), 1e-300});
  return out;
}

}  // namespace qlmass
