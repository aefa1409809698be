#include "qlmass/mass.hpp"

#include <cmath>

namespace qlmass {

namespace {

void check_fields(const Vec& a, const Vec& b, const Vec& ae,
                  const ThetaGrid& grid) {
  const int n = grid.size();
  require(a.size() == n && b.size() == n && ae.size() == n,
          ErrorKind::GridMismatch, "fields do not share the grid");
  require((ae.array() > 0.0).all(), ErrorKind::InvalidParameter,
          "area element must be positive");
}

}  // namespace

MassReport brown_york(const Vec& H0, const Vec& H, const Vec& area_element,
                      const ThetaGrid& grid) {
  check_fields(H0, H, area_element, grid);
  MassReport rep;
  rep.H0_integral = 2.0 * M_PI * grid.integrate((H0.array() * area_element.array()).matrix());
  rep.H_integral = 2.0 * M_PI * grid.integrate((H.array() * area_element.array()).matrix());
  rep.area = 2.0 * M_PI * grid.integrate(area_element);
  rep.m_by = (rep.H0_integral - rep.H_integral) / (8.0 * M_PI);
  rep.method = "embedding";
  rep.error_estimate =
      1e-14 * rep.area * (H0.cwiseAbs().maxCoeff() + H.cwiseAbs().maxCoeff());
  return rep;
}

MassReport liu_yau(const Vec& H0, const Vec& Hvec_norm, const Vec& area_element,
                   const ThetaGrid& grid) {
  check_fields(H0, Hvec_norm, area_element, grid);
  require((Hvec_norm.array() > 0.0).all(), ErrorKind::NotSpacelike,
          "mean curvature vector must be spacelike (|H| > 0) everywhere");
  MassReport rep;
  rep.H0_integral =
      2.0 * M_PI * grid.integrate((H0.array() * area_element.array()).matrix());
  rep.H_integral = 2.0 * M_PI *
                   grid.integrate((Hvec_norm.array() * area_element.array()).matrix());
  rep.area = 2.0 * M_PI * grid.integrate(area_element);
  rep.m_ly = (rep.H0_integral - rep.H_integral) / (8.0 * M_PI);
  rep.method = "embedding";
  rep.error_estimate = 1e-14 * rep.area *
                       (H0.cwiseAbs().maxCoeff() + Hvec_norm.cwiseAbs().maxCoeff());
  return rep;
}

double m_by_sphere(const WarpedMetric3& g, double r) {
  g.require_in_domain(r);
  return g.h(r) * (1.0 - g.hof(r));
}

MassReport brown_york_sphere(const WarpedMetric3& g, double r) {
  g.require_in_domain(r);
  MassReport rep;
  const double h = g.h(r);
  const double H = 2.0 * g.hof(r) / h;
  rep.area = 4.0 * M_PI * h * h;
  rep.H0_integral = (2.0 / h) * rep.area;
  rep.H_integral = H * rep.area;
  rep.m_by = (rep.H0_integral - rep.H_integral) / (8.0 * M_PI);
  rep.method = "closed-form";
  return rep;
}

double phi_pointwise(const WarpedMetric3& g, double r) {
  g.require_in_domain(r);
  const double h = g.h(r);
  const double d = (1.0 - g.hof(r)) / h;  // 1/h - h'/(f h)
  return -2.0 * d * d;
}

double evolution_rhs(const WarpedMetric3& g, double r) {
  g.require_in_domain(r);
  const double h = g.h(r), f = g.f(r);
  return 0.25 * h * h * f * (phi_pointwise(g, r) + scalar_curvature(g, r));
}

double m_by_derivative_fd(const WarpedMetric3& g, double r, double step_frac) {
  const double d = step_frac * r;
  auto centered = [&](double step) {
    return (m_by_sphere(g, r + step) - m_by_sphere(g, r - step)) / (2.0 * step);
  };
  const double d1 = centered(d), d2 = centered(0.5 * d);
  return (4.0 * d2 - d1) / 3.0;
}

FoliationScan foliation_scan(const WarpedMetric3& g, double r_lo, double r_hi,
                             int n_samples) {
  require(n_samples >= 2, ErrorKind::InvalidParameter, "need n_samples >= 2");
  require(r_lo < r_hi, ErrorKind::InvalidParameter, "need r_lo < r_hi");
  g.require_in_domain(r_lo);
  g.require_in_domain(r_hi);

  FoliationScan scan;
  scan.r.resize(n_samples);
  scan.m_by.resize(n_samples);
  scan.Phi.resize(n_samples);
  scan.dm_dr_formula.resize(n_samples);
  scan.dm_dr_fd.resize(n_samples);
  scan.monotone_nonincreasing = true;
  for (int i = 0; i < n_samples; ++i) {
    const double r = r_lo + (r_hi - r_lo) * i / (n_samples - 1);
    scan.r[i] = r;
    scan.m_by[i] = m_by_sphere(g, r);
    scan.Phi[i] = phi_pointwise(g, r);
    scan.dm_dr_formula[i] = evolution_rhs(g, r);
    scan.dm_dr_fd[i] = m_by_derivative_fd(g, r);
    if (scan.dm_dr_formula[i] > 0.0) scan.monotone_nonincreasing = false;
  }

  // Shell volume integrals with the co-area element dV = 4 pi f h^2 dr.
  auto quad = RadialGrid::gauss(r_lo, r_hi, std::max(64, 2 * n_samples));
  Vec iR(quad.size()), iP(quad.size());
  for (int i = 0; i < quad.size(); ++i) {
    const double r = quad.nodes()[i];
    const double vol = 4.0 * M_PI * g.f(r) * g.h(r) * g.h(r);
    iR[i] = scalar_curvature(g, r) * vol;
    iP[i] = phi_pointwise(g, r) * vol;
  }
  scan.R_volume_integral = integrate_radial(iR, quad).total;
  scan.Phi_volume_integral = integrate_radial(iP, quad).total;
  return scan;
}

AdmDecomposition adm_decompose(const WarpedMetric3& g, double r0, double r_max) {
  require(g.asymptotically_flat, ErrorKind::UnsupportedMetric,
          "ADM decomposition needs an asymptotically flat constructor");
  require(r0 < r_max, ErrorKind::InvalidParameter, "need r0 < r_max");
  g.require_in_domain(r0);
  g.require_in_domain(r_max);

  AdmDecomposition dec;
  dec.m_by_inner = m_by_sphere(g, r0);

  auto quad = RadialGrid::log_gauss(r0, r_max, 256);
  Vec iR(quad.size()), iP(quad.size());
  for (int i = 0; i < quad.size(); ++i) {
    const double r = quad.nodes()[i];
    const double vol = 4.0 * M_PI * g.f(r) * g.h(r) * g.h(r);
    iR[i] = scalar_curvature(g, r) * vol;
    iP[i] = phi_pointwise(g, r) * vol;
  }
  const double c16 = 1.0 / (16.0 * M_PI);
  dec.R_integral = c16 * integrate_radial(iR, quad).total;
  dec.Phi_integral = c16 * integrate_radial(iP, quad).total;

  // Power-law tails fitted on the last decade; exponent must stay integrable.
  auto tail_of = [&](const Vec& samples, double* exponent) {
    auto fit = fit_power_law_tail(samples, quad);
    if (fit.negligible) return 0.0;
    require(fit.p <= -2.0 + 1e-6, ErrorKind::NumericalDomain,
            "fitted tail exponent " + std::to_string(fit.p) +
                " is not integrable");
    if (exponent) *exponent = fit.p;
    return c16 * (-fit.c * std::pow(r_max, fit.p + 1.0) / (fit.p + 1.0));
  };
  dec.Phi_tail = tail_of(iP, &dec.Phi_tail_exponent);
  dec.R_tail = tail_of(iR, nullptr);

  dec.total = dec.m_by_inner + dec.R_integral + dec.Phi_integral + dec.R_tail +
              dec.Phi_tail;
  dec.reference =
      g.known_adm_mass ? *g.known_adm_mass : m_by_sphere(g, r_max);
  dec.defect = dec.total - dec.reference;
  return dec;
}

SmallBallScan small_ball_scan(const WarpedMetric3& g,
                              const std::vector<double>& r_values) {
  require(g.smooth_center, ErrorKind::UnsupportedMetric,
          "small-ball scan needs a constructor smooth at r = 0");
  require(!r_values.empty(), ErrorKind::InvalidParameter, "no radii given");
  SmallBallScan scan;
  const int n = static_cast<int>(r_values.size());
  scan.r.resize(n);
  scan.m_by.resize(n);
  scan.magnitude_decreasing = true;
  for (int i = 0; i < n; ++i) {
    require(r_values[i] > 0.0, ErrorKind::InvalidParameter,
            "radii must be positive");
    if (i > 0)
      require(r_values[i] < r_values[i - 1], ErrorKind::InvalidParameter,
              "radii must decrease");
    scan.r[i] = r_values[i];
    scan.m_by[i] = m_by_sphere(g, r_values[i]);
    if (i > 0 && std::abs(scan.m_by[i]) > std::abs(scan.m_by[i - 1]) + 1e-15)
      scan.magnitude_decreasing = false;
  }
  return scan;
}

}  // namespace qlmass
