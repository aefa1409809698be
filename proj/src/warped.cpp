#include "qlmass/warped.hpp"

#include <cmath>

namespace qlmass {

RadialProfile RadialProfile::constant(double c) {
  return RadialProfile([c](double) { return c; }, [](double) { return 0.0; },
                       [](double) { return 0.0; });
}

RadialProfile RadialProfile::from_samples(const Vec& values,
                                          const RadialGrid& grid) {
  require(values.size() == grid.size(), ErrorKind::InvalidParameter,
          "sample count does not match radial grid");
  // Interpolate in the affine variable covering [r_min, r_max] with a
  // polynomial through the Gauss nodes; derivatives via an auxiliary
  // ThetaGrid is not applicable here, so build barycentric data directly.
  const int n = grid.size();
  auto r = std::make_shared<Vec>(grid.nodes());
  auto bw = std::make_shared<Vec>(n);
  for (int i = 0; i < n; ++i) {
    // lambda_i = 1 / prod (r_i - r_j), rescaled to avoid under/overflow.
    double s = 1.0;
    const double scale = 4.0 / (grid.r_max() - grid.r_min());
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      s *= ((*r)[i] - (*r)[j]) * scale;
    }
    (*bw)[i] = 1.0 / s;
  }
  auto vals = std::make_shared<Vec>(values);

  auto interp = [r, bw, vals](const Vec& f, double x) {
    double num = 0.0, den = 0.0;
    for (int i = 0; i < r->size(); ++i) {
      double d = x - (*r)[i];
      if (d == 0.0) return f[i];
      double t = (*bw)[i] / d;
      num += t * f[i];
      den += t;
    }
    return num / den;
  };

  // Differentiation matrix on the nodes (negative-sum trick).
  Mat D(n, n);
  for (int i = 0; i < n; ++i) {
    double rowsum = 0.0;
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      double d = ((*bw)[j] / (*bw)[i]) / ((*r)[i] - (*r)[j]);
      D(i, j) = d;
      rowsum += d;
    }
    D(i, i) = -rowsum;
  }
  auto d1v = std::make_shared<Vec>(D * values);
  auto d2v = std::make_shared<Vec>(D * (*d1v));

  return RadialProfile(
      [interp, vals](double rr) { return interp(*vals, rr); },
      [interp, d1v](double rr) { return interp(*d1v, rr); },
      [interp, d2v](double rr) { return interp(*d2v, rr); });
}

void WarpedMetric3::require_in_domain(double r) const {
  require(in_domain(r) || (closed_at_r_min && r >= r_min && r < r_max - margin),
          ErrorKind::OutOfRange,
          "radius " + std::to_string(r) + " outside domain of " + label);
}

WarpedMetric3 WarpedMetric3::flat() {
  WarpedMetric3 g;
  g.f = RadialProfile::constant(1.0);
  g.h = RadialProfile([](double r) { return r; }, [](double) { return 1.0; },
                      [](double) { return 0.0; });
  g.hof = [](double) { return 1.0; };
  g.r_min = 0.0;
  g.r_max = 1e9;
  g.label = "flat";
  g.known_adm_mass = 0.0;
  g.asymptotically_flat = true;
  g.smooth_center = true;
  g.static_potential = RadialProfile::constant(1.0);
  return g;
}

WarpedMetric3 WarpedMetric3::schwarzschild_isotropic(double m) {
  require(m > 0.0, ErrorKind::InvalidParameter, "mass must be positive");
  auto u = [m](double r) { return 1.0 + 0.5 * m / r; };
  auto u1 = [m](double r) { return -0.5 * m / (r * r); };
  auto u2 = [m](double r) { return m / (r * r * r); };
  WarpedMetric3 g;
  g.f = RadialProfile([u](double r) { return u(r) * u(r); },
                      [u, u1](double r) { return 2.0 * u(r) * u1(r); },
                      [u, u1, u2](double r) {
                        return 2.0 * u1(r) * u1(r) + 2.0 * u(r) * u2(r);
                      });
  g.h = RadialProfile(
      [u](double r) { return r * u(r) * u(r); },
      [u, u1](double r) { return u(r) * u(r) + 2.0 * r * u(r) * u1(r); },
      [u, u1, u2](double r) {
        return 4.0 * u(r) * u1(r) + 2.0 * r * u1(r) * u1(r) +
               2.0 * r * u(r) * u2(r);
      });
  g.hof = [m, u](double r) { return 1.0 - m / (r * u(r)); };
  g.r_min = 0.0;
  g.r_max = 1e9;
  g.label = "schwarzschild_isotropic";
  g.known_adm_mass = m;
  g.asymptotically_flat = true;
  g.smooth_center = false;
  // Static potential (1 - m/2r)/(1 + m/2r) = (2r - m)/(2r + m).
  g.static_potential = RadialProfile(
      [m](double r) { return (2.0 * r - m) / (2.0 * r + m); },
      [m](double r) { return 4.0 * m / ((2.0 * r + m) * (2.0 * r + m)); },
      [m](double r) {
        double d = 2.0 * r + m;
        return -16.0 * m / (d * d * d);
      });
  return g;
}

WarpedMetric3 WarpedMetric3::schwarzschild_negative(double m) {
  require(m > 0.0, ErrorKind::InvalidParameter, "mass parameter must be positive");
  auto u = [m](double r) { return 1.0 - 0.5 * m / r; };
  auto u1 = [m](double r) { return 0.5 * m / (r * r); };
  auto u2 = [m](double r) { return -m / (r * r * r); };
  WarpedMetric3 g;
  g.f = RadialProfile([u](double r) { return u(r) * u(r); },
                      [u, u1](double r) { return 2.0 * u(r) * u1(r); },
                      [u, u1, u2](double r) {
                        return 2.0 * u1(r) * u1(r) + 2.0 * u(r) * u2(r);
                      });
  g.h = RadialProfile(
      [u](double r) { return r * u(r) * u(r); },
      [u, u1](double r) { return u(r) * u(r) + 2.0 * r * u(r) * u1(r); },
      [u, u1, u2](double r) {
        return 4.0 * u(r) * u1(r) + 2.0 * r * u1(r) * u1(r) +
               2.0 * r * u(r) * u2(r);
      });
  g.hof = [m, u](double r) { return 1.0 + m / (r * u(r)); };
  g.r_min = 0.0;
  g.r_max = 0.5 * m;  // metric defined on {0 < |x| < m/2}
  g.margin = 1e-6 * (g.r_max - g.r_min);
  g.label = "schwarzschild_negative";
  return g;
}

WarpedMetric3 WarpedMetric3::schwarzschild_area_radius(double m) {
  require(m > 0.0, ErrorKind::InvalidParameter, "mass must be positive");
  auto phi = [m](double r) { return 1.0 - 2.0 * m / r; };
  auto phi1 = [m](double r) { return 2.0 * m / (r * r); };
  auto phi2 = [m](double r) { return -4.0 * m / (r * r * r); };
  WarpedMetric3 g;
  g.f = RadialProfile(
      [phi](double r) { return 1.0 / std::sqrt(phi(r)); },
      [phi, phi1](double r) { return -0.5 * phi1(r) * std::pow(phi(r), -1.5); },
      [phi, phi1, phi2](double r) {
        return 0.75 * phi1(r) * phi1(r) * std::pow(phi(r), -2.5) -
               0.5 * phi2(r) * std::pow(phi(r), -1.5);
      });
  g.h = RadialProfile([](double r) { return r; }, [](double) { return 1.0; },
                      [](double) { return 0.0; });
  g.hof = [phi](double r) { return std::sqrt(std::max(0.0, phi(r))); };
  g.r_min = 2.0 * m;
  g.r_max = 1e9;
  g.closed_at_r_min = true;  // mean curvature has a finite limit at the horizon
  g.label = "schwarzschild_area_radius";
  g.known_adm_mass = m;
  g.asymptotically_flat = true;
  g.smooth_center = false;
  g.static_potential = RadialProfile(
      [phi](double r) { return std::sqrt(phi(r)); },
      [phi, phi1](double r) { return 0.5 * phi1(r) / std::sqrt(phi(r)); },
      [phi, phi1, phi2](double r) {
        return 0.5 * phi2(r) / std::sqrt(phi(r)) -
               0.25 * phi1(r) * phi1(r) * std::pow(phi(r), -1.5);
      });
  return g;
}

WarpedMetric3 WarpedMetric3::hyperbolic() {
  WarpedMetric3 g;
  g.f = RadialProfile::constant(1.0);
  g.h = RadialProfile([](double r) { return std::sinh(r); },
                      [](double r) { return std::cosh(r); },
                      [](double r) { return std::sinh(r); });
  g.hof = [](double r) { return std::cosh(r); };
  g.r_min = 0.0;
  g.r_max = 50.0;
  g.label = "hyperbolic";
  g.smooth_center = true;
  g.static_potential = RadialProfile([](double r) { return std::cosh(r); },
                                     [](double r) { return std::sinh(r); },
                                     [](double r) { return std::cosh(r); });
  return g;
}

WarpedMetric3 WarpedMetric3::spherical() {
  WarpedMetric3 g;
  g.f = RadialProfile::constant(1.0);
  g.h = RadialProfile([](double r) { return std::sin(r); },
                      [](double r) { return std::cos(r); },
                      [](double r) { return -std::sin(r); });
  g.hof = [](double r) { return std::cos(r); };
  g.r_min = 0.0;
  g.r_max = M_PI;
  g.label = "spherical";
  g.smooth_center = true;
  g.static_potential = RadialProfile([](double r) { return std::cos(r); },
                                     [](double r) { return -std::sin(r); },
                                     [](double r) { return -std::cos(r); });
  return g;
}

WarpedMetric3 WarpedMetric3::conformal_bump(double eps, double s) {
  require(s > 0.0, ErrorKind::InvalidParameter, "bump width must be positive");
  require(eps > -1.0, ErrorKind::InvalidParameter, "bump amplitude must exceed -1");
  auto e = [s](double r) { return std::exp(-r * r / (s * s)); };
  auto u = [eps, e](double r) { return 1.0 + eps * e(r); };
  auto u1 = [eps, e, s](double r) { return -2.0 * eps * r * e(r) / (s * s); };
  auto u2 = [eps, e, s](double r) {
    return eps * e(r) * (4.0 * r * r / (s * s * s * s) - 2.0 / (s * s));
  };
  WarpedMetric3 g;
  g.f = RadialProfile([u](double r) { return u(r) * u(r); },
                      [u, u1](double r) { return 2.0 * u(r) * u1(r); },
                      [u, u1, u2](double r) {
                        return 2.0 * u1(r) * u1(r) + 2.0 * u(r) * u2(r);
                      });
  g.h = RadialProfile(
      [u](double r) { return r * u(r) * u(r); },
      [u, u1](double r) { return u(r) * u(r) + 2.0 * r * u(r) * u1(r); },
      [u, u1, u2](double r) {
        return 4.0 * u(r) * u1(r) + 2.0 * r * u1(r) * u1(r) +
               2.0 * r * u(r) * u2(r);
      });
  g.hof = [u, u1](double r) { return 1.0 + 2.0 * r * u1(r) / u(r); };
  g.r_min = 0.0;
  g.r_max = 1e9;
  g.label = "conformal_bump";
  g.asymptotically_flat = true;
  g.smooth_center = true;
  if (eps == 0.0) g.static_potential = RadialProfile::constant(1.0);
  return g;
}

WarpedMetric3 WarpedMetric3::by_name(const std::string& name, double m,
                                     double eps, double s) {
  if (name == "flat") return flat();
  if (name == "schwarzschild_isotropic") return schwarzschild_isotropic(m);
  if (name == "schwarzschild_negative") return schwarzschild_negative(m);
  if (name == "schwarzschild_area_radius") return schwarzschild_area_radius(m);
  if (name == "hyperbolic") return hyperbolic();
  if (name == "spherical") return spherical();
  if (name == "conformal_bump") return conformal_bump(eps, s);
  fail(ErrorKind::InvalidParameter, "unknown metric constructor: " + name);
}

double sphere_mean_curvature(const WarpedMetric3& g, double r) {
  g.require_in_domain(r);
  return 2.0 * g.hof(r) / g.h(r);
}

double scalar_curvature(const WarpedMetric3& g, double r) {
  g.require_in_domain(r);
  const double f = g.f(r), f1 = g.f.d1(r);
  const double h = g.h(r), h1 = g.h.d1(r), h2 = g.h.d2(r);
  const double hof = g.hof(r);
  return -4.0 * (h2 * f - h1 * f1) / (f * f * f * h) + 2.0 / (h * h) -
         2.0 * hof * hof / (h * h);
}

SphereGeometry sphere_geometry(const WarpedMetric3& g, double r) {
  g.require_in_domain(r);
  SphereGeometry s;
  s.r = r;
  const double h = g.h(r), hof = g.hof(r);
  s.A_coeff = hof / h;
  s.H = 2.0 * s.A_coeff;
  s.area = 4.0 * M_PI * h * h;
  s.K_gauss = 1.0 / (h * h);
  s.eta = g.f(r);
  return s;
}

double ricci_rr(const WarpedMetric3& g, double r) {
  const double f = g.f(r), f1 = g.f.d1(r);
  const double h = g.h(r), h1 = g.h.d1(r), h2 = g.h.d2(r);
  return -2.0 * (h2 * f - h1 * f1) / (f * f * f * h);
}

double ricci_tt(const WarpedMetric3& g, double r) {
  const double f = g.f(r), f1 = g.f.d1(r);
  const double h = g.h(r), h1 = g.h.d1(r), h2 = g.h.d2(r);
  const double hof = g.hof(r);
  return -(h2 * f - h1 * f1) / (f * f * f * h) +
         (1.0 - hof * hof) / (h * h);
}

StaticResidual static_residual(const WarpedMetric3& g, const RadialProfile& N,
                               double r_lo, double r_hi, int n_samples) {
  require(N.valid(), ErrorKind::InvalidParameter, "potential profile not set");
  require(n_samples >= 2, ErrorKind::InvalidParameter, "need n_samples >= 2");
  g.require_in_domain(r_lo);
  g.require_in_domain(r_hi);

  StaticResidual res;
  res.r_samples.resize(n_samples);
  res.component_rr.resize(n_samples);
  res.component_tt.resize(n_samples);
  res.norm_profile.resize(n_samples);

  for (int i = 0; i < n_samples; ++i) {
    const double r = r_lo + (r_hi - r_lo) * i / (n_samples - 1);
    const double f = g.f(r), f1 = g.f.d1(r);
    const double h = g.h(r), h1 = g.h.d1(r);
    const double n0 = N(r), n1 = N.d1(r), n2 = N.d2(r);
    require(std::isfinite(n0) && std::isfinite(n1) && std::isfinite(n2),
            ErrorKind::NumericalDomain, "non-finite potential sample");

    const double hess_rr = (n2 - (f1 / f) * n1) / (f * f);
    const double hess_tt = h1 * n1 / (f * f * h);
    const double lap = hess_rr + 2.0 * hess_tt;

    const double s_rr = -lap + hess_rr - n0 * ricci_rr(g, r);
    const double s_tt = -lap + hess_tt - n0 * ricci_tt(g, r);

    res.r_samples[i] = r;
    res.component_rr[i] = s_rr;
    res.component_tt[i] = s_tt;
    res.norm_profile[i] = std::sqrt(s_rr * s_rr + 2.0 * s_tt * s_tt);
    res.sup_norm = std::max(res.sup_norm, res.norm_profile[i]);
  }
  return res;
}

StaticResidual static_residual(const WarpedMetric3& g, const RadialProfile& N,
                               int n_samples) {
  const double lo_edge = g.r_min + g.margin;
  const double width =
      std::min(5.0, 0.96 * (g.r_max - g.r_min - 2.0 * g.margin));
  const double r_lo = lo_edge + 0.02 * width;
  const double r_hi = lo_edge + width;
  return static_residual(g, N, r_lo, r_hi, n_samples);
}

}  // namespace qlmass
