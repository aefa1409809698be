#include "qlmass/static_variation.hpp"

#include <cmath>

namespace qlmass {

RadialPerturbation RadialPerturbation::zero() {
  RadialPerturbation p;
  p.w = [](double) { return 0.0; };
  p.w1 = [](double) { return 0.0; };
  p.w2 = [](double) { return 0.0; };
  return p;
}

RadialPerturbation RadialPerturbation::bump(double center, double width,
                                            double amplitude) {
  require(width > 0.0, ErrorKind::InvalidParameter, "bump width must be positive");
  RadialPerturbation p;
  p.support_lo = center - width;
  p.support_hi = center + width;
  p.w = [center, width, amplitude](double r) {
    const double xi = (r - center) / width;
    if (std::abs(xi) >= 1.0) return 0.0;
    const double u = (1.0 - xi) * (1.0 + xi);
    return amplitude * u * u * u * u;
  };
  p.w1 = [center, width, amplitude](double r) {
    const double xi = (r - center) / width;
    if (std::abs(xi) >= 1.0) return 0.0;
    const double u = (1.0 - xi) * (1.0 + xi);
    return -8.0 * amplitude * xi * u * u * u / width;
  };
  p.w2 = [center, width, amplitude](double r) {
    const double xi = (r - center) / width;
    if (std::abs(xi) >= 1.0) return 0.0;
    const double u = (1.0 - xi) * (1.0 + xi);
    return amplitude * (-8.0 * u * u * u + 48.0 * xi * xi * u * u) /
           (width * width);
  };
  return p;
}

WarpedMetric3 perturb_radial(const WarpedMetric3& base,
                             const RadialPerturbation& pert, double t) {
  WarpedMetric3 g = base;
  auto f0 = base.f;
  auto w = pert.w, w1 = pert.w1, w2 = pert.w2;
  auto f2 = [f0, w, t](double r) {
    return f0(r) * f0(r) + t * w(r);
  };
  g.f = RadialProfile(
      [f2](double r) {
        const double v = f2(r);
        require(v > 0.0, ErrorKind::InvalidParameter,
                "perturbation destroys the metric (f^2 + t w <= 0)");
        return std::sqrt(v);
      },
      [f0, f2, w1, t](double r) {
        return (f0(r) * f0.d1(r) + 0.5 * t * w1(r)) / std::sqrt(f2(r));
      },
      [f0, f2, w1, w2, t](double r) {
        const double ft = std::sqrt(f2(r));
        const double a = f0(r) * f0.d1(r) + 0.5 * t * w1(r);
        const double b =
            f0.d1(r) * f0.d1(r) + f0(r) * f0.d2(r) + 0.5 * t * w2(r);
        return b / ft - a * a / (ft * ft * ft);
      });
  auto h = base.h;
  auto fnew = g.f;
  g.hof = [h, fnew](double r) { return h.d1(r) / fnew(r); };
  g.label = base.label + "+t*w";
  g.static_potential = RadialProfile();
  return g;
}

double functional_F_phi(const WarpedMetric3& g, double r_b, double phi) {
  g.require_in_domain(r_b);
  const double h = g.h(r_b);
  return 4.0 * M_PI * h * h * sphere_mean_curvature(g, r_b) * phi;
}

namespace {

// Scalar curvature with a center-safe evaluation: at radii below r_eps the
// value is extrapolated quadratically from three interior samples.
double safe_scalar_curvature(const WarpedMetric3& g, double r, double r_eps) {
  if (r > r_eps) return scalar_curvature(g, r);
  const double r1 = r_eps, r2 = 2.0 * r_eps, r3 = 3.0 * r_eps;
  const double k1 = scalar_curvature(g, r1), k2 = scalar_curvature(g, r2),
               k3 = scalar_curvature(g, r3);
  return 3.0 * k1 - 3.0 * k2 + k3;
}

void thomas_solve(Vec& lower, Vec& diag, Vec& upper, Vec& rhs) {
  const int n = static_cast<int>(diag.size());
  for (int i = 1; i < n; ++i) {
    const double m = lower[i] / diag[i - 1];
    diag[i] -= m * upper[i - 1];
    rhs[i] -= m * rhs[i - 1];
  }
  rhs[n - 1] /= diag[n - 1];
  for (int i = n - 2; i >= 0; --i)
    rhs[i] = (rhs[i] - upper[i] * rhs[i + 1]) / diag[i];
}

}  // namespace

ConformalSolve conformal_bvp_solve(const WarpedMetric3& g, double K, double r_b,
                                   int n_grid, double tol, int max_iter) {
  require(n_grid >= 16, ErrorKind::InvalidParameter, "n_grid too small");
  g.require_in_domain(r_b);
  require(g.smooth_center, ErrorKind::UnsupportedMetric,
          "conformal solve requires a constructor smooth at r = 0");

  const int N = n_grid;  // nodes 0..N, u_N = 1 fixed
  const double dr = r_b / N;

  Vec r(N + 1);
  for (int j = 0; j <= N; ++j) r[j] = j * dr;

  // Coefficients of the radial Laplacian (1/f^2)[u'' + c(r) u'] and K_g(r).
  Vec inv_f2(N), c(N), Kg(N);
  const double r_eps = 0.5 * dr;
  for (int j = 0; j < N; ++j) {
    const double rj = (j == 0) ? 0.0 : r[j];
    if (j == 0) {
      inv_f2[0] = 1.0 / (g.f(r_eps * 1e-3) * g.f(r_eps * 1e-3));
      c[0] = 0.0;
      Kg[0] = safe_scalar_curvature(g, 0.0, r_eps);
    } else {
      const double f = g.f(rj);
      inv_f2[j] = 1.0 / (f * f);
      c[j] = 2.0 * g.h.d1(rj) / g.h(rj) - g.f.d1(rj) / f;
      Kg[j] = safe_scalar_curvature(g, rj, r_eps);
    }
  }

  ConformalSolve out;
  out.r = r;
  out.u = Vec::Ones(N + 1);
  out.scalar_bound_margin = (Kg.array() - K).minCoeff();

  // Rows are scaled by dr^2 f^2 / 8 so the residual is measured in u-units;
  // otherwise the 1/dr^2 stencil factor puts the rounding floor above tol.
  Vec scale(N);
  scale[0] = dr * dr / (48.0 * inv_f2[0]);
  for (int j = 1; j < N; ++j) scale[j] = dr * dr / (8.0 * inv_f2[j]);

  auto residual = [&](const Vec& u, Vec& E) {
    E.resize(N);
    // center row: Lap u(0) = 3 u''(0) / f(0)^2 with the ghost-point stencil
    E[0] = 2.0 * (u[1] - u[0]) +
           scale[0] * (-Kg[0] * u[0] + K * std::pow(u[0], 5));
    for (int j = 1; j < N; ++j) {
      const double upp = u[j + 1] - 2.0 * u[j] + u[j - 1];
      const double up = 0.5 * dr * c[j] * (u[j + 1] - u[j - 1]);
      E[j] = upp + up + scale[j] * (-Kg[j] * u[j] + K * std::pow(u[j], 5));
    }
  };

  Vec E;
  residual(out.u, E);
  double err = E.cwiseAbs().maxCoeff();
  int iter = 0;
  while (err > tol) {
    require(iter < max_iter, ErrorKind::SolverFailure,
            "Newton failed to converge: residual " + std::to_string(err));
    // Tridiagonal Jacobian rows for unknowns u_0..u_{N-1}.
    Vec lower(N), diag(N), upper(N), rhs = -E;
    lower[0] = 0.0;
    diag[0] = -2.0 + scale[0] * (-Kg[0] + 5.0 * K * std::pow(out.u[0], 4));
    upper[0] = 2.0;
    for (int j = 1; j < N; ++j) {
      lower[j] = 1.0 - 0.5 * dr * c[j];
      diag[j] = -2.0 + scale[j] * (-Kg[j] + 5.0 * K * std::pow(out.u[j], 4));
      upper[j] = 1.0 + 0.5 * dr * c[j];
    }
    // u_N = 1 is fixed; its column already sits in the residual.
    thomas_solve(lower, diag, upper, rhs);

    // Damped update: halve on residual increase.
    double lambda = 1.0;
    Vec trial;
    Vec Et;
    for (int halving = 0;; ++halving) {
      trial = out.u;
      trial.head(N) += lambda * rhs;
      residual(trial, Et);
      const double err_t = Et.cwiseAbs().maxCoeff();
      if (err_t < err || err_t <= tol) {
        out.u = trial;
        E = Et;
        err = err_t;
        break;
      }
      require(halving < 30, ErrorKind::SolverFailure,
              "Newton line search stalled at residual " + std::to_string(err));
      lambda *= 0.5;
    }
    require((out.u.array() > 0.0).all(), ErrorKind::MaximumPrincipleViolation,
            "conformal factor crossed zero");
    ++iter;
  }

  out.newton_iterations = iter;
  out.residual_norm = err;
  out.boundary_flux =
      (3.0 * out.u[N] - 4.0 * out.u[N - 1] + out.u[N - 2]) / (2.0 * dr) /
      g.f(r_b);
  return out;
}

CriticalityResult criticality_test(const WarpedMetric3& g, double r_b,
                                   double phi, const RadialPerturbation& pert,
                                   const std::vector<double>& steps, double K,
                                   int n_grid) {
  require(steps.size() >= 2, ErrorKind::InvalidParameter,
          "need at least two FD steps");
  for (size_t k = 0; k < steps.size(); ++k) {
    require(steps[k] > 0.0, ErrorKind::InvalidParameter, "steps must be positive");
    if (k > 0)
      require(steps[k] < steps[k - 1], ErrorKind::InvalidParameter,
              "steps must decrease");
  }
  require(pert.support_lo >= 0.0 && pert.support_hi <= r_b,
          ErrorKind::InvalidParameter,
          "perturbation support must lie inside the ball");
  if (g.label == "spherical") {
    // Eigenvalue hypothesis via the volume bound vol(ball) < 2 pi.
    const double vol = M_PI * (2.0 * r_b - std::sin(2.0 * r_b));
    require(vol < 2.0 * M_PI, ErrorKind::InvalidParameter,
            "spherical ball too large for the eigenvalue hypothesis");
  }

  const double h_b = g.h(r_b);
  auto F_of = [&](double t) {
    WarpedMetric3 gt = perturb_radial(g, pert, t);
    auto solve = conformal_bvp_solve(gt, K, r_b, n_grid);
    const double Ht = sphere_mean_curvature(gt, r_b);
    return 4.0 * M_PI * h_b * h_b * (Ht + 4.0 * solve.boundary_flux) * phi;
  };

  CriticalityResult res;
  res.F0 = F_of(0.0);
  res.t_scale = steps.front();

  std::vector<double> D(steps.size());
  for (size_t k = 0; k < steps.size(); ++k) {
    const double t = steps[k];
    const double Fp = F_of(t), Fm = F_of(-t);
    D[k] = (Fp - Fm) / (2.0 * t);
    res.t_samples.insert(res.t_samples.end(), {t, -t});
    res.F_samples.insert(res.F_samples.end(), {Fp, Fm});
    if (k == 0)
      res.second_derivative = (Fp - 2.0 * res.F0 + Fm) / (t * t);
  }

  // Richardson elimination of the O(step^2) FD error from the two smallest
  // steps in the ladder.
  const double s0 = steps[steps.size() - 2], s1 = steps.back();
  const double D0 = D[steps.size() - 2], D1 = D.back();
  res.first_derivative = (s0 * s0 * D1 - s1 * s1 * D0) / (s0 * s0 - s1 * s1);

  const double denom = std::abs(res.second_derivative) * res.t_scale;
  res.normalized =
      (res.first_derivative == 0.0)
          ? 0.0
          : std::abs(res.first_derivative) / std::max(denom, 1e-300);
  return res;
}

bool static_flatness_check(const WarpedMetric3& g, int n_samples) {
  const double lo_edge = g.r_min + g.margin;
  const double width =
      std::min(5.0, 0.96 * (g.r_max - g.r_min - 2.0 * g.margin));
  double sup = 0.0;
  for (int i = 0; i < n_samples; ++i) {
    const double r = lo_edge + width * (0.02 + 0.98 * i / (n_samples - 1));
    sup = std::max(sup, std::abs(ricci_rr(g, r)));
    sup = std::max(sup, std::abs(ricci_tt(g, r)));
  }
  return sup < 1e-9;
}

}  // namespace qlmass
