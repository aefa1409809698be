#pragma once

#include <vector>

#include "qlmass/warped.hpp"

namespace qlmass {

// Compactly supported radial direction h_hat = w(r) dr^2. The polynomial
// bump (1 - xi^2)^4 vanishes with three derivatives at the support edges, so
// the perturbed metric keeps the boundary data of the base metric.
struct RadialPerturbation {
  std::function<double(double)> w, w1, w2;
  double support_lo = 0.0, support_hi = 0.0;

  static RadialPerturbation zero();
  static RadialPerturbation bump(double center, double width, double amplitude);
};

// g(t) = (f^2 + t w) dr^2 + h^2 (round); requires f^2 + t w > 0 on the support.
WarpedMetric3 perturb_radial(const WarpedMetric3& base,
                             const RadialPerturbation& pert, double t);

// F_phi(g) = int_S H phi dsigma on the coordinate sphere r_b with a constant
// boundary weight: 4 pi h(r_b)^2 H(r_b) phi.
double functional_F_phi(const WarpedMetric3& g, double r_b, double phi);

struct ConformalSolve {
  Vec r, u;
  double boundary_flux = 0.0;  // du/dnu at r_b
  int newton_iterations = 0;
  double residual_norm = 0.0;
  double scalar_bound_margin = 0.0;  // min over grid of (K_g(r) - K)
};

// Solve the n = 3 conformal constraint on the ball [0, r_b]:
//   8 Lap_{g} u - K_g(r) u = -K u^5,  u(r_b) = 1,  u'(0) = 0,
// so that u^4 g has constant scalar curvature K. Damped Newton on a
// second-order finite-difference grid; linear when K = 0.
ConformalSolve conformal_bvp_solve(const WarpedMetric3& g, double K, double r_b,
                                   int n_grid = 8192, double tol = 1e-10,
                                   int max_iter = 50);

struct CriticalityResult {
  double F0 = 0.0;
  double first_derivative = 0.0;   // Richardson-extrapolated centered FD
  double second_derivative = 0.0;  // from the largest step
  double t_scale = 0.0;
  double normalized = 0.0;  // |F'| / (|F''| t_scale)
  std::vector<double> t_samples;
  std::vector<double> F_samples;
};

// FD criticality probe of F_phi along the constraint-projected path
// t -> u(t)^4 g(t): F(t) = 4 pi h_b^2 (H(t) + 4 du/dnu_t) phi.
// steps must be a decreasing ladder of at least two positive t values.
CriticalityResult criticality_test(const WarpedMetric3& g, double r_b,
                                   double phi, const RadialPerturbation& pert,
                                   const std::vector<double>& steps, double K,
                                   int n_grid = 8192);

// Whether the Ricci tensor (equivalently, in 3d, the full Riemann tensor)
// vanishes on a radial sample.
bool static_flatness_check(const WarpedMetric3& g, int n_samples = 64);

}  // namespace qlmass
