#pragma once

#include <Eigen/Dense>
#include <memory>
#include <vector>

#include "qlmass/errors.hpp"

namespace qlmass {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

namespace legendre {

// P_l(x) for l >= 0 by the three-term recurrence.
double p(int l, double x);
// dP_l/dx.
double dp(int l, double x);
// Gauss-Legendre nodes (ascending) and weights on [-1, 1].
void gauss(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace legendre

// Collocation grid on the polar interval (0, pi). Nodes are Gauss-Legendre
// points in x = cos(theta), so no node sits at a pole and the quadrature
//   integrate(f) ~ int_0^pi f(theta) sin(theta) dtheta
// is exact for f polynomial in cos(theta) of degree <= 2n-1.
//
// Derivative operators act on theta-sampled fields:
//   d/dtheta    = -sin(theta) d/dx
//   d2/dtheta2  = (1-x^2) d2/dx2 - x d/dx
// and are exact (up to roundoff) on polynomials in x of degree <= n-1.
class ThetaGrid {
 public:
  explicit ThetaGrid(int n);

  int size() const { return n_; }
  const Vec& theta() const { return theta_; }
  const Vec& x() const { return x_; }          // cos(theta), descending
  const Vec& sin_theta() const { return sin_; }
  const Vec& weights() const { return w_; }

  // int_0^pi f sin(theta) dtheta from samples of f at the nodes.
  double integrate(const Vec& f) const;

  // Derivative in theta of order 1 or 2.
  Vec differentiate(const Vec& field, int order) const;

  // Derivatives in x = cos(theta).
  Vec deriv_x(const Vec& field) const { check_len(field); return dx_ * field; }
  Vec deriv_xx(const Vec& field) const { check_len(field); return dx_ * (dx_ * field); }

  // Round-sphere Laplacian of an axisymmetric scalar, (1-x^2)f'' - 2xf' in x.
  Vec laplace_round(const Vec& field) const;

  // Value of the (smooth) field at x = +1 (north pole, theta=0) or x = -1,
  // by polynomial extrapolation through the nearest nodes.
  double pole_value(const Vec& field, bool north) const;

  // Interpolate a sampled field to arbitrary x in [-1, 1] (barycentric).
  double interpolate(const Vec& field, double x) const;

  // Legendre coefficients c_l, l = 0..lmax, of the sampled field.
  Vec legendre_coeffs(const Vec& field, int lmax) const;

  // Antiderivative in theta vanishing at theta = 0:
  //   F(theta_i) = int_0^{theta_i} field dtheta,
  // assuming field/sin(theta) is smooth (true for derivatives of smooth
  // axisymmetric profiles).
  Vec antiderivative_theta(const Vec& field) const;

  const Mat& dmat_x() const { return dx_; }

 private:
  void check_len(const Vec& f) const {
    require(f.size() == n_, ErrorKind::InvalidParameter,
            "field length does not match grid node count");
  }

  int n_;
  Vec theta_, x_, sin_, w_;
  Vec bary_;   // barycentric weights on the x nodes
  Mat dx_;     // d/dx collocation matrix
};

using ThetaGridPtr = std::shared_ptr<const ThetaGrid>;

// Factory matching the module surface; n < 8 is rejected.
ThetaGridPtr make_theta_grid(int n);

}  // namespace qlmass
