#include "qlmass/theta_grid.hpp"

#include <cmath>

namespace qlmass {

namespace legendre {

double p(int l, double x) {
  if (l == 0) return 1.0;
  if (l == 1) return x;
  double pm1 = 1.0, pc = x;
  for (int k = 2; k <= l; ++k) {
    double pn = ((2 * k - 1) * x * pc - (k - 1) * pm1) / k;
    pm1 = pc;
    pc = pn;
  }
  return pc;
}

double dp(int l, double x) {
  if (l == 0) return 0.0;
  // (1-x^2) P_l' = l (P_{l-1} - x P_l); nodes are interior so 1-x^2 > 0.
  double omx2 = (1.0 - x) * (1.0 + x);
  if (omx2 > 1e-12) return l * (p(l - 1, x) - x * p(l, x)) / omx2;
  // Endpoint limit P_l'(+-1) = (+-1)^{l-1} l(l+1)/2.
  double v = 0.5 * l * (l + 1);
  if (x < 0.0 && l % 2 == 0) v = -v;
  return v;
}

void gauss(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.resize(n);
  weights.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Tricomi-style initial guess, then Newton on P_n.
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = z;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * z * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (z * p1 - p0) / ((z - 1.0) * (z + 1.0));
      double dz = p1 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    nodes[i] = -z;
    nodes[n - 1 - i] = z;
    double w = 2.0 / (((1.0 - z) * (1.0 + z)) * pp * pp);
    weights[i] = w;
    weights[n - 1 - i] = w;
  }
}

}  // namespace legendre

ThetaGrid::ThetaGrid(int n) : n_(n) {
  require(n >= 8, ErrorKind::InvalidParameter, "theta grid needs n >= 8");

  std::vector<double> xs, ws;
  legendre::gauss(n, xs, ws);

  theta_.resize(n);
  x_.resize(n);
  sin_.resize(n);
  w_.resize(n);
  // Store ascending in theta, i.e. descending in x.
  for (int i = 0; i < n; ++i) {
    double x = xs[n - 1 - i];
    x_[i] = x;
    theta_[i] = std::acos(x);
    sin_[i] = std::sqrt((1.0 - x) * (1.0 + x));
    w_[i] = ws[n - 1 - i];
  }

  // Barycentric weights for Gauss nodes: lambda_j ~ (-1)^j sqrt((1-x_j^2) w_j).
  bary_.resize(n);
  for (int i = 0; i < n; ++i) {
    double lam = std::sqrt((1.0 - x_[i]) * (1.0 + x_[i]) * w_[i]);
    bary_[i] = (i % 2 == 0) ? lam : -lam;
  }

  // d/dx by barycentric differentiation with the negative-sum trick.
  dx_.resize(n, n);
  for (int i = 0; i < n; ++i) {
    double rowsum = 0.0;
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      double d = (bary_[j] / bary_[i]) / (x_[i] - x_[j]);
      dx_(i, j) = d;
      rowsum += d;
    }
    dx_(i, i) = -rowsum;
  }
}

double ThetaGrid::integrate(const Vec& f) const {
  check_len(f);
  return w_.dot(f);
}

Vec ThetaGrid::differentiate(const Vec& field, int order) const {
  check_len(field);
  require(order == 1 || order == 2, ErrorKind::InvalidParameter,
          "derivative order must be 1 or 2");
  Vec fx = dx_ * field;
  if (order == 1) return (-sin_.array() * fx.array()).matrix();
  Vec fxx = dx_ * fx;
  return ((1.0 - x_.array().square()) * fxx.array() - x_.array() * fx.array())
      .matrix();
}

Vec ThetaGrid::laplace_round(const Vec& field) const {
  check_len(field);
  Vec fx = dx_ * field;
  Vec fxx = dx_ * fx;
  return ((1.0 - x_.array().square()) * fxx.array() - 2.0 * x_.array() * fx.array())
      .matrix();
}

double ThetaGrid::pole_value(const Vec& field, bool north) const {
  check_len(field);
  // Lagrange extrapolation to x = +-1 through the nearest nodes.
  const int m = (n_ >= 12) ? 6 : 4;
  const double xp = north ? 1.0 : -1.0;
  int start = north ? 0 : n_ - m;  // nodes sorted descending in x
  double val = 0.0;
  for (int i = start; i < start + m; ++i) {
    double li = 1.0;
    for (int j = start; j < start + m; ++j) {
      if (j == i) continue;
      li *= (xp - x_[j]) / (x_[i] - x_[j]);
    }
    val += li * field[i];
  }
  return val;
}

double ThetaGrid::interpolate(const Vec& field, double x) const {
  check_len(field);
  double num = 0.0, den = 0.0;
  for (int i = 0; i < n_; ++i) {
    double d = x - x_[i];
    if (d == 0.0) return field[i];
    double t = bary_[i] / d;
    num += t * field[i];
    den += t;
  }
  return num / den;
}

Vec ThetaGrid::legendre_coeffs(const Vec& field, int lmax) const {
  check_len(field);
  require(lmax >= 0 && lmax < n_, ErrorKind::InvalidParameter,
          "lmax out of range for this grid");
  Vec c(lmax + 1);
  for (int l = 0; l <= lmax; ++l) {
    double s = 0.0;
    for (int i = 0; i < n_; ++i) s += w_[i] * field[i] * legendre::p(l, x_[i]);
    c[l] = 0.5 * (2 * l + 1) * s;
  }
  return c;
}

Vec ThetaGrid::antiderivative_theta(const Vec& field) const {
  check_len(field);
  // field = zeta * sin(theta) with zeta smooth in x; then
  // int_0^theta field = int_x^1 zeta dx', integrated termwise in Legendre.
  Vec zeta = (field.array() / sin_.array()).matrix();
  Vec c = legendre_coeffs(zeta, n_ - 1);
  Vec out(n_);
  for (int i = 0; i < n_; ++i) {
    double x = x_[i];
    double s = c[0] * (1.0 - x);
    for (int l = 1; l < n_; ++l) {
      s += c[l] * (legendre::p(l - 1, x) - legendre::p(l + 1, x)) / (2 * l + 1);
    }
    out[i] = s;
  }
  return out;
}

ThetaGridPtr make_theta_grid(int n) { return std::make_shared<ThetaGrid>(n); }

}  // namespace qlmass
