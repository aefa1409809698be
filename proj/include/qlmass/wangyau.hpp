#pragma once

#include <functional>

#include "qlmass/embedding.hpp"
#include "qlmass/linearized.hpp"

namespace qlmass {

// One-parameter family of embeddable axisymmetric metrics with an analytic
// t-derivative, used to probe d/dt (int H0 dsigma_t).
struct MetricFamily {
  std::function<AxisymMetric2(double)> sigma;
  std::function<AxisymTensor2(double)> dsigma;
  std::string name;

  // Round dilation sigma(t) = (1+t)^2 (round metric).
  static MetricFamily dilation(ThetaGridPtr grid);
  // Spheroid a = 1, b = 1 + t (induced metric of the ellipsoid of revolution).
  static MetricFamily spheroid_stretch(ThetaGridPtr grid);
  // Conformally round F_t = 1 + t P2(cos theta).
  static MetricFamily conformal_p2(ThetaGridPtr grid);

  static MetricFamily by_name(const std::string& name, ThetaGridPtr grid);
};

struct WangYauCheck {
  double lhs_fd = 0.0;    // Richardson-extrapolated d/dt int H0 dsigma_t
  double rhs = 0.0;       // (1/2) int (H0 tr h - <A0, h>) dsigma at t0
  double rel_diff = 0.0;
};

WangYauCheck wangyau_derivative_check(const MetricFamily& family, double t0,
                                      double step);

// int H0 dsigma for the isometric embedding of sigma.
double total_mean_curvature(const AxisymMetric2& sigma);

}  // namespace qlmass
