#include "qlmass/radial_grid.hpp"

#include <cmath>

namespace qlmass {

RadialGrid RadialGrid::gauss(double r_min, double r_max, int n) {
  require(n >= 2, ErrorKind::InvalidParameter, "radial grid needs n >= 2");
  RadialGrid g;
  g.r_min_ = r_min;
  g.r_max_ = r_max;
  std::vector<double> xs, ws;
  legendre::gauss(n, xs, ws);
  g.r_.resize(n);
  g.w_.resize(n);
  const double mid = 0.5 * (r_min + r_max), half = 0.5 * (r_max - r_min);
  for (int i = 0; i < n; ++i) {
    g.r_[i] = mid + half * xs[i];
    g.w_[i] = half * ws[i];
  }
  g.validate();
  return g;
}

RadialGrid RadialGrid::log_gauss(double r_min, double r_max, int n) {
  require(n >= 2, ErrorKind::InvalidParameter, "radial grid needs n >= 2");
  require(r_min > 0.0, ErrorKind::InvalidParameter,
          "log-spaced radial grid requires r_min > 0");
  RadialGrid g;
  g.r_min_ = r_min;
  g.r_max_ = r_max;
  std::vector<double> xs, ws;
  legendre::gauss(n, xs, ws);
  g.r_.resize(n);
  g.w_.resize(n);
  const double a = std::log(r_min), b = std::log(r_max);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (int i = 0; i < n; ++i) {
    double r = std::exp(mid + half * xs[i]);
    g.r_[i] = r;
    g.w_[i] = half * ws[i] * r;  // dr = r d(log r)
  }
  g.validate();
  return g;
}

RadialGrid& RadialGrid::with_tail_exponent(double p) {
  require(p <= -2.0, ErrorKind::InvalidParameter,
          "tail exponent must be <= -2 for an integrable tail");
  tail_p_ = p;
  return *this;
}

void RadialGrid::validate() const {
  require(r_min_ >= 0.0, ErrorKind::InvalidParameter, "r_min must be >= 0");
  require(r_min_ < r_max_, ErrorKind::InvalidParameter, "need r_min < r_max");
  for (int i = 1; i < size(); ++i) {
    require(r_[i] > r_[i - 1], ErrorKind::InvalidParameter,
            "radial nodes must be strictly increasing");
  }
}

RadialIntegral integrate_radial(const Vec& integrand, const RadialGrid& grid) {
  require(integrand.size() == grid.size(), ErrorKind::InvalidParameter,
          "integrand length does not match radial grid");
  require(integrand.allFinite(), ErrorKind::NumericalDomain,
          "non-finite integrand sample");

  RadialIntegral out;
  out.finite = grid.weights().dot(integrand);

  if (grid.tail_exponent()) {
    const double p = *grid.tail_exponent();
    // Amplitude from the samples in the last decade: log c = mean(log|f| - p log r).
    const double r_lo = grid.r_max() / 10.0;
    double sum = 0.0;
    int cnt = 0;
    double sign = 0.0;
    double maxdev = 0.0;
    const double scale = integrand.cwiseAbs().maxCoeff();
    for (int i = 0; i < grid.size(); ++i) {
      if (grid.nodes()[i] < r_lo) continue;
      double f = integrand[i];
      if (std::abs(f) < 1e-300 || std::abs(f) < 1e-14 * scale) continue;
      sum += std::log(std::abs(f)) - p * std::log(grid.nodes()[i]);
      sign += (f > 0) ? 1.0 : -1.0;
      ++cnt;
    }
    if (cnt > 0) {
      double c = std::exp(sum / cnt) * ((sign >= 0) ? 1.0 : -1.0);
      for (int i = 0; i < grid.size(); ++i) {
        if (grid.nodes()[i] < r_lo) continue;
        double f = integrand[i];
        if (std::abs(f) < 1e-300) continue;
        double model = c * std::pow(grid.nodes()[i], p);
        maxdev = std::max(maxdev, std::abs(f - model) / std::abs(model));
      }
      // int_{r_max}^inf c r^p dr, convergent since p <= -2.
      out.tail = -c * std::pow(grid.r_max(), p + 1.0) / (p + 1.0);
      out.tail_bound = std::abs(out.tail) * maxdev;
    }
  }
  out.total = out.finite + out.tail;
  return out;
}

PowerLawFit fit_power_law_tail(const Vec& integrand, const RadialGrid& grid,
                               double floor) {
  require(integrand.size() == grid.size(), ErrorKind::InvalidParameter,
          "integrand length does not match radial grid");
  PowerLawFit fit;
  const double r_lo = grid.r_max() / 10.0;
  const double scale = integrand.cwiseAbs().maxCoeff();

  double sx = 0, sy = 0, sxx = 0, sxy = 0, sign = 0;
  int cnt = 0;
  for (int i = 0; i < grid.size(); ++i) {
    if (grid.nodes()[i] < r_lo) continue;
    double f = integrand[i];
    if (std::abs(f) < floor || std::abs(f) < 1e-12 * scale) continue;
    double lx = std::log(grid.nodes()[i]), ly = std::log(std::abs(f));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    sign += (f > 0) ? 1.0 : -1.0;
    ++cnt;
  }
  if (cnt < 4) {
    fit.negligible = true;
    return fit;
  }
  const double det = cnt * sxx - sx * sx;
  fit.p = (cnt * sxy - sx * sy) / det;
  fit.c = std::exp((sy - fit.p * sx) / cnt) * ((sign >= 0) ? 1.0 : -1.0);
  for (int i = 0; i < grid.size(); ++i) {
    if (grid.nodes()[i] < r_lo) continue;
    double f = integrand[i];
    if (std::abs(f) < floor || std::abs(f) < 1e-12 * scale) continue;
    double model = fit.c * std::pow(grid.nodes()[i], fit.p);
    fit.max_rel_dev =
        std::max(fit.max_rel_dev, std::abs(f - model) / std::abs(model));
  }
  return fit;
}

}  // namespace qlmass
