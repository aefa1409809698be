#pragma once

#include <optional>

#include "qlmass/theta_grid.hpp"

namespace qlmass {

// Quadrature grid for int f(r) dr on [r_min, r_max], optionally extended to
// r = infinity through a power-law tail model f ~ c r^p with fixed exponent
// p <= -2 (amplitude fitted from the samples in the last decade).
class RadialGrid {
 public:
  // Gauss-Legendre nodes mapped linearly onto [r_min, r_max].
  static RadialGrid gauss(double r_min, double r_max, int n);
  // Gauss-Legendre in log r; integrand must be sampled at the nodes as usual.
  // Suited to ranges spanning several decades. Requires r_min > 0.
  static RadialGrid log_gauss(double r_min, double r_max, int n);

  RadialGrid& with_tail_exponent(double p);

  double r_min() const { return r_min_; }
  double r_max() const { return r_max_; }
  const Vec& nodes() const { return r_; }
  const Vec& weights() const { return w_; }
  int size() const { return static_cast<int>(r_.size()); }
  std::optional<double> tail_exponent() const { return tail_p_; }

 private:
  RadialGrid() = default;
  void validate() const;

  double r_min_ = 0.0, r_max_ = 0.0;
  Vec r_, w_;
  std::optional<double> tail_p_;
};

struct RadialIntegral {
  double finite = 0.0;      // quadrature over [r_min, r_max]
  double tail = 0.0;        // extrapolated contribution beyond r_max
  double tail_bound = 0.0;  // crude error bound on the tail fit
  double total = 0.0;
};

RadialIntegral integrate_radial(const Vec& integrand, const RadialGrid& grid);

// Least-squares power-law fit |f| ~ c r^p over the samples with r >= r_max/10.
// Returns (c, p); used by the ADM decomposition where p itself is unknown.
// Samples below `floor` in magnitude yield c = 0 (tail treated as zero).
struct PowerLawFit {
  double c = 0.0;
  double p = 0.0;
  double max_rel_dev = 0.0;  // worst relative misfit over the window
  bool negligible = false;
};
PowerLawFit fit_power_law_tail(const Vec& integrand, const RadialGrid& grid,
                               double floor = 1e-14);

}  // namespace qlmass
