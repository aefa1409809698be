#pragma once

#include <string>
#include <vector>

#include "qlmass/theta_grid.hpp"
#include "qlmass/warped.hpp"

namespace qlmass {

// Result record for the boundary-integral masses. The area element is the
// density of d(sigma) relative to sin(theta) dtheta dphi, so a round sphere
// of radius h carries area_element = h^2.
struct MassReport {
  std::optional<double> m_by, m_ly;
  double H0_integral = 0.0;
  double H_integral = 0.0;  // integral of H (Brown-York) or |Hvec| (Liu-Yau)
  double area = 0.0;
  std::string method;  // "closed-form" or "embedding"
  double error_estimate = 0.0;
};

MassReport brown_york(const Vec& H0, const Vec& H, const Vec& area_element,
                      const ThetaGrid& grid);
MassReport liu_yau(const Vec& H0, const Vec& Hvec_norm, const Vec& area_element,
                   const ThetaGrid& grid);

// Coordinate sphere S_r in a warped ambient: the induced metric is round of
// radius h(r), so H0 = 2/h in closed form and
//   m_BY(S_r) = h (1 - h'/f).
double m_by_sphere(const WarpedMetric3& g, double r);
MassReport brown_york_sphere(const WarpedMetric3& g, double r);

// Pointwise Phi = |A0 - A|^2 - (H0 - H)^2 on the umbilic coordinate sphere,
// which reduces to -2 (1/h - h'/(fh))^2.
double phi_pointwise(const WarpedMetric3& g, double r);

// Right side of the evolution identity:
//   d m_BY / dr = (1/16pi) int (|A0-A|^2 - (H0-H)^2 + R) eta dsigma
// with eta = f on the coordinate foliation; evaluates to (h^2 f / 4)(Phi + R).
double evolution_rhs(const WarpedMetric3& g, double r);

// Centered difference + one Richardson level of m_BY(S_r) in r.
double m_by_derivative_fd(const WarpedMetric3& g, double r,
                          double step_frac = 1e-4);

struct FoliationScan {
  Vec r;
  Vec m_by;
  Vec Phi;
  Vec dm_dr_formula;
  Vec dm_dr_fd;
  double R_volume_integral = 0.0;    // int R dV over the shell
  double Phi_volume_integral = 0.0;  // int Phi dV over the shell
  bool monotone_nonincreasing = false;
};

FoliationScan foliation_scan(const WarpedMetric3& g, double r_lo, double r_hi,
                             int n_samples);

struct AdmDecomposition {
  double m_by_inner = 0.0;
  double R_integral = 0.0;    // (1/16pi) int R dV over [r0, r_max]
  double Phi_integral = 0.0;  // (1/16pi) int Phi dV over [r0, r_max]
  double R_tail = 0.0;
  double Phi_tail = 0.0;
  double Phi_tail_exponent = 0.0;
  double total = 0.0;
  double reference = 0.0;  // known ADM mass, else the large-r Brown-York limit
  double defect = 0.0;
};

AdmDecomposition adm_decompose(const WarpedMetric3& g, double r0, double r_max);

struct SmallBallScan {
  Vec r;
  Vec m_by;
  bool magnitude_decreasing = false;
};

SmallBallScan small_ball_scan(const WarpedMetric3& g,
                              const std::vector<double>& r_values);

}  // namespace qlmass
