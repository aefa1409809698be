#pragma once

#include <functional>
#include <optional>
#include <string>

#include "qlmass/radial_grid.hpp"
#include "qlmass/theta_grid.hpp"

namespace qlmass {

// Radial profile with first and second derivatives. Closed-form constructors
// supply exact derivatives; from_samples builds a spectral interpolant whose
// derivatives come from the collocation matrix (adequate for smooth data).
class RadialProfile {
 public:
  RadialProfile() = default;
  RadialProfile(std::function<double(double)> v, std::function<double(double)> d1,
                std::function<double(double)> d2)
      : v_(std::move(v)), d1_(std::move(d1)), d2_(std::move(d2)) {}

  static RadialProfile constant(double c);
  static RadialProfile from_samples(const Vec& values, const RadialGrid& grid);

  double operator()(double r) const { return v_(r); }
  double d1(double r) const { return d1_(r); }
  double d2(double r) const { return d2_(r); }
  bool valid() const { return static_cast<bool>(v_); }

 private:
  std::function<double(double)> v_, d1_, d2_;
};

// Ambient warped-product 3-metric g = f(r)^2 dr^2 + h(r)^2 (round sphere).
// Coordinate spheres are umbilic; all curvature quantities reduce to closed
// forms in f, h and their derivatives. hof stores h'/f in a form that stays
// finite where f itself blows up (area-radius Schwarzschild horizon).
struct WarpedMetric3 {
  RadialProfile f, h;
  std::function<double(double)> hof;  // h'/f, finite at an area-radius horizon
  double r_min = 0.0, r_max = 0.0;
  double margin = 0.0;       // endpoints excluded by this absolute margin
  bool closed_at_r_min = false;  // allow evaluation at r_min itself
  std::string label;
  std::optional<double> known_adm_mass;
  bool asymptotically_flat = false;
  bool smooth_center = false;
  RadialProfile static_potential;  // set where the metric is static

  bool in_domain(double r) const {
    return r > r_min + margin && r < r_max - margin;
  }
  void require_in_domain(double r) const;

  // Constructors, all closed-form.
  static WarpedMetric3 flat();
  static WarpedMetric3 schwarzschild_isotropic(double m);
  static WarpedMetric3 schwarzschild_negative(double m);
  static WarpedMetric3 schwarzschild_area_radius(double m);
  static WarpedMetric3 hyperbolic();
  static WarpedMetric3 spherical();
  static WarpedMetric3 conformal_bump(double eps, double s);

  // By-name construction used by the CLI config ("metric" + parameters).
  static WarpedMetric3 by_name(const std::string& name, double m, double eps,
                               double s);
};

struct SphereGeometry {
  double r = 0.0;
  double H = 0.0;        // mean curvature w.r.t. outward (increasing-r) normal
  double A_coeff = 0.0;  // A = A_coeff * (induced metric); 2*A_coeff = H
  double area = 0.0;     // 4 pi h^2
  double K_gauss = 0.0;  // 1 / h^2
  double eta = 0.0;      // normal speed of the coordinate foliation, = f
};

struct StaticResidual {
  double sup_norm = 0.0;
  Vec r_samples;
  Vec component_rr, component_tt;  // orthonormal-frame diagonal components
  Vec norm_profile;
};

double sphere_mean_curvature(const WarpedMetric3& g, double r);
double scalar_curvature(const WarpedMetric3& g, double r);
SphereGeometry sphere_geometry(const WarpedMetric3& g, double r);

// Ricci in the orthonormal frame {f^-1 dr, h^-1 dtheta, (h sin)^-1 dphi}.
double ricci_rr(const WarpedMetric3& g, double r);
double ricci_tt(const WarpedMetric3& g, double r);

// Residual of -(Lap N) g + Hess N - N Ric on n_samples interior radii.
StaticResidual static_residual(const WarpedMetric3& g, const RadialProfile& N,
                               int n_samples = 256);
StaticResidual static_residual(const WarpedMetric3& g, const RadialProfile& N,
                               double r_lo, double r_hi, int n_samples);

}  // namespace qlmass
