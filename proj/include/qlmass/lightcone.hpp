#pragma once

#include <cstdint>
#include <map>

#include "qlmass/embedding.hpp"
#include "qlmass/mass.hpp"

namespace qlmass {

// Spacelike surface Sigma = {t = r = F(theta)} on the Minkowski light cone,
// restricted to axisymmetric profiles. Signature (-,+,+,+); the induced
// metric is F^2 times the round metric.
struct LightConeSurface {
  ThetaGridPtr grid;
  Vec F;
  Vec K_gauss;    // intrinsic curvature of the induced metric
  Vec Hvec_norm;  // Lorentzian norm of the mean curvature vector
};

// F = sum_l c_l P_l(cos theta) from {l -> c_l}.
Vec profile_from_legendre(const std::map<int, double>& coeffs,
                          const ThetaGrid& grid);

// Induced metric A = F^2, B = F^2 sin^2, cross-checked against the first
// fundamental form assembled from the 4-component parametrization (F, F n).
AxisymMetric2 lightcone_induced_metric(const Vec& F, ThetaGridPtr grid);

// |H| from H = Lap_sigma X applied to the four coordinate functions, using
// the conformal Laplacian Lap_sigma = F^-2 Lap_round.
Vec lightcone_mean_curvature_norm(const Vec& F, const ThetaGrid& grid);

LightConeSurface make_lightcone_surface(Vec F, ThetaGridPtr grid);

// Liu-Yau mass: H0 from the isometric embedding of the induced metric,
// m_LY = (1/8pi) int (H0 - |H|) dsigma. Positive unless F is constant.
MassReport liu_yau_lightcone(const Vec& F, ThetaGridPtr grid);

struct AcausalityWitness {
  double x1 = 0, phi1 = 0, x2 = 0, phi2 = 0;
  double dt2 = 0, dx2 = 0;
};

struct AcausalityResult {
  bool pass = true;
  long pairs_checked = 0;
  long pairs_skipped = 0;  // degenerate pairs (identical sampled points)
  AcausalityWitness witness;
};

// Minkowski separation of the surface points over (x, phi) pairs:
// returns true if the pair is causally related ((dt)^2 >= |dx|^2).
// degenerate is set when the two points coincide.
bool lightcone_pair_causal(const Vec& F, const ThetaGrid& grid, double x1,
                           double phi1, double x2, double phi2,
                           bool& degenerate, double& dt2, double& dx2);

AcausalityResult acausality_check(const Vec& F, const ThetaGrid& grid,
                                  long n_pairs, std::uint64_t seed);

}  // namespace qlmass
