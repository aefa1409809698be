#include "qlmass/lightcone.hpp"

#include <cmath>
#include <random>

namespace qlmass {

Vec profile_from_legendre(const std::map<int, double>& coeffs,
                          const ThetaGrid& grid) {
  Vec F = Vec::Zero(grid.size());
  for (const auto& [l, c] : coeffs) {
    require(l >= 0, ErrorKind::InvalidParameter, "negative Legendre degree");
    for (int i = 0; i < grid.size(); ++i)
      F[i] += c * legendre::p(l, grid.x()[i]);
  }
  return F;
}

AxisymMetric2 lightcone_induced_metric(const Vec& F, ThetaGridPtr grid) {
  const ThetaGrid& g = *grid;
  require(F.size() == g.size(), ErrorKind::InvalidParameter,
          "profile length does not match grid");
  require((F.array() > 0.0).all(), ErrorKind::InvalidParameter,
          "profile F must be positive");

  auto sigma = AxisymMetric2::conformal_round(F, grid);

  // Cross-check against the 4-component parametrization X = (F, F n) with
  // signature (-,+,+,+); catches sign or assembly mistakes in either route.
  Vec Fp = g.differentiate(F, 1);
  for (int i = 0; i < g.size(); ++i) {
    const double x = g.x()[i], s = g.sin_theta()[i];
    const double psi_p = Fp[i] * s + F[i] * x;   // d/dtheta of F sin
    const double chi_p = Fp[i] * x - F[i] * s;   // d/dtheta of F cos
    const double direct_tt = -Fp[i] * Fp[i] + psi_p * psi_p + chi_p * chi_p;
    const double direct_pp = (F[i] * s) * (F[i] * s);
    require(std::abs(direct_tt - sigma.A[i]) <= 1e-10 * (1.0 + sigma.A[i]),
            ErrorKind::InternalConsistency,
            "first fundamental form disagrees with the conformal factor");
    require(std::abs(direct_pp - sigma.B[i]) <= 1e-10 * (1.0 + sigma.B[i]),
            ErrorKind::InternalConsistency,
            "azimuthal metric coefficient disagreement");
  }
  sigma.provenance = "lightcone";
  return sigma;
}

Vec lightcone_mean_curvature_norm(const Vec& F, const ThetaGrid& g) {
  require(F.size() == g.size(), ErrorKind::InvalidParameter,
          "profile length does not match grid");
  require((F.array() > 0.0).all(), ErrorKind::InvalidParameter,
          "profile F must be positive");

  Vec Fx = g.deriv_x(F);
  Vec Fxx = g.deriv_x(Fx);
  Vec w = (F.array() * g.x().array()).matrix();  // F cos(theta)

  Vec lap_t = g.laplace_round(F);   // time component
  Vec lap_z = g.laplace_round(w);   // axial spatial component
  Vec H2(g.size());
  for (int i = 0; i < g.size(); ++i) {
    const double x = g.x()[i];
    const double omx2 = (1.0 - x) * (1.0 + x);
    // Lap of the equatorial components (F sin) e^{i phi}: the m = 1 operator
    // gives sin(theta) [ (1-x^2) F'' - 4x F' - 2F ].
    const double m1 = omx2 * Fxx[i] - 4.0 * x * Fx[i] - 2.0 * F[i];
    const double f4 = std::pow(F[i], 4);
    H2[i] =
        (-lap_t[i] * lap_t[i] + omx2 * m1 * m1 + lap_z[i] * lap_z[i]) / f4;
  }
  require((H2.array() > 0.0).all(), ErrorKind::NotSpacelike,
          "mean curvature vector fails to be spacelike");
  return H2.array().sqrt().matrix();
}

LightConeSurface make_lightcone_surface(Vec F, ThetaGridPtr grid) {
  LightConeSurface s;
  s.grid = grid;
  auto sigma = lightcone_induced_metric(F, grid);
  s.K_gauss = intrinsic_gauss_curvature(sigma);
  s.Hvec_norm = lightcone_mean_curvature_norm(F, *grid);
  s.F = std::move(F);
  return s;
}

MassReport liu_yau_lightcone(const Vec& F, ThetaGridPtr grid) {
  auto sigma = lightcone_induced_metric(F, grid);
  Vec K = intrinsic_gauss_curvature(sigma);
  require((K.array() > 0.0).all(), ErrorKind::PositiveCurvatureViolation,
          "lightcone surface needs positive Gaussian curvature");
  Vec Hn = lightcone_mean_curvature_norm(F, *grid);
  auto emb = embed_axisym(sigma);
  Vec ae = F.array().square().matrix();
  auto rep = liu_yau(emb.H0, Hn, ae, *grid);
  return rep;
}

bool lightcone_pair_causal(const Vec& F, const ThetaGrid& grid, double x1,
                           double phi1, double x2, double phi2,
                           bool& degenerate, double& dt2, double& dx2) {
  degenerate = (x1 == x2 && phi1 == phi2);
  if (degenerate) {
    dt2 = dx2 = 0.0;
    return false;
  }
  const double F1 = grid.interpolate(F, x1);
  const double F2 = grid.interpolate(F, x2);
  const double s1 = std::sqrt((1.0 - x1) * (1.0 + x1));
  const double s2 = std::sqrt((1.0 - x2) * (1.0 + x2));
  const double cosang = s1 * s2 * std::cos(phi1 - phi2) + x1 * x2;
  dt2 = (F1 - F2) * (F1 - F2);
  dx2 = F1 * F1 + F2 * F2 - 2.0 * F1 * F2 * cosang;
  return dt2 >= dx2;
}

AcausalityResult acausality_check(const Vec& F, const ThetaGrid& grid,
                                  long n_pairs, std::uint64_t seed) {
  require(n_pairs >= 1, ErrorKind::InvalidParameter, "need n_pairs >= 1");
  require((F.array() > 0.0).all(), ErrorKind::InvalidParameter,
          "profile F must be positive");

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  AcausalityResult out;
  for (long k = 0; k < n_pairs; ++k) {
    const double x1 = 1.0 - 2.0 * unif(rng);
    const double phi1 = 2.0 * M_PI * unif(rng);
    const double x2 = 1.0 - 2.0 * unif(rng);
    const double phi2 = 2.0 * M_PI * unif(rng);
    bool degenerate = false;
    double dt2 = 0.0, dx2 = 0.0;
    const bool causal =
        lightcone_pair_causal(F, grid, x1, phi1, x2, phi2, degenerate, dt2, dx2);
    if (degenerate) {
      ++out.pairs_skipped;
      continue;
    }
    ++out.pairs_checked;
    if (causal) {
      out.pass = false;
      out.witness = {x1, phi1, x2, phi2, dt2, dx2};
      return out;
    }
  }
  return out;
}

}  // namespace qlmass
