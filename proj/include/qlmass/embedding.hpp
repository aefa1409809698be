#pragma once

#include "qlmass/axisym_metric.hpp"

namespace qlmass {

// Isometric embedding of an axisymmetric metric into Euclidean 3-space as a
// surface of revolution: profile curve (rho(theta), z(theta)) with
// rho = sqrt(B), (rho')^2 + (z')^2 = A, z(0) = 0, z' >= 0.
// Curvatures are taken w.r.t. the outward normal, so the round sphere of
// radius c gets H0 = 2/c > 0.
struct RevolutionEmbedding {
  ThetaGridPtr grid;
  Vec rho, rho_prime, z, zprime;
  Vec H0, kappa1, kappa2;  // kappa1 meridional, kappa2 azimuthal
  Vec K_emb;               // kappa1 * kappa2
};

RevolutionEmbedding embed_axisym(const AxisymMetric2& sigma);

// Max nodewise defect of the Gauss equation 2K = H0^2 - |A0|^2, with K the
// intrinsic curvature of sigma and the right side from the embedding.
double gauss_verify(const RevolutionEmbedding& emb, const AxisymMetric2& sigma);

}  // namespace qlmass
