#include "qlmass/embedding.hpp"

#include <cmath>

namespace qlmass {

RevolutionEmbedding embed_axisym(const AxisymMetric2& sigma) {
  sigma.validate();
  const ThetaGrid& g = *sigma.grid;
  const int n = g.size();

  // q = sqrt(B)/sin is smooth in x = cos(theta) by pole regularity; the
  // profile radius is rho = q sin.
  Vec q = (sigma.B.array() / (1.0 - g.x().array().square())).sqrt().matrix();
  Vec qp = g.differentiate(q, 1);
  Vec qpp = g.differentiate(q, 2);

  RevolutionEmbedding emb;
  emb.grid = sigma.grid;
  emb.rho = (q.array() * g.sin_theta().array()).matrix();
  emb.rho_prime =
      (qp.array() * g.sin_theta().array() + q.array() * g.x().array()).matrix();
  const Vec& rho_p = emb.rho_prime;
  Vec rho_pp = (qpp.array() * g.sin_theta().array() +
                2.0 * qp.array() * g.x().array() -
                q.array() * g.sin_theta().array())
                   .matrix();

  Vec z2 = (sigma.A.array() - rho_p.array().square()).matrix();
  require((z2.array() > 0.0).all(), ErrorKind::NotRevolutionEmbeddable,
          "A - (rho')^2 must stay positive for a revolution embedding");

  Vec K = intrinsic_gauss_curvature(sigma);
  require((K.array() > 0.0).all(), ErrorKind::PositiveCurvatureViolation,
          "intrinsic Gaussian curvature must be positive to embed");
  emb.zprime = z2.array().sqrt().matrix();
  emb.z = g.antiderivative_theta(emb.zprime);

  Vec Ap = g.differentiate(sigma.A, 1);
  Vec sqrtA = sigma.A.array().sqrt().matrix();
  emb.kappa1.resize(n);
  emb.kappa2.resize(n);
  for (int i = 0; i < n; ++i) {
    emb.kappa1[i] = -(rho_pp[i] - rho_p[i] * Ap[i] / (2.0 * sigma.A[i])) /
                    (sqrtA[i] * emb.zprime[i]);
    emb.kappa2[i] = emb.zprime[i] / (emb.rho[i] * sqrtA[i]);
  }
  emb.H0 = emb.kappa1 + emb.kappa2;
  emb.K_emb = (emb.kappa1.array() * emb.kappa2.array()).matrix();
  return emb;
}

double gauss_verify(const RevolutionEmbedding& emb, const AxisymMetric2& sigma) {
  require(emb.grid == sigma.grid, ErrorKind::GridMismatch,
          "embedding and metric live on different grids");
  Vec K = intrinsic_gauss_curvature(sigma);
  double worst = 0.0;
  for (int i = 0; i < emb.grid->size(); ++i) {
    double rhs = emb.H0[i] * emb.H0[i] - emb.kappa1[i] * emb.kappa1[i] -
                 emb.kappa2[i] * emb.kappa2[i];
    worst = std::max(worst, std::abs(2.0 * K[i] - rhs));
  }
  return worst;
}

}  // namespace qlmass
