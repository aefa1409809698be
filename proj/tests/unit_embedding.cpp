#include <doctest.h>

#include <cmath>

#include "qlmass/embedding.hpp"
#include "qlmass/linearized.hpp"

using namespace qlmass;

namespace {

// Closed-form mean curvature of the spheroid (a sin cos phi, a sin sin phi,
// b cos) w.r.t. the outward normal.
double spheroid_H(double a, double b, double x) {
  double w = std::sqrt(a * a * x * x + b * b * (1.0 - x * x));
  return b / (a * w) + a * b / (w * w * w);
}

Vec conformal_p2(double eps, const ThetaGrid& g) {
  Vec F(g.size());
  for (int i = 0; i < g.size(); ++i) F[i] = 1.0 + eps * legendre::p(2, g.x()[i]);
  return F;
}

}  // namespace

TEST_CASE("round sphere embeds with constant curvatures") {
  auto grid = make_theta_grid(64);
  auto sigma = AxisymMetric2::round(3.0, grid);
  auto emb = embed_axisym(sigma);
  for (int i = 0; i < grid->size(); ++i) {
    CHECK(std::abs(emb.H0[i] - 2.0 / 3.0) < 1e-11);
    CHECK(std::abs(emb.kappa1[i] - 1.0 / 3.0) < 1e-11);
    CHECK(std::abs(emb.kappa2[i] - 1.0 / 3.0) < 1e-11);
  }
  CHECK(gauss_verify(emb, sigma) < 1e-12);
  // Profile is the circle of radius 3: z runs 0..6.
  CHECK(std::abs(grid->pole_value(emb.z, false) - 6.0) < 1e-10);
}

TEST_CASE("spheroid embedding recovers the closed-form mean curvature") {
  auto grid = make_theta_grid(256);
  auto sigma = AxisymMetric2::spheroid(1.0, 1.2, grid);
  auto emb = embed_axisym(sigma);
  double sup = 0.0;
  for (int i = 0; i < grid->size(); ++i)
    sup = std::max(sup, std::abs(emb.H0[i] - spheroid_H(1.0, 1.2, grid->x()[i])));
  CHECK(sup <= 1e-6);
  CHECK(gauss_verify(emb, sigma) <= 1e-6);
}

TEST_CASE("isometry roundtrip holds nodewise") {
  auto grid = make_theta_grid(128);
  auto sigma = AxisymMetric2::conformal_round(conformal_p2(0.1, *grid), grid);
  auto emb = embed_axisym(sigma);
  const Vec& rho_p = emb.rho_prime;
  for (int i = 0; i < grid->size(); ++i) {
    CHECK(std::abs(emb.rho[i] * emb.rho[i] - sigma.B[i]) <
          1e-9 * (1.0 + sigma.B[i]));
    double lhs = rho_p[i] * rho_p[i] + emb.zprime[i] * emb.zprime[i];
    CHECK(std::abs(lhs - sigma.A[i]) < 1e-9 * (1.0 + sigma.A[i]));
    CHECK(std::abs(emb.H0[i] - emb.kappa1[i] - emb.kappa2[i]) < 1e-14);
  }
}

TEST_CASE("conformally round metric: Gauss defect small at n=256") {
  auto grid = make_theta_grid(256);
  auto sigma = AxisymMetric2::conformal_round(conformal_p2(0.1, *grid), grid);
  auto emb = embed_axisym(sigma);
  CHECK(gauss_verify(emb, sigma) <= 1e-5);
}

TEST_CASE("intrinsic curvature closed forms") {
  auto grid = make_theta_grid(64);
  auto round2 = AxisymMetric2::round(2.0, grid);
  Vec K = intrinsic_gauss_curvature(round2);
  for (int i = 0; i < grid->size(); ++i) CHECK(std::abs(K[i] - 0.25) < 1e-12);

  // Constant conformal factor c: K = 1/c^2 via the conformal formula.
  auto constf = AxisymMetric2::conformal_round(Vec::Constant(64, 3.0), grid);
  Vec Kc = intrinsic_gauss_curvature(constf);
  for (int i = 0; i < grid->size(); ++i) CHECK(std::abs(Kc[i] - 1.0 / 9.0) < 1e-12);

  // F = 1 + 0.2 P2 stays positively curved.
  auto sig = AxisymMetric2::conformal_round(conformal_p2(0.2, *grid), grid);
  Vec Ks = intrinsic_gauss_curvature(sig);
  for (int i = 0; i < grid->size(); ++i) CHECK(Ks[i] > 0.0);
}

TEST_CASE("conformal and coefficient curvature formulas agree") {
  auto grid = make_theta_grid(96);
  Vec F = conformal_p2(0.15, *grid);
  auto conf = AxisymMetric2::conformal_round(F, grid);
  auto raw = AxisymMetric2::from_coefficients(conf.A, conf.B, grid, "raw");
  Vec K1 = intrinsic_gauss_curvature(conf);
  Vec K2 = intrinsic_gauss_curvature(raw);
  CHECK((K1 - K2).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("embedding error taxonomy") {
  auto grid = make_theta_grid(128);

  // K < 0 near the equator once the P2 amplitude passes 2/7.
  auto bad = AxisymMetric2::conformal_round(conformal_p2(0.35, *grid), grid);
  CHECK_THROWS_AS(embed_axisym(bad), Error);
  try {
    embed_axisym(bad);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PositiveCurvatureViolation);
  }

  // Steep odd profile: the revolution profile would need (rho')^2 > A.
  Vec F(grid->size());
  for (int i = 0; i < grid->size(); ++i)
    F[i] = 1.0 + 0.8 * legendre::p(3, grid->x()[i]);
  auto steep = AxisymMetric2::conformal_round(F, grid);
  try {
    embed_axisym(steep);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotRevolutionEmbeddable);
  }

  // Pole regularity failure.
  Vec A = Vec::Constant(grid->size(), 1.0);
  Vec B = (4.0 * (1.0 - grid->x().array().square())).matrix();
  auto irregular = AxisymMetric2::from_coefficients(A, B, grid, "bad-poles");
  CHECK_THROWS_AS(embed_axisym(irregular), Error);
}

TEST_CASE("H0 is invariant under reflection of the profile") {
  auto grid = make_theta_grid(96);
  auto sigma = AxisymMetric2::conformal_round(conformal_p2(0.12, *grid), grid);
  auto emb = embed_axisym(sigma);
  const int n = grid->size();
  // Reflection-symmetric sigma: H0 must be palindromic on the symmetric grid.
  for (int i = 0; i < n; ++i)
    CHECK(std::abs(emb.H0[i] - emb.H0[n - 1 - i]) < 1e-10);

  // Reparametrized metric theta -> pi - theta gives the reversed field.
  auto rev = AxisymMetric2::from_coefficients(sigma.A.reverse(), sigma.B.reverse(),
                                              grid, "reflected");
  auto emb_rev = embed_axisym(rev);
  for (int i = 0; i < n; ++i)
    CHECK(std::abs(emb_rev.H0[i] - emb.H0[n - 1 - i]) < 1e-10);
}

TEST_CASE("gauss defect decays at least fourth order under doubling") {
  // Analytic non-polynomial conformal factor; truncation dominates at n=16.
  auto make_sigma = [](int n) {
    auto grid = make_theta_grid(n);
    Vec F(n);
    for (int i = 0; i < n; ++i) F[i] = 1.0 + 0.25 / (1.5 - grid->x()[i]);
    return AxisymMetric2::conformal_round(F, grid);
  };
  auto s16 = make_sigma(16);
  auto s32 = make_sigma(32);
  double d16 = gauss_verify(embed_axisym(s16), s16);
  double d32 = gauss_verify(embed_axisym(s32), s32);
  CHECK(d16 >= 16.0 * d32);
  CHECK(d16 >= 8.0 * d32);  // acceptance form of the same bound
}

TEST_CASE("linearized embedding: dilation tensor") {
  auto grid = make_theta_grid(64);
  auto h = AxisymTensor2::round_multiple(2.0, grid);
  auto Y = linearized_embedding_round(h);
  CHECK(Y.residual < 1e-12);
  CHECK(Y.pole_norm < 1e-12);
  // Under the pole normalization the dilation generator appears as X - zhat.
  for (int i = 0; i < grid->size(); ++i) {
    CHECK(std::abs(Y.a[i] - (1.0 - grid->x()[i])) < 1e-10);
    CHECK(std::abs(Y.b[i] - grid->sin_theta()[i]) < 1e-10);
    CHECK(std::abs(Y.c[i]) < 1e-12);
  }
}

TEST_CASE("linearized embedding: zero tensor fixes the kernel") {
  auto grid = make_theta_grid(48);
  auto Y = linearized_embedding_round(AxisymTensor2::zero(grid));
  CHECK(Y.residual < 1e-13);
  CHECK(Y.a.cwiseAbs().maxCoeff() < 1e-12);
  CHECK(Y.b.cwiseAbs().maxCoeff() < 1e-12);
  CHECK(Y.c.cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("linearized embedding: differential rotation is reproduced") {
  auto grid = make_theta_grid(64);
  Vec w = grid->x();  // w(theta) = cos(theta), a pure l=2 azimuthal mode
  auto h = AxisymTensor2::lie_rotational(w, grid);
  auto Y = linearized_embedding_round(h);
  CHECK(Y.residual <= 1e-8);
  for (int i = 0; i < grid->size(); ++i) {
    CHECK(std::abs(Y.c[i] - w[i] * grid->sin_theta()[i]) < 1e-10);
    CHECK(std::abs(Y.a[i]) < 1e-11);
    CHECK(std::abs(Y.b[i]) < 1e-11);
  }
}

TEST_CASE("linearized residual is linear in the data") {
  // Rough tensor with slow mode decay so the truncation residual is visible.
  auto grid = make_theta_grid(16);
  AxisymTensor2 h = AxisymTensor2::zero(grid);
  for (int i = 0; i < grid->size(); ++i) {
    double x = grid->x()[i];
    h.tt[i] = 0.1 / (1.3 - x);
    h.pp[i] = (1.0 - x * x) * 0.1 / (1.3 - x);
  }
  AxisymTensor2 h2 = h;
  h2.tt *= 2.0;
  h2.pp *= 2.0;
  double r1 = linearized_embedding_round(h).residual;
  double r2 = linearized_embedding_round(h2).residual;
  CHECK(r1 > 1e-12);  // measurably above rounding
  CHECK(std::abs(r2 - 2.0 * r1) < 1e-9 * (1.0 + r2));
}

TEST_CASE("quadratic closeness: dilation path is exactly second order") {
  auto grid = make_theta_grid(48);
  auto h = AxisymTensor2::round_multiple(2.0, grid);
  auto qc = quadratic_closeness_check(h, {0.1, 0.05, 0.025, 0.0125});
  CHECK(std::abs(qc.slope - 2.0) <= 0.05);
  // (1+t)^2 sigma - sigma - 2t sigma = t^2 sigma exactly.
  for (size_t k = 0; k < qc.t.size(); ++k)
    CHECK(std::abs(qc.defect[k] - qc.t[k] * qc.t[k]) < 1e-12);
}

TEST_CASE("quadratic closeness: rotation path") {
  auto grid = make_theta_grid(48);
  Vec w = grid->x();
  auto h = AxisymTensor2::lie_rotational(w, grid);
  auto qc = quadratic_closeness_check(h, {0.1, 0.05, 0.025, 0.0125});
  CHECK(std::abs(qc.slope - 2.0) <= 0.1);
}

TEST_CASE("quadratic closeness: zero tensor is degenerate") {
  auto grid = make_theta_grid(32);
  auto h = AxisymTensor2::zero(grid);
  try {
    quadratic_closeness_check(h, {0.1, 0.05, 0.025, 0.0125});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateMeasurement);
  }
}

TEST_CASE("quadratic closeness input validation") {
  auto grid = make_theta_grid(32);
  auto h = AxisymTensor2::round_multiple(2.0, grid);
  CHECK_THROWS_AS(quadratic_closeness_check(h, {0.1, 0.05, 0.025}), Error);
  CHECK_THROWS_AS(quadratic_closeness_check(h, {0.05, 0.1, 0.025, 0.01}), Error);
}
