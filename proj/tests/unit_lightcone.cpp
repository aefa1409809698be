#include <doctest.h>

#include <cmath>

#include "qlmass/lightcone.hpp"

using namespace qlmass;

namespace {

Vec p2_profile(double eps, const ThetaGrid& g) {
  return profile_from_legendre({{0, 1.0}, {2, eps}}, g);
}

}  // namespace

TEST_CASE("induced metric of a constant profile") {
  auto grid = make_theta_grid(64);
  Vec F = Vec::Constant(64, 2.0);
  auto sigma = lightcone_induced_metric(F, grid);
  for (int i = 0; i < 64; ++i) {
    CHECK(sigma.A[i] == doctest::Approx(4.0));
    CHECK(sigma.B[i] ==
          doctest::Approx(4.0 * std::pow(grid->sin_theta()[i], 2)));
  }
}

TEST_CASE("induced metric cross-check for a curved profile") {
  auto grid = make_theta_grid(128);
  Vec F = p2_profile(0.1, *grid);
  CHECK_NOTHROW(lightcone_induced_metric(F, grid));
}

TEST_CASE("profile must be positive") {
  auto grid = make_theta_grid(32);
  Vec F = p2_profile(0.1, *grid);
  F[10] = 0.0;
  CHECK_THROWS_AS(lightcone_induced_metric(F, grid), Error);
}

TEST_CASE("mean curvature vector norm: round case") {
  auto grid = make_theta_grid(64);
  Vec F = Vec::Constant(64, 2.0);
  Vec Hn = lightcone_mean_curvature_norm(F, *grid);
  // <H,H> = 4/c^2: spacelike, |H| = 2/c = 1 at c = 2.
  for (int i = 0; i < 64; ++i) CHECK(std::abs(Hn[i] - 1.0) < 1e-11);
}

TEST_CASE("mean curvature vector norm: P2 profile stays spacelike") {
  auto grid = make_theta_grid(128);
  Vec Hn = lightcone_mean_curvature_norm(p2_profile(0.1, *grid), *grid);
  for (int i = 0; i < 128; ++i) {
    CHECK(std::isfinite(Hn[i]));
    CHECK(Hn[i] > 0.0);
  }
}

TEST_CASE("surface record carries curvature and norm samples") {
  auto grid = make_theta_grid(128);
  auto s = make_lightcone_surface(p2_profile(0.1, *grid), grid);
  CHECK((s.K_gauss.array() > 0.0).all());
  CHECK((s.Hvec_norm.array() > 0.0).all());
}

TEST_CASE("liu_yau on the light cone: hyperplane case vanishes") {
  auto grid = make_theta_grid(128);
  Vec F = Vec::Constant(128, 1.0);
  auto rep = liu_yau_lightcone(F, grid);
  CHECK(std::abs(*rep.m_ly) <= 1e-8);
  // Round consistency: H0 = 2 = |H| nodewise within 1e-9 is implied by the
  // mass bound at this tolerance; check the area too.
  CHECK(rep.area == doctest::Approx(4.0 * M_PI));
}

TEST_CASE("liu_yau on the light cone: positivity for a curved profile") {
  auto grid = make_theta_grid(128);
  auto rep = liu_yau_lightcone(p2_profile(0.1, *grid), grid);
  CHECK(*rep.m_ly > 0.0);
  // Regression anchor, first computed at n = 128 (converged to ~1e-14).
  CHECK(*rep.m_ly == doctest::Approx(0.00561993443208596).epsilon(1e-9));
}

TEST_CASE("liu_yau on the light cone: scaling covariance") {
  auto grid = make_theta_grid(128);
  Vec F = p2_profile(0.1, *grid);
  double m1 = *liu_yau_lightcone(F, grid).m_ly;
  double m2 = *liu_yau_lightcone((2.0 * F.array()).matrix(), grid).m_ly;
  CHECK(std::abs(m2 - 2.0 * m1) <= 1e-8 * std::abs(m2));
}

TEST_CASE("liu_yau on the light cone: curvature hypothesis enforced") {
  auto grid = make_theta_grid(128);
  // Amplitude 0.3 exceeds the 2/7 threshold where K turns negative at the
  // equator.
  try {
    liu_yau_lightcone(p2_profile(0.3, *grid), grid);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PositiveCurvatureViolation);
  }
}

TEST_CASE("acausality: constant profile, 10^4 pairs") {
  auto grid = make_theta_grid(64);
  Vec F = Vec::Constant(64, 2.0);
  auto res = acausality_check(F, *grid, 10000, 0);
  CHECK(res.pass);
  CHECK(res.pairs_checked == 10000);
}

TEST_CASE("acausality: P2 profile with seed 42") {
  auto grid = make_theta_grid(128);
  auto res = acausality_check(p2_profile(0.1, *grid), *grid, 10000, 42);
  CHECK(res.pass);
}

TEST_CASE("acausality: degenerate pair is skipped, not a violation") {
  auto grid = make_theta_grid(64);
  Vec F = p2_profile(0.1, *grid);
  bool degenerate = false;
  double dt2 = 0, dx2 = 0;
  bool causal =
      lightcone_pair_causal(F, *grid, 0.3, 1.0, 0.3, 1.0, degenerate, dt2, dx2);
  CHECK(degenerate);
  CHECK(!causal);

  // Antipodal pair on the same ray through the origin never occurs on the
  // sphere, but points on a common ray would be null-related; distinct
  // directions are strictly spacelike-related.
  causal = lightcone_pair_causal(F, *grid, 0.3, 1.0, -0.3, 2.0, degenerate, dt2,
                                 dx2);
  CHECK(!degenerate);
  CHECK(!causal);
  CHECK(dx2 > dt2);
}

TEST_CASE("acausality check is deterministic in the seed") {
  auto grid = make_theta_grid(64);
  Vec F = p2_profile(0.05, *grid);
  auto a = acausality_check(F, *grid, 500, 7);
  auto b = acausality_check(F, *grid, 500, 7);
  CHECK(a.pass == b.pass);
  CHECK(a.pairs_checked == b.pairs_checked);
}

TEST_CASE("legendre profile builder") {
  auto grid = make_theta_grid(32);
  Vec F = profile_from_legendre({{0, 1.5}, {1, 0.2}}, *grid);
  for (int i = 0; i < 32; ++i)
    CHECK(F[i] == doctest::Approx(1.5 + 0.2 * grid->x()[i]));
  CHECK_THROWS_AS(profile_from_legendre({{-1, 1.0}}, *grid), Error);
}
