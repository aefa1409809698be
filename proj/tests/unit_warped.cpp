#include <doctest.h>

#include <cmath>
#include <vector>

#include "qlmass/warped.hpp"

using namespace qlmass;

namespace {

std::vector<WarpedMetric3> all_constructors() {
  return {WarpedMetric3::flat(),
          WarpedMetric3::schwarzschild_isotropic(2.0),
          WarpedMetric3::schwarzschild_negative(2.0),
          WarpedMetric3::schwarzschild_area_radius(1.0),
          WarpedMetric3::hyperbolic(),
          WarpedMetric3::spherical(),
          WarpedMetric3::conformal_bump(0.05, 1.0)};
}

std::vector<double> sample_radii(const WarpedMetric3& g) {
  const double lo = g.r_min + g.margin;
  const double width = std::min(5.0, 0.9 * (g.r_max - g.r_min - 2.0 * g.margin));
  std::vector<double> rs;
  for (int i = 1; i <= 6; ++i) rs.push_back(lo + width * i / 7.0);
  return rs;
}

}  // namespace

TEST_CASE("sphere mean curvature closed forms") {
  CHECK(sphere_mean_curvature(WarpedMetric3::flat(), 2.0) ==
        doctest::Approx(1.0).epsilon(1e-14));

  // Negative-mass Schwarzschild, m=2 at r=0.5: the inward-bent sphere.
  CHECK(sphere_mean_curvature(WarpedMetric3::schwarzschild_negative(2.0), 0.5) ==
        doctest::Approx(-12.0).epsilon(1e-12));

  // Isotropic Schwarzschild, m=2 at r=10, u = 1.1.
  CHECK(sphere_mean_curvature(WarpedMetric3::schwarzschild_isotropic(2.0), 10.0) ==
        doctest::Approx(1.98 / 14.641).epsilon(1e-12));
}

TEST_CASE("scalar curvature of the model metrics") {
  CHECK(std::abs(scalar_curvature(WarpedMetric3::flat(), 1.7)) < 1e-13);
  CHECK(std::abs(scalar_curvature(WarpedMetric3::schwarzschild_isotropic(2.0), 5.0)) <
        1e-10);
  CHECK(scalar_curvature(WarpedMetric3::hyperbolic(), 1.0) ==
        doctest::Approx(-6.0).epsilon(1e-10));
  CHECK(scalar_curvature(WarpedMetric3::spherical(), 0.9) ==
        doctest::Approx(6.0).epsilon(1e-10));
  CHECK(std::abs(scalar_curvature(WarpedMetric3::schwarzschild_area_radius(1.0), 3.0)) <
        1e-12);
}

TEST_CASE("conformal bump scalar curvature against the conformal-flat oracle") {
  // Independent route: for g = u^4 (flat), R = -8 u^-5 (u'' + 2u'/r).
  const double eps = 0.05, s = 1.0;
  auto g = WarpedMetric3::conformal_bump(eps, s);
  for (double r : {0.3, 0.7, 1.1, 1.9, 3.2}) {
    double e = std::exp(-r * r / (s * s));
    double u = 1.0 + eps * e;
    double u1 = -2.0 * eps * r * e / (s * s);
    double u2 = eps * e * (4.0 * r * r / (s * s * s * s) - 2.0 / (s * s));
    double oracle = -8.0 * std::pow(u, -5.0) * (u2 + 2.0 * u1 / r);
    CHECK(scalar_curvature(g, r) == doctest::Approx(oracle).epsilon(1e-10));
  }
}

TEST_CASE("sphere geometry records") {
  auto s = sphere_geometry(WarpedMetric3::flat(), 3.0);
  CHECK(s.H == doctest::Approx(2.0 / 3.0));
  CHECK(s.A_coeff == doctest::Approx(1.0 / 3.0));
  CHECK(s.area == doctest::Approx(36.0 * M_PI));
  CHECK(s.K_gauss == doctest::Approx(1.0 / 9.0));
  CHECK(s.eta == doctest::Approx(1.0));

  // Equator of the round 3-sphere is minimal.
  auto eq = sphere_geometry(WarpedMetric3::spherical(), M_PI / 2.0);
  CHECK(std::abs(eq.H) < 1e-15);
  CHECK(eq.area == doctest::Approx(4.0 * M_PI));

  // Horizon of area-radius Schwarzschild.
  auto hor = sphere_geometry(WarpedMetric3::schwarzschild_area_radius(1.0), 2.0);
  CHECK(hor.H == 0.0);
}

TEST_CASE("umbilic identity and Gauss equation across constructors") {
  for (const auto& g : all_constructors()) {
    for (double r : sample_radii(g)) {
      auto s = sphere_geometry(g, r);
      CHECK(std::abs(2.0 * s.A_coeff - s.H) < 1e-13 * (1.0 + std::abs(s.H)));
      CHECK(s.K_gauss > 0.0);
      // 2K = R - 2 Ric(nu,nu) + H^2 - |A|^2 with |A|^2 = 2 A_coeff^2.
      double lhs = 2.0 * s.K_gauss;
      double rhs = scalar_curvature(g, r) - 2.0 * ricci_rr(g, r) + s.H * s.H -
                   2.0 * s.A_coeff * s.A_coeff;
      CHECK(std::abs(lhs - rhs) < 1e-9 * (1.0 + std::abs(lhs)));
    }
  }
}

TEST_CASE("static residual vanishes for the four model potentials") {
  auto check_static = [](const WarpedMetric3& g, double tol) {
    REQUIRE(g.static_potential.valid());
    auto res = static_residual(g, g.static_potential, 256);
    CHECK(res.sup_norm <= tol);
  };
  check_static(WarpedMetric3::flat(), 1e-12);
  check_static(WarpedMetric3::schwarzschild_isotropic(1.0), 1e-9);
  check_static(WarpedMetric3::hyperbolic(), 1e-9);
  check_static(WarpedMetric3::spherical(), 1e-9);
  check_static(WarpedMetric3::schwarzschild_area_radius(1.0), 1e-9);
}

TEST_CASE("static residual detects a non-static pair") {
  auto g = WarpedMetric3::conformal_bump(0.1, 1.0);
  auto res = static_residual(g, RadialProfile::constant(1.0), 64);
  CHECK(res.sup_norm > 1e-4);
}

TEST_CASE("static residual rejects non-finite potentials") {
  auto g = WarpedMetric3::flat();
  RadialProfile bad([](double) { return std::nan(""); },
                    [](double) { return 0.0; }, [](double) { return 0.0; });
  CHECK_THROWS_AS(static_residual(g, bad, 16), Error);
}

TEST_CASE("domain checks") {
  CHECK_THROWS_AS(sphere_mean_curvature(WarpedMetric3::flat(), -1.0), Error);
  CHECK_THROWS_AS(sphere_mean_curvature(WarpedMetric3::schwarzschild_negative(2.0), 1.5),
                  Error);
  try {
    sphere_mean_curvature(WarpedMetric3::flat(), -1.0);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OutOfRange);
  }
}

TEST_CASE("sampled radial profiles reproduce closed-form derivatives") {
  auto grid = RadialGrid::gauss(0.5, 3.0, 48);
  Vec vals(grid.size());
  for (int i = 0; i < grid.size(); ++i) vals[i] = std::sinh(grid.nodes()[i]);
  auto prof = RadialProfile::from_samples(vals, grid);
  for (double r : {0.8, 1.3, 2.1, 2.7}) {
    CHECK(prof(r) == doctest::Approx(std::sinh(r)).epsilon(1e-11));
    CHECK(prof.d1(r) == doctest::Approx(std::cosh(r)).epsilon(1e-9));
    CHECK(prof.d2(r) == doctest::Approx(std::sinh(r)).epsilon(1e-8));
  }
}
