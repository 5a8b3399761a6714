#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "cmclab/ambient.hpp"

using namespace cmclab;

namespace {
AmbientVec vec3(double x, double y, double z) {
  AmbientVec v(3);
  v << x, y, z;
  return v;
}
}  // namespace

TEST_CASE("conformal factor closed forms") {
  auto flat = AmbientModel::make(0, 3, RadiusConvention::GaugeUnit);
  CHECK(flat.conformal_factor(vec3(0.3, -0.1, 0.7)) == doctest::Approx(1.0).epsilon(1e-15));

  auto sph = AmbientModel::make(1, 3, RadiusConvention::GeodesicUnit);
  CHECK(sph.conformal_factor(vec3(2.0, 0.0, 0.0)) == doctest::Approx(0.25).epsilon(1e-14));

  auto hyp = AmbientModel::make(-1, 3, RadiusConvention::GaugeUnit);
  CHECK(hyp.conformal_factor(vec3(1.0, 0.0, 0.0)) ==
        doctest::Approx(16.0 / 9.0).epsilon(1e-14));
  CHECK_THROWS_AS(hyp.conformal_factor(vec3(2.0, 0.0, 0.0)), std::domain_error);
}

TEST_CASE("potential closed forms") {
  auto flat = AmbientModel::make(0, 3, RadiusConvention::GaugeUnit);
  CHECK(flat.potential_mu(vec3(0.2, 0.4, -0.5)) == doctest::Approx(1.0).epsilon(1e-15));

  auto sph = AmbientModel::make(1, 3, RadiusConvention::GeodesicUnit);
  CHECK(sph.potential_mu(vec3(0.0, 2.0, 0.0)) == doctest::Approx(0.0).epsilon(1e-15));

  // gauge hyperbolic ball: mu0 = sqrt(2), radius 2(sqrt 2 - 1)
  auto hyp = AmbientModel::make(-1, 3, RadiusConvention::GaugeUnit);
  CHECK(hyp.radius() == doctest::Approx(2.0 * (std::sqrt(2.0) - 1.0)).epsilon(1e-15));
  CHECK(hyp.mu0() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("ball radii under both conventions") {
  CHECK(AmbientModel::gauge_unit_radius(0, RadiusConvention::GaugeUnit) == 1.0);
  CHECK(AmbientModel::gauge_unit_radius(0, RadiusConvention::GeodesicUnit) == 1.0);
  CHECK(AmbientModel::gauge_unit_radius(1, RadiusConvention::GaugeUnit) ==
        doctest::Approx(2.0).epsilon(1e-15));
  CHECK(AmbientModel::gauge_unit_radius(-1, RadiusConvention::GeodesicUnit) ==
        doctest::Approx(0.9242343145).epsilon(1e-9));

  // invert the radial geodesic distance numerically as an independent route
  for (int c : {-1, 1}) {
    const double r = AmbientModel::gauge_unit_radius(c, RadiusConvention::GeodesicUnit);
    const double dist =
        oracle::integrate([&](double s) { return 1.0 / (1.0 + c * s * s / 4.0); }, 0.0, r);
    CHECK(dist == doctest::Approx(1.0).epsilon(1e-12));
  }

  // gauge normalization makes the position vector unit on the boundary sphere
  for (int c : {-1, 0}) {
    auto m = AmbientModel::make(c, 3, RadiusConvention::GaugeUnit);
    CHECK(m.boundary_gauge_norm() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(c + m.mu0() * m.mu0() == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("spherical gauge ball is rejected (vanishing boundary potential)") {
  CHECK_THROWS_AS(AmbientModel::make(1, 3, RadiusConvention::GaugeUnit),
                  std::invalid_argument);
  CHECK_THROWS_AS(AmbientModel::make(2, 3, RadiusConvention::GaugeUnit),
                  std::invalid_argument);
}

TEST_CASE("connection coefficients reproduce the position derivative identity") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> gauss;
  for (int c : {-1, 0, 1}) {
    auto model = AmbientModel::make(c, 4,
                                    c == 1 ? RadiusConvention::GeodesicUnit
                                           : RadiusConvention::GaugeUnit);
    const int m = model.ambient_dim();
    for (int trial = 0; trial < 100; ++trial) {
      AmbientVec x(m), dir(m);
      for (int i = 0; i < m; ++i) x(i) = gauss(rng);
      x *= 0.9 * model.radius() / x.norm();
      for (int i = 0; i < m; ++i) dir(i) = gauss(rng);
      auto gamma = model.conformal_christoffels(x);
      AmbientVec lhs = dir;
      for (int k = 0; k < m; ++k) {
        double acc = 0.0;
        for (int a = 0; a < m; ++a)
          for (int b = 0; b < m; ++b)
            acc += gamma[(static_cast<size_t>(k) * m + a) * m + b] * dir(a) * x(b);
        lhs(k) += acc;
      }
      CHECK((lhs - model.potential_mu(x) * dir).norm() <= 1e-12 * (1.0 + dir.norm()));
      // the fast contraction path agrees with the assembled array
      AmbientVec fast = dir + model.christoffel_apply(dir, x, x);
      CHECK((lhs - fast).norm() <= 1e-13 * (1.0 + lhs.norm()));
    }
  }
}

TEST_CASE("connection vanishes at the center and in the flat model") {
  auto sph = AmbientModel::make(1, 3, RadiusConvention::GeodesicUnit);
  for (double g : sph.conformal_christoffels(vec3(0, 0, 0))) CHECK(g == 0.0);
  auto flat = AmbientModel::make(0, 3, RadiusConvention::GaugeUnit);
  for (double g : flat.conformal_christoffels(vec3(0.4, -0.2, 0.1))) CHECK(g == 0.0);
}

TEST_CASE("boundary sphere shape") {
  auto flat = AmbientModel::make(0, 3, RadiusConvention::GaugeUnit);
  auto [k0, m0] = flat.boundary_sphere_shape();
  CHECK(k0 == doctest::Approx(-1.0));
  CHECK(m0 == doctest::Approx(1.0));

  auto hyp = AmbientModel::make(-1, 3, RadiusConvention::GaugeUnit);
  auto [k1, m1] = hyp.boundary_sphere_shape();
  CHECK(k1 == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-14));
  CHECK(m1 == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("gauge hyperbolic ball has geodesic radius log(1 + sqrt 2)") {
  auto hyp = AmbientModel::make(-1, 3, RadiusConvention::GaugeUnit);
  const double dist = oracle::integrate(
      [](double s) { return 1.0 / (1.0 - s * s / 4.0); }, 0.0, hyp.radius());
  CHECK(dist == doctest::Approx(std::log(1.0 + std::sqrt(2.0))).epsilon(1e-12));
}
