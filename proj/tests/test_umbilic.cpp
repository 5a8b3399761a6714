#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "doctest.h"

#include "cmclab/catalog.hpp"
#include "cmclab/umbilic.hpp"

using namespace cmclab;

namespace {
constexpr double kPi = std::numbers::pi;
using Complex = std::complex<double>;
}  // namespace

TEST_CASE("hopf field magnitude matches the umbilicity norm") {
  CatalogEntry cat = critical_catenoid();
  HopfField field = hopf_field(cat.immersion, 64);
  FieldContext ctx = build_field_context(cat.immersion, 64);
  GridScalar phi_sq = sample_field(ctx, [](const ParamVec&, const FundamentalData& fd) {
    return fd.phi_sq;
  });
  for (size_t i = 0; i < field.w.size(); ++i)
    CHECK(std::norm(field.w[i]) ==
          doctest::Approx(phi_sq.v[i] / 2.0).epsilon(1e-10));
}

TEST_CASE("catenoid carries no umbilic points") {
  CatalogEntry cat = critical_catenoid();
  HopfField field = hopf_field(cat.immersion, 128);
  UmbilicReport rep = detect_umbilics(field);
  CHECK(rep.points.empty());
  CHECK(rep.theta_interior == 0);
  CHECK(rep.theta_boundary == 0);
}

TEST_CASE("umbilical entries are rejected: zeros not isolated") {
  CatalogEntry cap = spherical_cap(2, 1.0);
  HopfField field = hopf_field(cap.immersion, 64);
  CHECK_THROWS_AS(detect_umbilics(field), hypothesis_error);
}

TEST_CASE("synthetic center zero of order two") {
  SyntheticPhi phi;
  phi.zeros = {{Complex(0.0, 0.0), 2}};
  HopfField field = phi.field(256);
  UmbilicReport rep = detect_umbilics(field);
  REQUIRE(rep.points.size() == 1);
  CHECK(rep.points[0].multiplicity == 2);
  CHECK(!rep.points[0].on_boundary);
  CHECK(rep.theta_interior == 2);
  CHECK(rep.theta_boundary == 0);
}

TEST_CASE("synthetic boundary zero of order one") {
  SyntheticPhi phi;
  phi.zeros = {{Complex(1.0, 0.0), 1}};
  // the boundary integrand is identically one half
  for (double theta : {0.3, 1.0, 2.5, 4.0})
    CHECK(phi.nu_log_phi(theta, true) == doctest::Approx(0.5).epsilon(1e-13));
  HopfField field = phi.field(256);
  UmbilicReport rep = detect_umbilics(field);
  REQUIRE(rep.points.size() == 1);
  CHECK(rep.points[0].multiplicity == 1);
  CHECK(rep.points[0].on_boundary);
  CHECK(rep.theta_boundary == 1);
}

TEST_CASE("winding is invariant under the loop radius and sees orientation") {
  SyntheticPhi phi;
  phi.zeros = {{Complex(0.35, 0.1), 3}};
  HopfField field = phi.field(256);
  // locate the nearest node by brute force
  long best = 0;
  double best_abs = std::numeric_limits<double>::infinity();
  for (long i = 0; i < static_cast<long>(field.w.size()); ++i)
    if (std::abs(field.w[i]) < best_abs) {
      best_abs = std::abs(field.w[i]);
      best = i;
    }
  std::array<int, 2> idx{};
  field.grid.unflatten(best, std::span<int>(idx.data(), 2));
  for (int radius : {4, 6, 9})
    CHECK(loop_winding(field, std::span<const int>(idx.data(), 2), radius) == 3);

  // conjugating the field flips every winding
  HopfField conj_field = field;
  for (auto& w : conj_field.w) w = std::conj(w);
  CHECK(loop_winding(conj_field, std::span<const int>(idx.data(), 2), 6) == -3);
}

TEST_CASE("log-singularity balance: closed-form cases") {
  QuadSpec spec{128, 4};

  SyntheticPhi a;  // psi = z on the disk
  a.zeros = {{Complex(0.0, 0.0), 1}};
  LogLemmaResult ra = log_lemma_check(a, spec);
  CHECK(std::abs(ra.lhs) <= 1e-12);
  CHECK(ra.boundary == doctest::Approx(2.0 * kPi).epsilon(1e-10));
  CHECK(std::abs(ra.rhs) <= 1e-8);
  CHECK(ra.residual <= 1e-8);

  SyntheticPhi b;  // psi = z - 1: boundary zero, integrand = 1/2
  b.zeros = {{Complex(1.0, 0.0), 1}};
  LogLemmaResult rb = log_lemma_check(b, spec);
  CHECK(std::abs(rb.lhs) <= 1e-12);
  CHECK(rb.boundary == doctest::Approx(kPi).epsilon(1e-10));
  CHECK(rb.residual <= 1e-8);

  SyntheticPhi c;  // psi = 1, f = exp(g): the divergence-theorem case
  c.g_coeff = {0.4, -0.3, 0.2};
  c.g_px = {2, 1, 0};
  c.g_py = {0, 2, 3};
  LogLemmaResult rc = log_lemma_check(c, spec);
  CHECK(rc.residual <= 1e-10);
}

TEST_CASE("log-singularity balance on random synthetic data") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> rad(0.15, 0.8);
  std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi);
  std::uniform_real_distribution<double> coef(-0.25, 0.25);
  std::uniform_int_distribution<int> nzeros(0, 3);
  std::uniform_int_distribution<int> mult(1, 2);
  std::uniform_int_distribution<int> annulus(0, 1);
  QuadSpec spec{160, 4};
  for (int trial = 0; trial < 50; ++trial) {
    SyntheticPhi phi;
    phi.rho0 = annulus(rng) ? 0.35 : 0.0;
    const int k = nzeros(rng);
    for (int z = 0; z < k; ++z) {
      double r = rad(rng);
      if (phi.rho0 > 0.0) r = 0.45 + 0.35 * (r - 0.15) / 0.65;
      phi.zeros.push_back({std::polar(r, ang(rng)), mult(rng)});
    }
    // a quadratic-quartic smooth factor
    phi.g_coeff = {coef(rng), coef(rng), coef(rng), coef(rng)};
    phi.g_px = {2, 0, 1, 3};
    phi.g_py = {0, 2, 1, 1};
    LogLemmaResult r = log_lemma_check(phi, spec);
    CHECK(r.residual <= 1e-6 * (1.0 + std::abs(r.boundary)));
  }
}

TEST_CASE("multiplicity recovery on random polynomials up to degree five") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> rad(0.25, 0.8);
  std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi);
  std::uniform_real_distribution<double> coef(-0.2, 0.2);
  std::uniform_int_distribution<int> pattern(0, 4);
  const int cells = 256;
  for (int trial = 0; trial < 50; ++trial) {
    // multiplicity patterns with total degree <= 5, separated zeros
    SyntheticPhi phi;
    std::vector<int> mults;
    switch (pattern(rng)) {
      case 0: mults = {1}; break;
      case 1: mults = {2, 1}; break;
      case 2: mults = {3, 2}; break;
      case 3: mults = {1, 1, 1}; break;
      default: mults = {5}; break;
    }
    for (size_t z = 0; z < mults.size(); ++z) {
      for (int attempt = 0; attempt < 200; ++attempt) {
        Complex cand = std::polar(rad(rng), ang(rng));
        bool ok = true;
        for (const auto& other : phi.zeros)
          if (std::abs(cand - other.z) < 0.35) ok = false;
        if (ok) {
          phi.zeros.push_back({cand, mults[z]});
          break;
        }
      }
    }
    REQUIRE(phi.zeros.size() == mults.size());
    phi.g_coeff = {coef(rng), coef(rng)};
    phi.g_px = {2, 1};
    phi.g_py = {0, 1};

    UmbilicReport rep = detect_umbilics(phi.field(cells));
    CHECK(rep.theta_interior == phi.theta_interior());
    CHECK(rep.theta_boundary == 0);
    REQUIRE(rep.points.size() == phi.zeros.size());
    // match reported points to constructed zeros
    for (const auto& p : rep.points) {
      const Complex z = std::polar(p.location(0), p.location(1));
      int found = -1;
      for (size_t q = 0; q < phi.zeros.size(); ++q)
        if (std::abs(z - phi.zeros[q].z) < 0.1) found = static_cast<int>(q);
      REQUIRE(found >= 0);
      CHECK(p.multiplicity == phi.zeros[found].multiplicity);
    }
  }
}

TEST_CASE("zero orders are invariant under grid refinement") {
  SyntheticPhi phi;
  phi.zeros = {{Complex(0.4, 0.2), 2}, {Complex(-0.5, -0.3), 1}};
  phi.g_coeff = {0.15, -0.1};
  phi.g_px = {2, 0};
  phi.g_py = {0, 2};
  UmbilicReport coarse = detect_umbilics(phi.field(192));
  UmbilicReport fine = detect_umbilics(phi.field(320));
  CHECK(coarse.theta_interior == fine.theta_interior);
  CHECK(coarse.theta_boundary == fine.theta_boundary);
  CHECK(coarse.points.size() == fine.points.size());
}

TEST_CASE("umbilic counting formula on the catenoid; disks are excluded") {
  CatalogEntry cat = critical_catenoid();
  EulerCountResult r = euler_count_check(cat.immersion, QuadSpec{256, 4});
  CHECK(r.theta_interior == 0);
  CHECK(r.theta_boundary == 0);
  CHECK(std::abs(r.residual) <= 1e-6);

  CatalogEntry disk = equatorial_disk(2, 0);
  CHECK_THROWS_WITH_AS(euler_count_check(disk.immersion, QuadSpec{64, 4}),
                       doctest::Contains("disk"), hypothesis_error);
}
