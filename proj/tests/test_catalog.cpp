#include <cmath>
#include <set>

#include "doctest.h"

#include "cmclab/boundary.hpp"
#include "cmclab/catalog.hpp"
#include "cmclab/integrate.hpp"

using namespace cmclab;

TEST_CASE("entry identifiers are unique and resolvable") {
  auto ids = entry_ids();
  std::set<std::string> seen(ids.begin(), ids.end());
  CHECK(seen.size() == ids.size());
  CHECK(seen.count("critical_catenoid") == 1);
  for (const auto& id : ids) CHECK(find_entry(id).id == id);
  CHECK_THROWS_AS(find_entry("no_such_entry"), std::invalid_argument);
}

TEST_CASE("declared mean curvature is reproduced on every exact entry") {
  for (const auto& e : all_entries()) {
    if (!e.immersion.h_decl || !e.cmc_exact) continue;
    Grid g = e.immersion.domain.grid(e.immersion.domain.dim() >= 3 ? 16 : 32);
    double worst = 0.0;
    for_each_node(g, [&](long, std::span<const int>, const ParamVec& u) {
      worst = std::max(worst,
                       std::abs(fundamental_data(e.immersion, u).mean - *e.immersion.h_decl));
    });
    CAPTURE(e.id);
    CHECK(worst <= e.immersion.h_tol);
  }
}

TEST_CASE("free-boundary metadata matches the measured residuals") {
  for (const auto& e : all_entries()) {
    if (e.immersion.domain.marked_faces.empty()) continue;
    FreeBoundaryResidual r = free_boundary_residual(e.immersion, 24);
    CAPTURE(e.id);
    if (e.free_boundary) {
      CHECK(r.contain <= 1e-8);
      CHECK(r.ortho <= 1e-8);
    } else {
      CHECK((r.contain > 1e-6 || r.ortho > 1e-6));
    }
  }
}

TEST_CASE("closed-form measures are reproduced") {
  for (const auto& e : all_entries()) {
    const int n = e.immersion.domain.dim();
    QuadSpec spec = default_quad(64, n);
    CAPTURE(e.id);
    if (!std::isnan(e.area_closed_form)) {
      const double area = surface_measure(e.immersion, spec).value;
      CHECK(area == doctest::Approx(e.area_closed_form).epsilon(1e-7));
    }
    if (!std::isnan(e.boundary_measure_closed_form) &&
        !e.immersion.domain.marked_faces.empty()) {
      const double b = boundary_measure_total(e.immersion, spec);
      CHECK(b == doctest::Approx(e.boundary_measure_closed_form).epsilon(1e-7));
    }
  }
}

TEST_CASE("flat caps converge to the equatorial disk") {
  CatalogEntry big = spherical_cap(2, 1000.0);
  QuadSpec spec{64, 4};
  CHECK(surface_measure(big.immersion, spec).value ==
        doctest::Approx(std::numbers::pi).epsilon(1e-5));
  CHECK(std::abs(*big.immersion.h_decl) == doctest::Approx(2e-3).epsilon(1e-12));
  FreeBoundaryResidual r = free_boundary_residual(big.immersion, 32);
  CHECK(r.contain <= 1e-10);
  CHECK(r.ortho <= 1e-10);
  CHECK(boundary_measure_total(big.immersion, spec) ==
        doctest::Approx(2.0 * std::numbers::pi).epsilon(1e-5));
}

TEST_CASE("negative variants break exactly the advertised hypothesis") {
  CatalogEntry trunc = find_entry("truncated_catenoid");
  FreeBoundaryResidual r = free_boundary_residual(trunc.immersion, 48);
  CHECK(r.contain <= 1e-9);
  CHECK(r.ortho >= 0.005);

  CatalogEntry shifted = find_entry("translated_disk");
  r = free_boundary_residual(shifted.immersion, 48);
  CHECK(r.contain >= 0.09);

  CatalogEntry bumped = find_entry("perturbed_cap");
  r = free_boundary_residual(bumped.immersion, 48);
  CHECK(r.contain <= 1e-9);
  CHECK(r.ortho <= 1e-9);
  Grid g = bumped.immersion.domain.grid(48);
  double dev = 0.0;
  for_each_node(g, [&](long, std::span<const int>, const ParamVec& u) {
    dev = std::max(dev,
                   std::abs(fundamental_data(bumped.immersion, u).mean -
                            *bumped.immersion.h_decl));
  });
  CHECK(dev >= 1e-3);

  CHECK_THROWS_AS(negative_variants(find_entry("equatorial_disk_2_0"), NegativeKind::Truncate),
                  std::invalid_argument);
}

TEST_CASE("surface Euler characteristics match the metadata") {
  QuadSpec spec{96, 4};
  for (const char* id :
       {"equatorial_disk_2_0", "spherical_cap_2_r1", "critical_catenoid",
        "boundary_sphere_2_0", "boundary_sphere_2_m1"}) {
    CatalogEntry e = find_entry(id);
    CAPTURE(e.id);
    GaussBonnetResult gb = gauss_bonnet_check(e.immersion, spec);
    CHECK(gb.chi_estimate == doctest::Approx(e.chi_expected).epsilon(1e-6));
  }
}
