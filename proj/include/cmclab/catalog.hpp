#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cmclab/immersion.hpp"

namespace cmclab {

struct BoundaryComponentMeta {
  BoundaryFace face;
  double chi = 0.0;  // Euler characteristic of the component
  std::string topology;
};

/// A closed-form immersion with everything the suites re-derive: declared
/// curvature data, topology, free-boundary status and reference measures.
struct CatalogEntry {
  std::string id;
  std::string description;
  Immersion immersion;
  bool free_boundary = false;
  bool totally_umbilical = false;
  bool cmc_exact = true;        // pointwise constancy of H expected at h_tol
  bool gauge_identities = true; // false: boundary identities not valid for this
                                // radius convention (flagged, skipped)
  double chi_expected = std::numeric_limits<double>::quiet_NaN();
  std::vector<BoundaryComponentMeta> components;
  double area_closed_form = std::numeric_limits<double>::quiet_NaN();
  double boundary_measure_closed_form = std::numeric_limits<double>::quiet_NaN();
  std::optional<double> kappa_uniform;  // totally umbilical entries: the common curvature
};

/// Positive root of t tanh t = 1 (bisection, cached).
double critical_catenoid_parameter();

/// Totally geodesic slice through the center of the ball, n in {2, 3}.
/// c = +1 uses the geodesic radius convention (the gauge ball degenerates).
CatalogEntry equatorial_disk(int n, int curvature);

/// Piece of a Euclidean n-sphere of radius R meeting the unit sphere
/// orthogonally (c = 0), centered at distance sqrt(1 + R^2) from the origin.
CatalogEntry spherical_cap(int n, double R);

/// The rescaled catenoid meeting the unit sphere orthogonally.
CatalogEntry critical_catenoid();

/// The boundary sphere itself as a closed immersed hypersurface (n = 2).
CatalogEntry boundary_sphere(int curvature, RadiusConvention conv);

/// S^2(a) x [-L, L] in B^4 with a^2 + L^2 = 1: constant mean curvature,
/// non-umbilical, two spherical boundary components on the unit sphere but not
/// meeting it orthogonally.
CatalogEntry spherical_cylinder(double a = 0.6);

enum class NegativeKind { Truncate, Translate, GraphPerturb };

/// Break exactly one hypothesis of a base entry:
///   Truncate     (critical catenoid) shorter profile rescaled back to the
///                sphere: containment holds, orthogonality fails.
///   Translate    (equatorial disk) in-plane shift: containment fails.
///   GraphPerturb (spherical cap) radial bump vanishing to first order at the
///                rim: free boundary survives, constant mean curvature fails.
CatalogEntry negative_variants(const CatalogEntry& base, NegativeKind kind);

/// Free-boundary-preserving graph bump over the equatorial 3-disk; breaks CMC
/// softly (loose declared tolerance) so the integral machinery can still be
/// pointed at a genuinely non-umbilical free-boundary hypersurface.
CatalogEntry perturbed_disk_probe(double eps);

std::vector<CatalogEntry> all_entries();
CatalogEntry find_entry(const std::string& id);
std::vector<std::string> entry_ids();

}  // namespace cmclab
