#pragma once

#include <optional>
#include <vector>

#include "cmclab/fields.hpp"
#include "cmclab/immersion.hpp"

namespace cmclab {

/// Geometry of one boundary point: the trace of the hypersurface on the
/// boundary sphere, with the conormal and the shape data of the trace as a
/// hypersurface of that sphere.
struct BoundaryPoint {
  ParamVec u;                  // full-domain parameters
  FundamentalData fd;          // surface data at the point
  ParamVec conormal_comp;      // nu in the coordinate basis (metric-unit, outward)
  AmbientVec conormal;         // Euclidean components of nu
  AmbientVec xi;               // unit conormal of the trace inside the boundary sphere
  double gauge_norm = 0.0;     // e^{phi} |X|
  double ortho_defect = 0.0;   // 1 - |g(nu, position direction)|
  ParamMat trace_metric;       // (n-1) x (n-1) metric of the trace
  double sqrt_det_trace = 0.0;
  ParamMat trace_shape;        // shape operator of the trace in the boundary sphere
  double trace_mean = 0.0;     // tr of trace_shape
  double trace_norm_sq = 0.0;  // |A~|^2
  double trace_phi_sq = 0.0;   // |A~|^2 - H~^2/(n-1)
  double kappa_nu = 0.0;       // g(A nu, nu)
};

/// Boundary data at arbitrary face coordinates (GL quadrature nodes included).
BoundaryPoint boundary_point(const Immersion& im, const BoundaryFace& face,
                             const ParamVec& face_coords);

/// One marked face sampled on the grid nodes.
struct BoundaryTraceGrid {
  BoundaryFace face;
  Grid face_grid;                     // axes = the non-face axes
  std::vector<int> face_axis_node;    // node index of the face on its axis (size 1 helper)
  std::vector<BoundaryPoint> points;  // per face-grid node
};

BoundaryTraceGrid build_trace(const Immersion& im, const BoundaryFace& face, int cells);

/// Full-domain node index of a face-grid node.
void lift_face_index(const Grid& surface_grid, const BoundaryFace& face,
                     std::span<const int> face_idx, std::span<int> out);

struct FreeBoundaryResidual {
  double contain = 0.0;  // max |gauge norm - boundary gauge norm|
  double ortho = 0.0;    // max (1 - |g(nu, position direction)|)
};

/// Deviation from the free-boundary condition over all marked faces.
FreeBoundaryResidual free_boundary_residual(const Immersion& im, int cells);

/// max over boundary nodes and trace-tangent directions of |g(A nu, e)|;
/// vanishes when the conormal is a principal direction.
double principal_direction_check(const Immersion& im, int cells);

/// Residuals of the boundary splitting identity
///   |phi|^2 = |A~|^2 + (H - H~)^2 - H^2/n
/// and its trace-free form
///   |phi|^2 = |phi~|^2 + ((n-1)H - nH~)^2 / (n(n-1)).
struct KeyIdentityI {
  double residual = 0.0;       // splitting form
  double residual_alt = 0.0;   // trace-free form
  double form_gap = 0.0;       // |residual - residual_alt|, pure algebra
};
KeyIdentityI key_lemma_identity_i(const BoundaryPoint& bp);

/// Residuals of the conormal-derivative identity
///   nu(|phi|^2) = -2 mu0 (|A~|^2 + (n+1)(H - H~)^2 - 2H(H - H~))
/// with nu(|phi|^2) supplied by one-sided finite differences.
struct KeyIdentityII {
  double lhs = 0.0;           // FD value of nu(|phi|^2)
  double rhs = 0.0;           // assembled from trace data
  double residual = 0.0;      // |lhs - rhs|
  double rhs_alt = 0.0;       // trace-free form
  double form_gap = 0.0;      // |rhs - rhs_alt|
};
KeyIdentityII key_lemma_identity_ii(const BoundaryPoint& bp, double nu_phi_sq, double mu0);

struct StahlSample {
  double residual = 0.0;  // max_i |nu(kappa_i) - mu0 (kappa_n - kappa_i)|
  bool skipped = false;   // eigenvalue branches too close to separate
};

/// Per-boundary-point check of nu(kappa_i) = mu0 (kappa_n - kappa_i) using
/// sorted principal-curvature fields; points where branches cross (gap below
/// `gap_tol`) are reported as skipped, not extrapolated.
StahlSample stahl_derivative_sample(const FieldContext& ctx,
                                    const std::vector<GridScalar>& kappa_fields,
                                    const BoundaryTraceGrid& trace, long trace_node,
                                    double mu0, double gap_tol = 1e-6);

/// Sorted principal-curvature fields kappa_0 <= ... <= kappa_{n-1} on the grid.
std::vector<GridScalar> principal_curvature_fields(const FieldContext& ctx);

}  // namespace cmclab
