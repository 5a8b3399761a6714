#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cmclab/ambient.hpp"
#include "cmclab/grid.hpp"
#include "cmclab/linalg.hpp"

namespace cmclab {

struct ParamAxis {
  double a = 0.0;
  double b = 1.0;
  bool periodic = false;
  bool offset_low = false;   // keep nodes off a coordinate degeneracy at a
  bool offset_high = false;  // same at b
};

struct BoundaryFace {
  int axis = 0;
  bool high = true;  // true: face at b, false: face at a
};

/// Rectangular parameter box with per-axis topology and the faces that map
/// into the boundary of the surface.
struct ParamDomain {
  std::vector<ParamAxis> axes;
  std::vector<BoundaryFace> marked_faces;

  int dim() const { return static_cast<int>(axes.size()); }

  /// Grid at `cells` cells per axis.
  Grid grid(int cells) const;

  /// Faces that exist as node hyperplanes (non-periodic, non-offset ends).
  std::vector<BoundaryFace> physical_faces() const;
};

/// Order-2 jet of the position map at one parameter point.
struct Jet {
  AmbientVec x;
  TangentMat dx;  // (n+1) x n, columns dX/du_i
  // second derivatives d2x[i*n + j], symmetric in (i, j)
  std::array<AmbientVec, kMaxParamDim * kMaxParamDim> d2x;

  const AmbientVec& second(int i, int j, int n) const { return d2x[i * n + j]; }
  AmbientVec& second(int i, int j, int n) { return d2x[i * n + j]; }
};

/// A parametrized hypersurface with analytic (or finite-difference) jets.
struct Immersion {
  AmbientModel model = AmbientModel::make(0, 3, RadiusConvention::GaugeUnit);
  ParamDomain domain;
  std::function<Jet(const ParamVec&)> jet;
  double normal_sign = 1.0;               // applied to the oriented hodge normal
  std::optional<double> h_decl;           // declared constant mean curvature
  double h_tol = 1e-6;                    // advertised tolerance for |H - h_decl|
};

/// Per-point extrinsic package. `normal` holds the Euclidean components of the
/// metric-unit normal (so g(normal, normal) = 1 in the conformal metric).
struct FundamentalData {
  int n = 2;                 // hypersurface dimension
  double conf = 1.0;         // e^{2 phi_c} at the point
  AmbientVec position;
  TangentMat tangents;       // copy of the first-order jet
  ParamMat metric;           // induced metric
  ParamMat metric_inv;
  double sqrt_det = 0.0;     // volume density
  AmbientVec normal;
  ParamMat second_ff;        // h_ij
  ParamMat shape;            // A = metric^{-1} h
  ParamVec kappas;           // principal curvatures, ascending
  double mean = 0.0;         // H = tr A
  double norm_a_sq = 0.0;    // |A|^2
  double phi_sq = 0.0;       // |A|^2 - H^2/n, assembled trace-free
};

/// Extrinsic data at `u`. Throws std::domain_error when the tangent map is
/// rank-deficient (smallest singular value below 1e-10 of the largest) or the
/// point leaves the conformal chart.
FundamentalData fundamental_data(const Immersion& im, const ParamVec& u);

/// p_H(t) = t^2 + (n-2)/sqrt(n(n-1)) |H| t - H^2/n - n c.
double p_H(int curvature, int n, double h, double t);

/// Gauss curvature K = kappa_1 kappa_2 + c of a surface (n = 2).
double gauss_curvature_2d(const FundamentalData& fd, int curvature);

/// Cross-check residual |phi|^2 + 2(K - c) - H^2/2 for n = 2; vanishes
/// identically for surfaces in space forms.
double gauss_identity_residual_2d(const FundamentalData& fd, int curvature);

/// Order-4 central finite-difference jet built from a bare position map; the
/// fallback for immersions supplied without analytic derivatives.
std::function<Jet(const ParamVec&)> jet_from_position(
    std::function<AmbientVec(const ParamVec&)> position, int n, double step);

}  // namespace cmclab
