#pragma once

#include <functional>
#include <vector>

#include "cmclab/boundary.hpp"
#include "cmclab/fields.hpp"
#include "cmclab/immersion.hpp"

namespace cmclab {

struct QuadSpec {
  int cells = 128;       // subintervals per axis (also trapezoid points on periodic axes)
  int gauss_points = 4;  // Gauss-Legendre points per subinterval
};

/// Quadrature cells per axis for a hypersurface of dimension `dim`; full
/// resolution for surfaces, capped for 3-dimensional sweeps where the
/// composite rule converges long before the cap.
QuadSpec default_quad(int resolution, int dim);

struct IntegralValue {
  double value = 0.0;
  double err_est = 0.0;  // |I_h - I_{2h}|, conservative
};

/// Integral over the surface of f(u, fd) against the volume density.
/// Composite Gauss-Legendre on interval axes, trapezoid on periodic axes,
/// with a Richardson-style error estimate from a half-resolution pass.
IntegralValue integrate_surface(
    const Immersion& im,
    const std::function<double(const ParamVec&, const FundamentalData&)>& f,
    const QuadSpec& spec);

/// Single-pass value (no error estimate); the workhorse inside the
/// inequality engines.
double integrate_surface_value(
    const Immersion& im,
    const std::function<double(const ParamVec&, const FundamentalData&)>& f,
    const QuadSpec& spec);

/// Same machinery over one marked face with the trace density.
IntegralValue integrate_boundary(const Immersion& im, const BoundaryFace& face,
                                 const std::function<double(const BoundaryPoint&)>& f,
                                 const QuadSpec& spec);

/// Sum over all marked faces.
double integrate_boundary_total(const Immersion& im,
                                const std::function<double(const BoundaryPoint&)>& f,
                                const QuadSpec& spec);

IntegralValue surface_measure(const Immersion& im, const QuadSpec& spec);
double boundary_measure_total(const Immersion& im, const QuadSpec& spec);

/// Flat-chart tensor quadrature (no immersion, no density): Gauss-Legendre on
/// interval axes, trapezoid on periodic ones.
double integrate_chart(const std::vector<ParamAxis>& axes,
                       const std::function<double(const ParamVec&)>& f, const QuadSpec& spec);

/// Node-based integral of grid samples (trapezoid on periodic axes, composite
/// Simpson on interval axes, half-cell sliver correction at offset ends where
/// the density vanishes). For integrands only known at grid nodes.
double integrate_field_nodes(const FieldContext& ctx, const GridScalar& f);

/// Node-based integral over one trace grid; `values` indexed like trace.points.
double integrate_trace_nodes(const BoundaryTraceGrid& trace, std::span<const double> values);

/// Scalar field on the ambient ball with its Euclidean gradient; the test
/// functions fed to the Hardy-type inequality.
struct AmbientField {
  std::function<double(const AmbientVec&)> value;
  std::function<AmbientVec(const AmbientVec&)> gradient;
};

struct HardyResult {
  double lhs = 0.0;     // int f^2
  double rhs = 0.0;     // (4/n^2) int |grad f|^2 + (H^2/n^2) int f^2 + (2/n) bdry int f^2
  double margin = 0.0;  // rhs - lhs, expected >= 0
  bool equality = false;
};

/// Hardy-type inequality for free-boundary CMC hypersurfaces, n >= 3, c <= 0.
/// Throws hypothesis_error outside those hypotheses or when f < 0.
HardyResult hardy_check(const Immersion& im, const AmbientField& f, const QuadSpec& spec);

struct FirstInequalityResult {
  double lhs = 0.0;  // int |phi|^2 (p_H(|phi|) - C_{n,H})
  double rhs = 0.0;
  double margin = 0.0;  // lhs - rhs, expected >= 0
  double c_nh = 0.0;
  double l_mu0 = 0.0;
  double int_phi_sq = 0.0;
  double boundary_measure = 0.0;
  double int_trace_mean = 0.0;        // bdry int of H~
  double int_mean_gap_sq = 0.0;       // bdry int of (H - H~)^2
  double int_trace_norm_sq = 0.0;     // bdry int of |A~|^2
  bool equality = false;              // totally umbilical
};

/// Integrated Simons estimate for free-boundary CMC hypersurfaces
/// (n >= 3, c in {-1, 0}).
FirstInequalityResult first_inequality(const Immersion& im, const QuadSpec& spec);

/// The n = 3 right-hand side rewritten through the Euler characteristics of
/// the boundary components; must agree with first_inequality().rhs.
double first_inequality_rhs_3d(const Immersion& im, const QuadSpec& spec,
                               std::span<const double> chi_components);

struct SecondInequalityResult {
  double lhs = 0.0;  // -int |phi|^{(n-2)/n} p_H(|phi|)
  double rhs = 0.0;  // 1/2 bdry int |phi|^{-(n+2)/n} nu(|phi|^2)
  double margin = 0.0;  // rhs - lhs, expected >= 0
  double min_phi_boundary = 0.0;
  bool equality = false;
};

/// Integral gradient-estimate inequality for non-umbilical CMC hypersurfaces
/// with integrable boundary weight. No free-boundary hypothesis.
SecondInequalityResult second_inequality(const Immersion& im, const FieldBundle& bundle,
                                         const QuadSpec& spec, double equality_rel_tol = 2e-3);

struct GaussBonnetResult {
  double int_k = 0.0;         // integral of the Gauss curvature
  double kg_total = 0.0;      // boundary integral of the geodesic curvature
  double chi_estimate = 0.0;  // (int_k + kg_total) / 2 pi
  double boundary_measure = 0.0;
  double kg_minus_mu0_measure = 0.0;  // kg_total - mu0 |bdry|, signed
};

/// Gauss-Bonnet bookkeeping for surfaces (n = 2); the geodesic curvature is
/// taken with the surface on the left so that int K + int k_g = 2 pi chi.
GaussBonnetResult gauss_bonnet_check(const Immersion& im, const QuadSpec& spec);

struct EqualityChainResult {
  double boundary_identity = 0.0;  // bdry int |phi|^{-2} nu(|phi|^2)
  double boundary_expected = 0.0;  // -4 mu0 |bdry|
  double chain_lhs = 0.0;          // int p_H(|phi|)
  double chain_rhs = 0.0;          // 2 (mu0 |bdry| - 2 pi chi)
  double chi = 0.0;
  bool chi_nonpositive = false;
  bool equality = false;  // chi ~ 0: the annulus case
};

/// Equality-case diagnostics tying the boundary integral, the integrated
/// quadratic and the Euler characteristic together (n = 2, free boundary,
/// constant H, not totally umbilical).
EqualityChainResult equality_topology_diagnostic(const Immersion& im, const FieldBundle& bundle,
                                                 const QuadSpec& spec);

struct DivergenceCheck {
  double interior = 0.0;  // int of lap |phi|^2
  double boundary = 0.0;  // bdry int of nu(|phi|^2)
  double residual = 0.0;
};

/// Discrete divergence-theorem consistency on the |phi|^2 field.
DivergenceCheck divergence_theorem_check(const FieldBundle& bundle);

}  // namespace cmclab
