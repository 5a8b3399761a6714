#pragma once

#include <functional>
#include <vector>

#include "cmclab/grid.hpp"
#include "cmclab/immersion.hpp"

namespace cmclab {

/// Metric data sampled over a grid, shared by every scalar field on it.
struct FieldContext {
  const Immersion* im = nullptr;
  Grid grid;
  int order = 4;  // interior stencil order (2 or 4)
  std::vector<double> sqrt_det;    // per node
  std::vector<double> inv_metric;  // per node, packed upper triangle (row-major)

  int dim() const { return grid.dim(); }
  int packed_size() const { return dim() * (dim() + 1) / 2; }
  double inv_at(long flat, int i, int j) const;
};

FieldContext build_field_context(const Immersion& im, int cells, int order = 4);

/// Sample f(u, fd) into a grid scalar.
GridScalar sample_field(const FieldContext& ctx,
                        const std::function<double(const ParamVec&, const FundamentalData&)>& f);

/// Sample a bare function of the parameters (no geometry needed).
GridScalar sample_param_field(const Grid& grid, const std::function<double(const ParamVec&)>& f);

/// d(field)/du_axis at a node. Central stencil of ctx order where it fits,
/// one-sided of the same order at interval ends, wrap-around on periodic axes.
double axis_derivative(const Grid& grid, const std::vector<double>& v,
                       std::span<const int> idx, int axis, int order);

/// |grad_Sigma f|^2 = g^{ij} di f dj f at a node.
double surface_gradient_sq(const FieldContext& ctx, const GridScalar& f,
                           std::span<const int> idx);

/// Laplace-Beltrami of f over the whole grid by the conservative nested form
/// (1/sqrt g) di(sqrt g g^{ij} dj f).
GridScalar laplace_beltrami_field(const FieldContext& ctx, const GridScalar& f);

/// Conormal derivative nu(f) = nu^i di f at a boundary-face node. The
/// face-normal derivative uses the 3-point second-order one-sided stencil;
/// tangential derivatives are second-order central.
double conormal_derivative(const Grid& grid, const GridScalar& f, std::span<const int> idx,
                           const BoundaryFace& face, const ParamVec& conormal_components);

/// Everything the pointwise residual checks need: metric context plus the
/// umbilicity fields and their Laplacian.
struct FieldBundle {
  FieldContext ctx;
  GridScalar phi_sq;       // |phi|^2
  GridScalar phi_abs;      // |phi|
  GridScalar lap_phi_sq;   // Laplace-Beltrami of |phi|^2
};

FieldBundle build_field_bundle(const Immersion& im, int cells, int order = 4);

/// Pointwise residual of the Simons-type estimate,
///   |phi|^2 p_H(|phi|) - (n+2)/n |grad|phi||^2 + 1/2 lap|phi|^2,
/// nonnegative up to discretization for constant mean curvature. `idx` must be
/// at least two cells from every non-periodic edge.
double simons_residual(const FieldBundle& bundle, std::span<const int> idx, double h_const);

}  // namespace cmclab
