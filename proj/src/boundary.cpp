#include "cmclab/boundary.hpp"

#include <cmath>
#include <stdexcept>

namespace cmclab {

namespace {

// Embed face coordinates into the full parameter vector.
ParamVec embed_face_coords(const ParamDomain& domain, const BoundaryFace& face,
                           const ParamVec& face_coords) {
  const int n = domain.dim();
  ParamVec u(n);
  int k = 0;
  for (int d = 0; d < n; ++d) {
    if (d == face.axis)
      u(d) = face.high ? domain.axes[d].b : domain.axes[d].a;
    else
      u(d) = face_coords(k++);
  }
  return u;
}

}  // namespace

BoundaryPoint boundary_point(const Immersion& im, const BoundaryFace& face,
                             const ParamVec& face_coords) {
  const int n = im.domain.dim();
  const ParamVec u = embed_face_coords(im.domain, face, face_coords);

  BoundaryPoint bp;
  bp.u = u;
  bp.fd = fundamental_data(im, u);
  const Jet jet = im.jet(u);
  const AmbientModel& model = im.model;

  // Conormal: the face-axis tangent made orthogonal to the trace tangents,
  // metric-normalized, pointing outward.
  const int k = face.axis;
  if (n == 1) throw std::invalid_argument("boundary_point: surface dimension must exceed 1");
  const int nb = n - 1;
  std::array<int, kMaxParamDim> other{};
  {
    int p = 0;
    for (int d = 0; d < n; ++d)
      if (d != k) other[p++] = d;
  }

  bp.trace_metric.resize(nb, nb);
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j) bp.trace_metric(i, j) = bp.fd.metric(other[i], other[j]);
  bp.sqrt_det_trace = std::sqrt(bp.trace_metric.determinant());

  Eigen::Matrix<double, Eigen::Dynamic, 1, 0, kMaxParamDim, 1> rhs(nb);
  for (int j = 0; j < nb; ++j) rhs(j) = bp.fd.metric(k, other[j]);
  Eigen::Matrix<double, Eigen::Dynamic, 1, 0, kMaxParamDim, 1> coef =
      bp.trace_metric.ldlt().solve(rhs);

  ParamVec nu_comp = ParamVec::Zero(n);
  nu_comp(k) = 1.0;
  for (int j = 0; j < nb; ++j) nu_comp(other[j]) -= coef(j);
  double norm_sq = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) norm_sq += nu_comp(i) * bp.fd.metric(i, j) * nu_comp(j);
  nu_comp /= std::sqrt(norm_sq);
  if (!face.high) nu_comp = -nu_comp;
  bp.conormal_comp = nu_comp;
  bp.conormal = jet.dx * nu_comp;

  // kappa_n = g(A nu, nu) = h(nu, nu)
  bp.kappa_nu = nu_comp.dot(bp.fd.second_ff * nu_comp);

  // Position direction and the free-boundary measures.
  const double exp_phi = std::sqrt(bp.fd.conf);
  const double xnorm = jet.x.norm();
  bp.gauge_norm = exp_phi * xnorm;
  AmbientVec xhat = jet.x / (exp_phi * xnorm);  // metric-unit position direction
  const double nu_dot_pos = bp.fd.conf * bp.conormal.dot(xhat);
  bp.ortho_defect = 1.0 - std::abs(nu_dot_pos);

  // xi: unit conormal of the trace inside the boundary sphere. Equals the
  // surface normal for free-boundary immersions; in general the normal
  // projected off the position direction.
  AmbientVec xi_raw = bp.fd.normal - (bp.fd.conf * bp.fd.normal.dot(xhat)) * xhat;
  const double xi_norm = std::sqrt(bp.fd.conf) * xi_raw.norm();
  if (xi_norm < 1e-12)
    throw hypothesis_error("boundary trace: surface normal parallel to the position direction");
  AmbientVec xi = xi_raw / xi_norm;
  bp.xi = xi;

  // Second fundamental form of the trace in the boundary sphere w.r.t. xi.
  ParamMat h_trace(nb, nb);
  for (int i = 0; i < nb; ++i) {
    for (int j = i; j < nb; ++j) {
      AmbientVec cov = jet.second(other[i], other[j], n) +
                       model.christoffel_apply(jet.dx.col(other[i]), jet.dx.col(other[j]), jet.x);
      const double v = bp.fd.conf * cov.dot(xi);
      h_trace(i, j) = v;
      h_trace(j, i) = v;
    }
  }
  bp.trace_shape = bp.trace_metric.inverse() * h_trace;
  ParamVec tk = self_adjoint_eigenvalues(bp.trace_metric, h_trace);
  bp.trace_mean = tk.sum();
  bp.trace_norm_sq = tk.squaredNorm();
  double tphi = 0.0;
  for (int i = 0; i < nb; ++i) {
    const double s = tk(i) - bp.trace_mean / nb;
    tphi += s * s;
  }
  bp.trace_phi_sq = tphi;
  return bp;
}

void lift_face_index(const Grid& surface_grid, const BoundaryFace& face,
                     std::span<const int> face_idx, std::span<int> out) {
  const int n = surface_grid.dim();
  int p = 0;
  for (int d = 0; d < n; ++d) {
    if (d == face.axis)
      out[d] = face.high ? surface_grid.axes[d].nodes() - 1 : 0;
    else
      out[d] = face_idx[p++];
  }
}

BoundaryTraceGrid build_trace(const Immersion& im, const BoundaryFace& face, int cells) {
  const ParamAxis& ax = im.domain.axes[face.axis];
  if (ax.periodic) throw std::invalid_argument("build_trace: periodic axis has no face");
  if ((face.high && ax.offset_high) || (!face.high && ax.offset_low))
    throw std::invalid_argument("build_trace: face removed by an offset end");

  BoundaryTraceGrid trace;
  trace.face = face;
  Grid full = im.domain.grid(cells);
  for (int d = 0; d < im.domain.dim(); ++d)
    if (d != face.axis) trace.face_grid.axes.push_back(full.axes[d]);
  trace.points.reserve(trace.face_grid.node_count());
  for_each_node(trace.face_grid, [&](long, std::span<const int>, const ParamVec& fc) {
    trace.points.push_back(boundary_point(im, face, fc));
  });
  return trace;
}

FreeBoundaryResidual free_boundary_residual(const Immersion& im, int cells) {
  if (im.domain.marked_faces.empty())
    throw hypothesis_error("free_boundary_residual: no marked boundary faces");
  FreeBoundaryResidual r;
  const double target = im.model.boundary_gauge_norm();
  for (const auto& face : im.domain.marked_faces) {
    BoundaryTraceGrid trace = build_trace(im, face, cells);
    for (const auto& bp : trace.points) {
      r.contain = std::max(r.contain, std::abs(bp.gauge_norm - target));
      r.ortho = std::max(r.ortho, bp.ortho_defect);
    }
  }
  return r;
}

double principal_direction_check(const Immersion& im, int cells) {
  double worst = 0.0;
  for (const auto& face : im.domain.marked_faces) {
    BoundaryTraceGrid trace = build_trace(im, face, cells);
    const int n = im.domain.dim();
    std::array<int, kMaxParamDim> other{};
    {
      int p = 0;
      for (int d = 0; d < n; ++d)
        if (d != face.axis) other[p++] = d;
    }
    for (const auto& bp : trace.points) {
      // g(A nu, e_j) = h(nu, e_j) with e_j the normalized trace tangents
      for (int j = 0; j < n - 1; ++j) {
        double v = 0.0;
        for (int i = 0; i < n; ++i) v += bp.fd.second_ff(other[j], i) * bp.conormal_comp(i);
        v /= std::sqrt(bp.fd.metric(other[j], other[j]));
        worst = std::max(worst, std::abs(v));
      }
    }
  }
  return worst;
}

KeyIdentityI key_lemma_identity_i(const BoundaryPoint& bp) {
  const int n = bp.fd.n;
  const double h = bp.fd.mean;
  const double ht = bp.trace_mean;
  KeyIdentityI out;
  const double split = bp.trace_norm_sq + (h - ht) * (h - ht) - h * h / n;
  const double tf = bp.trace_phi_sq +
                    std::pow((n - 1) * h - n * ht, 2) / (double(n) * (n - 1));
  out.residual = bp.fd.phi_sq - split;
  out.residual_alt = bp.fd.phi_sq - tf;
  out.form_gap = std::abs(split - tf);
  return out;
}

KeyIdentityII key_lemma_identity_ii(const BoundaryPoint& bp, double nu_phi_sq, double mu0) {
  const int n = bp.fd.n;
  const double h = bp.fd.mean;
  const double ht = bp.trace_mean;
  KeyIdentityII out;
  out.lhs = nu_phi_sq;
  out.rhs = -2.0 * mu0 *
            (bp.trace_norm_sq + (n + 1) * (h - ht) * (h - ht) - 2.0 * h * (h - ht));
  out.rhs_alt = -2.0 * mu0 *
                (bp.trace_phi_sq + std::pow((n - 1) * h - n * ht, 2) / (n - 1.0));
  out.residual = std::abs(out.lhs - out.rhs);
  out.form_gap = std::abs(out.rhs - out.rhs_alt);
  return out;
}

std::vector<GridScalar> principal_curvature_fields(const FieldContext& ctx) {
  const int n = ctx.dim();
  std::vector<GridScalar> fields(n, GridScalar(ctx.grid));
  for_each_node(ctx.grid, [&](long flat, std::span<const int>, const ParamVec& u) {
    FundamentalData fd = fundamental_data(*ctx.im, u);
    for (int i = 0; i < n; ++i) fields[i].v[flat] = fd.kappas(i);
  });
  return fields;
}

StahlSample stahl_derivative_sample(const FieldContext& ctx,
                                    const std::vector<GridScalar>& kappa_fields,
                                    const BoundaryTraceGrid& trace, long trace_node,
                                    double mu0, double gap_tol) {
  const int n = ctx.dim();
  const BoundaryPoint& bp = trace.points[trace_node];
  StahlSample out;

  std::array<int, kMaxParamDim> fidx{};
  trace.face_grid.unflatten(trace_node, std::span<int>(fidx.data(), trace.face_grid.dim()));
  std::array<int, kMaxParamDim> idx{};
  lift_face_index(ctx.grid, trace.face, std::span<const int>(fidx.data(), trace.face_grid.dim()),
                  std::span<int>(idx.data(), n));
  const auto idx_span = std::span<const int>(idx.data(), n);

  // Branch separation over the one-sided stencil along the face axis.
  double min_gap = std::numeric_limits<double>::infinity();
  for (int off = 0; off < 3; ++off) {
    std::array<int, kMaxParamDim> probe = idx;
    probe[trace.face.axis] += trace.face.high ? -off : off;
    const long flat = ctx.grid.flat_index(std::span<const int>(probe.data(), n));
    for (int i = 0; i + 1 < n; ++i)
      min_gap = std::min(min_gap, kappa_fields[i + 1].v[flat] - kappa_fields[i].v[flat]);
  }
  if (min_gap < gap_tol) {
    out.skipped = true;
    return out;
  }

  // Which sorted branch is the conormal one at this point.
  int nu_branch = 0;
  {
    const long flat = ctx.grid.flat_index(idx_span);
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
      const double d = std::abs(kappa_fields[i].v[flat] - bp.kappa_nu);
      if (d < best) {
        best = d;
        nu_branch = i;
      }
    }
  }

  const long flat = ctx.grid.flat_index(idx_span);
  for (int i = 0; i < n; ++i) {
    if (i == nu_branch) continue;
    const double nu_ki =
        conormal_derivative(ctx.grid, kappa_fields[i], idx_span, trace.face, bp.conormal_comp);
    const double expected = mu0 * (bp.kappa_nu - kappa_fields[i].v[flat]);
    out.residual = std::max(out.residual, std::abs(nu_ki - expected));
  }
  return out;
}

}  // namespace cmclab
