#include "cmclab/integrate.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cmclab {

namespace {

constexpr double kPi = std::numbers::pi;

// 4-point Gauss-Legendre on [-1, 1].
constexpr double kGx4[4] = {-0.8611363115940526, -0.3399810435848563, 0.3399810435848563,
                            0.8611363115940526};
constexpr double kGw4[4] = {0.3478548451374538, 0.6521451548625461, 0.6521451548625461,
                            0.3478548451374538};
// 2-point rule, used when a caller asks for fewer points.
constexpr double kGx2[2] = {-0.5773502691896257, 0.5773502691896257};
constexpr double kGw2[2] = {1.0, 1.0};

struct Rule1D {
  std::vector<double> x, w;
};

Rule1D axis_rule(const ParamAxis& ax, const QuadSpec& spec) {
  Rule1D r;
  if (ax.periodic) {
    const int n = spec.cells;
    const double h = (ax.b - ax.a) / n;
    r.x.resize(n);
    r.w.assign(n, h);
    for (int i = 0; i < n; ++i) r.x[i] = ax.a + i * h;
    return r;
  }
  const int q = spec.gauss_points >= 4 ? 4 : 2;
  const double* gx = q == 4 ? kGx4 : kGx2;
  const double* gw = q == 4 ? kGw4 : kGw2;
  const int m = spec.cells;
  const double h = (ax.b - ax.a) / m;
  r.x.reserve(m * q);
  r.w.reserve(m * q);
  for (int cell = 0; cell < m; ++cell) {
    const double lo = ax.a + cell * h;
    for (int g = 0; g < q; ++g) {
      r.x.push_back(lo + 0.5 * h * (1.0 + gx[g]));
      r.w.push_back(0.5 * h * gw[g]);
    }
  }
  return r;
}

double tensor_integrate(const std::vector<Rule1D>& rules,
                        const std::function<double(const ParamVec&)>& f) {
  const int n = static_cast<int>(rules.size());
  std::vector<int> idx(n, 0);
  long total = 1;
  for (const auto& r : rules) total *= static_cast<long>(r.x.size());
  std::vector<double> terms;
  terms.reserve(total);
  ParamVec u(n);
  for (long flat = 0; flat < total; ++flat) {
    double w = 1.0;
    for (int d = 0; d < n; ++d) {
      u(d) = rules[d].x[idx[d]];
      w *= rules[d].w[idx[d]];
    }
    terms.push_back(w * f(u));
    for (int d = n - 1; d >= 0; --d) {
      if (++idx[d] < static_cast<int>(rules[d].x.size())) break;
      idx[d] = 0;
    }
  }
  return pairwise_sum(terms);
}

double surface_pass(const Immersion& im,
                    const std::function<double(const ParamVec&, const FundamentalData&)>& f,
                    const QuadSpec& spec) {
  std::vector<Rule1D> rules;
  for (const auto& ax : im.domain.axes) rules.push_back(axis_rule(ax, spec));
  return tensor_integrate(rules, [&](const ParamVec& u) {
    FundamentalData fd = fundamental_data(im, u);
    return f(u, fd) * fd.sqrt_det;
  });
}

double boundary_pass(const Immersion& im, const BoundaryFace& face,
                     const std::function<double(const BoundaryPoint&)>& f,
                     const QuadSpec& spec) {
  std::vector<Rule1D> rules;
  for (int d = 0; d < im.domain.dim(); ++d)
    if (d != face.axis) rules.push_back(axis_rule(im.domain.axes[d], spec));
  return tensor_integrate(rules, [&](const ParamVec& fc) {
    BoundaryPoint bp = boundary_point(im, face, fc);
    return f(bp) * bp.sqrt_det_trace;
  });
}

// Node weights for one grid axis: trapezoid (periodic), composite Simpson when
// the cell count is even, trapezoid otherwise. Offset ends get the half-cell
// sliver approximated by a vanishing-density triangle.
std::vector<double> node_weights(const GridAxis& ax) {
  const int n = ax.nodes();
  const double h = ax.step();
  std::vector<double> w(n, 0.0);
  if (ax.periodic) {
    std::fill(w.begin(), w.end(), h);
    return w;
  }
  if ((n - 1) % 2 == 0 && n >= 3) {
    for (int i = 0; i < n; ++i) {
      if (i == 0 || i == n - 1)
        w[i] = h / 3.0;
      else
        w[i] = (i % 2 == 1) ? 4.0 * h / 3.0 : 2.0 * h / 3.0;
    }
  } else {
    std::fill(w.begin(), w.end(), h);
    w.front() = w.back() = h / 2.0;
  }
  if (ax.offset_low) w.front() += h / 4.0;
  if (ax.offset_high) w.back() += h / 4.0;
  return w;
}

double equality_scale(double a, double b) { return std::max({1.0, std::abs(a), std::abs(b)}); }

void require_free_boundary(const Immersion& im, const char* who) {
  FreeBoundaryResidual r = free_boundary_residual(im, 16);
  if (r.contain > 1e-6 || r.ortho > 1e-6)
    throw hypothesis_error(std::string(who) + ": free-boundary condition fails (contain " +
                           std::to_string(r.contain) + ", ortho " + std::to_string(r.ortho) + ")");
}

double declared_mean(const Immersion& im, const char* who) {
  if (!im.h_decl)
    throw hypothesis_error(std::string(who) + ": no declared constant mean curvature");
  return *im.h_decl;
}

// constancy of H at the immersion's advertised tolerance, on a coarse sweep
void require_cmc(const Immersion& im, const char* who) {
  const double h = declared_mean(im, who);
  Grid g = im.domain.grid(im.domain.dim() >= 3 ? 12 : 24);
  double worst = 0.0;
  for_each_node(g, [&](long, std::span<const int>, const ParamVec& u) {
    worst = std::max(worst, std::abs(fundamental_data(im, u).mean - h));
  });
  if (worst > im.h_tol)
    throw hypothesis_error(std::string(who) + ": mean curvature deviates from the declared value by " +
                           std::to_string(worst));
}

}  // namespace

QuadSpec default_quad(int resolution, int dim) {
  QuadSpec spec;
  spec.cells = dim >= 3 ? std::min(resolution, 24) : resolution;
  return spec;
}

IntegralValue integrate_surface(
    const Immersion& im,
    const std::function<double(const ParamVec&, const FundamentalData&)>& f,
    const QuadSpec& spec) {
  IntegralValue out;
  out.value = surface_pass(im, f, spec);
  QuadSpec coarse = spec;
  coarse.cells = std::max(2, spec.cells / 2);
  out.err_est = std::abs(out.value - surface_pass(im, f, coarse));
  return out;
}

IntegralValue integrate_boundary(const Immersion& im, const BoundaryFace& face,
                                 const std::function<double(const BoundaryPoint&)>& f,
                                 const QuadSpec& spec) {
  IntegralValue out;
  out.value = boundary_pass(im, face, f, spec);
  QuadSpec coarse = spec;
  coarse.cells = std::max(2, spec.cells / 2);
  out.err_est = std::abs(out.value - boundary_pass(im, face, f, coarse));
  return out;
}

double integrate_surface_value(
    const Immersion& im,
    const std::function<double(const ParamVec&, const FundamentalData&)>& f,
    const QuadSpec& spec) {
  return surface_pass(im, f, spec);
}

double integrate_boundary_total(const Immersion& im,
                                const std::function<double(const BoundaryPoint&)>& f,
                                const QuadSpec& spec) {
  double total = 0.0;
  for (const auto& face : im.domain.marked_faces)
    total += boundary_pass(im, face, f, spec);
  return total;
}

IntegralValue surface_measure(const Immersion& im, const QuadSpec& spec) {
  return integrate_surface(im, [](const ParamVec&, const FundamentalData&) { return 1.0; }, spec);
}

double integrate_chart(const std::vector<ParamAxis>& axes,
                       const std::function<double(const ParamVec&)>& f, const QuadSpec& spec) {
  std::vector<Rule1D> rules;
  for (const auto& ax : axes) rules.push_back(axis_rule(ax, spec));
  return tensor_integrate(rules, f);
}

double boundary_measure_total(const Immersion& im, const QuadSpec& spec) {
  return integrate_boundary_total(im, [](const BoundaryPoint&) { return 1.0; }, spec);
}

double integrate_field_nodes(const FieldContext& ctx, const GridScalar& f) {
  const int n = ctx.dim();
  std::vector<std::vector<double>> w;
  w.reserve(n);
  for (const auto& ax : ctx.grid.axes) w.push_back(node_weights(ax));
  std::vector<double> terms(ctx.grid.node_count());
  for_each_node(ctx.grid, [&](long flat, std::span<const int> idx, const ParamVec&) {
    double weight = 1.0;
    for (int d = 0; d < n; ++d) weight *= w[d][idx[d]];
    terms[flat] = weight * f.v[flat] * ctx.sqrt_det[flat];
  });
  return pairwise_sum(terms);
}

double integrate_trace_nodes(const BoundaryTraceGrid& trace, std::span<const double> values) {
  const int n = trace.face_grid.dim();
  std::vector<std::vector<double>> w;
  w.reserve(n);
  for (const auto& ax : trace.face_grid.axes) w.push_back(node_weights(ax));
  std::vector<double> terms(trace.face_grid.node_count());
  for_each_node(trace.face_grid, [&](long flat, std::span<const int> idx, const ParamVec&) {
    double weight = 1.0;
    for (int d = 0; d < n; ++d) weight *= w[d][idx[d]];
    terms[flat] = weight * values[flat] * trace.points[flat].sqrt_det_trace;
  });
  return pairwise_sum(terms);
}

HardyResult hardy_check(const Immersion& im, const AmbientField& f, const QuadSpec& spec) {
  const int n = im.domain.dim();
  const int c = im.model.curvature();
  if (n < 3) throw hypothesis_error("hardy_check: needs hypersurface dimension >= 3");
  if (c > 0) throw hypothesis_error("hardy_check: needs nonpositive curvature");
  require_free_boundary(im, "hardy_check");
  require_cmc(im, "hardy_check");
  const double h = declared_mean(im, "hardy_check");

  double min_f = std::numeric_limits<double>::infinity();
  auto f_sq = [&](const ParamVec&, const FundamentalData& fd) {
    const double v = f.value(fd.position);
    min_f = std::min(min_f, v);
    return v * v;
  };
  auto grad_sq = [&](const ParamVec&, const FundamentalData& fd) {
    const AmbientVec g = f.gradient(fd.position);
    ParamVec df(n);
    for (int i = 0; i < n; ++i) df(i) = fd.tangents.col(i).dot(g);
    return df.dot(fd.metric_inv * df);
  };

  HardyResult out;
  out.lhs = integrate_surface_value(im, f_sq, spec);
  if (min_f < -1e-10) throw hypothesis_error("hardy_check: test function is negative");
  const double grad_term = integrate_surface_value(im, grad_sq, spec);
  const double bdry = integrate_boundary_total(
      im, [&](const BoundaryPoint& bp) {
        const double v = f.value(bp.fd.position);
        return v * v;
      }, spec);
  out.rhs = 4.0 / (n * n) * grad_term + h * h / (n * n) * out.lhs + 2.0 / n * bdry;
  out.margin = out.rhs - out.lhs;
  out.equality = out.lhs <= 1e-12 * equality_scale(out.lhs, out.rhs);
  return out;
}

FirstInequalityResult first_inequality(const Immersion& im, const QuadSpec& spec) {
  const int n = im.domain.dim();
  const int c = im.model.curvature();
  if (n < 3) throw hypothesis_error("first_inequality: needs hypersurface dimension >= 3");
  if (c == 1) throw hypothesis_error("first_inequality: needs c in {-1, 0}");
  require_free_boundary(im, "first_inequality");
  require_cmc(im, "first_inequality");
  const double h = declared_mean(im, "first_inequality");
  const double mu0 = im.model.mu0();

  FirstInequalityResult out;
  out.c_nh = (n + 2.0) * (double(n) * n - h * h) / (4.0 * n);

  out.lhs = integrate_surface_value(im, [&](const ParamVec&, const FundamentalData& fd) {
              const double phi = std::sqrt(std::max(0.0, fd.phi_sq));
              return fd.phi_sq * (p_H(c, n, h, phi) - out.c_nh);
            }, spec);
  out.int_phi_sq = integrate_surface_value(im, [](const ParamVec&, const FundamentalData& fd) {
                     return fd.phi_sq;
                   }, spec);

  out.boundary_measure = boundary_measure_total(im, spec);
  out.int_trace_mean =
      integrate_boundary_total(im, [](const BoundaryPoint& bp) { return bp.trace_mean; }, spec);
  out.int_mean_gap_sq = integrate_boundary_total(
      im, [&](const BoundaryPoint& bp) { return (h - bp.trace_mean) * (h - bp.trace_mean); },
      spec);
  out.int_trace_norm_sq =
      integrate_boundary_total(im, [](const BoundaryPoint& bp) { return bp.trace_norm_sq; }, spec);

  out.l_mu0 = (mu0 - 1.0) * ((n + 1.0) * out.int_mean_gap_sq + out.int_trace_norm_sq -
                             2.0 * h * h * out.boundary_measure);
  out.rhs = 0.5 * n * (out.int_mean_gap_sq - out.int_trace_norm_sq) +
            2.0 * mu0 * h * out.int_trace_mean -
            (3.0 * n - 2.0) / (2.0 * n) * h * h * out.boundary_measure + out.l_mu0;
  out.margin = out.lhs - out.rhs;

  const double area = integrate_surface_value(
      im, [](const ParamVec&, const FundamentalData&) { return 1.0; }, spec);
  out.equality = out.int_phi_sq <= 1e-8 * (1.0 + area);
  return out;
}

double first_inequality_rhs_3d(const Immersion& im, const QuadSpec& spec,
                               std::span<const double> chi_components) {
  const int n = im.domain.dim();
  if (n != 3) throw hypothesis_error("first_inequality_rhs_3d: needs hypersurface dimension 3");
  const int c = im.model.curvature();
  const double h = declared_mean(im, "first_inequality_rhs_3d");
  const double mu0 = im.model.mu0();

  double chi_sum = 0.0;
  for (double chi : chi_components) chi_sum += chi;

  const double bdry = boundary_measure_total(im, spec);
  const double trace_mean =
      integrate_boundary_total(im, [](const BoundaryPoint& bp) { return bp.trace_mean; }, spec);
  const double gap_sq = integrate_boundary_total(
      im, [&](const BoundaryPoint& bp) { return (h - bp.trace_mean) * (h - bp.trace_mean); },
      spec);
  const double norm_sq =
      integrate_boundary_total(im, [](const BoundaryPoint& bp) { return bp.trace_norm_sq; }, spec);
  const double l_mu0 =
      (mu0 - 1.0) * (4.0 * gap_sq + norm_sq - 2.0 * h * h * bdry);

  return 6.0 * kPi * chi_sum + (2.0 * mu0 - 3.0) * h * trace_mean +
         (h * h - 9.0 * c - 9.0 * mu0 * mu0) / 3.0 * bdry + l_mu0;
}

SecondInequalityResult second_inequality(const Immersion& im, const FieldBundle& bundle,
                                         const QuadSpec& spec, double equality_rel_tol) {
  const int n = im.domain.dim();
  const int c = im.model.curvature();
  require_cmc(im, "second_inequality");
  const double h = declared_mean(im, "second_inequality");
  if (im.domain.marked_faces.empty())
    throw hypothesis_error("second_inequality: surface has no boundary faces");

  const double area = integrate_surface_value(
      im, [](const ParamVec&, const FundamentalData&) { return 1.0; }, spec);
  const double int_phi_sq = integrate_surface_value(
      im, [](const ParamVec&, const FundamentalData& fd) { return fd.phi_sq; }, spec);
  if (int_phi_sq <= 1e-8 * (1.0 + area))
    throw hypothesis_error("second_inequality: surface is totally umbilical");

  SecondInequalityResult out;
  const double interior_exp = (n - 2.0) / n;
  out.lhs = -integrate_surface_value(im, [&](const ParamVec&, const FundamentalData& fd) {
               const double phi = std::sqrt(std::max(0.0, fd.phi_sq));
               const double weight = n == 2 ? 1.0 : std::pow(phi, interior_exp);
               return weight * p_H(c, n, h, phi);
             }, spec);

  const int cells = bundle.ctx.grid.axes[0].cells;
  const double bdry_exp = (n + 2.0) / n;
  double rhs = 0.0;
  out.min_phi_boundary = std::numeric_limits<double>::infinity();
  for (const auto& face : im.domain.marked_faces) {
    BoundaryTraceGrid trace = build_trace(im, face, cells);
    std::vector<double> vals(trace.points.size());
    std::array<int, kMaxParamDim> idx{};
    for (long t = 0; t < static_cast<long>(trace.points.size()); ++t) {
      std::array<int, kMaxParamDim> fidx{};
      trace.face_grid.unflatten(t, std::span<int>(fidx.data(), trace.face_grid.dim()));
      lift_face_index(bundle.ctx.grid, face,
                      std::span<const int>(fidx.data(), trace.face_grid.dim()),
                      std::span<int>(idx.data(), n));
      const auto idx_span = std::span<const int>(idx.data(), n);
      const long flat = bundle.ctx.grid.flat_index(idx_span);
      const double phi = bundle.phi_abs.v[flat];
      out.min_phi_boundary = std::min(out.min_phi_boundary, phi);
      const double nu_phi_sq = conormal_derivative(bundle.ctx.grid, bundle.phi_sq, idx_span,
                                                   face, trace.points[t].conormal_comp);
      vals[t] = std::pow(phi, -bdry_exp) * nu_phi_sq;
    }
    rhs += integrate_trace_nodes(trace, vals);
  }
  if (out.min_phi_boundary <= 1e-8)
    throw hypothesis_error("second_inequality: boundary integrand not integrable (|phi| ~ 0)");
  out.rhs = 0.5 * rhs;
  out.margin = out.rhs - out.lhs;
  const double h_axis = bundle.ctx.grid.axes[im.domain.marked_faces[0].axis].step();
  const double eq_tol = std::max(equality_rel_tol, 4.0 * h_axis * h_axis);
  out.equality = std::abs(out.margin) <= eq_tol * equality_scale(out.lhs, out.rhs);
  return out;
}

GaussBonnetResult gauss_bonnet_check(const Immersion& im, const QuadSpec& spec) {
  const int n = im.domain.dim();
  if (n != 2) throw hypothesis_error("gauss_bonnet_check: needs a surface (n = 2)");
  const int c = im.model.curvature();
  const double mu0 = im.model.mu0();

  GaussBonnetResult out;
  out.int_k = integrate_surface_value(im, [&](const ParamVec&, const FundamentalData& fd) {
                return gauss_curvature_2d(fd, c);
              }, spec);

  // Geodesic curvature with the surface on the left: k_g = g(cov, -nu)/|g'|^2,
  // integrated against arclength.
  for (const auto& face : im.domain.marked_faces) {
    const int tangent_axis = face.axis == 0 ? 1 : 0;
    IntegralValue part = integrate_boundary(
        im, face,
        [&](const BoundaryPoint& bp) {
          const Jet jet = im.jet(bp.u);
          AmbientVec gp = jet.dx.col(tangent_axis);
          AmbientVec cov = jet.second(tangent_axis, tangent_axis, n) +
                           im.model.christoffel_apply(gp, gp, jet.x);
          const double speed_sq = bp.fd.metric(tangent_axis, tangent_axis);
          const double kg_num = -bp.fd.conf * cov.dot(bp.conormal);
          // integrand against the trace density: k_g |g'| / sqrt(det trace)
          return kg_num / speed_sq * std::sqrt(speed_sq) / bp.sqrt_det_trace;
        },
        spec);
    out.kg_total += part.value;
    out.boundary_measure += integrate_boundary(
        im, face, [](const BoundaryPoint&) { return 1.0; }, spec).value;
  }
  out.chi_estimate = (out.int_k + out.kg_total) / (2.0 * kPi);
  out.kg_minus_mu0_measure = out.kg_total - mu0 * out.boundary_measure;
  return out;
}

EqualityChainResult equality_topology_diagnostic(const Immersion& im, const FieldBundle& bundle,
                                                 const QuadSpec& spec) {
  const int n = im.domain.dim();
  if (n != 2) throw hypothesis_error("equality_topology_diagnostic: needs a surface (n = 2)");
  require_free_boundary(im, "equality_topology_diagnostic");
  require_cmc(im, "equality_topology_diagnostic");
  const double h = declared_mean(im, "equality_topology_diagnostic");
  const int c = im.model.curvature();
  const double mu0 = im.model.mu0();

  const double area = integrate_surface_value(
      im, [](const ParamVec&, const FundamentalData&) { return 1.0; }, spec);
  const double int_phi_sq = integrate_surface_value(
      im, [](const ParamVec&, const FundamentalData& fd) { return fd.phi_sq; }, spec);
  if (int_phi_sq <= 1e-8 * (1.0 + area))
    throw hypothesis_error("equality_topology_diagnostic: surface is totally umbilical");

  EqualityChainResult out;
  const int cells = bundle.ctx.grid.axes[0].cells;
  for (const auto& face : im.domain.marked_faces) {
    BoundaryTraceGrid trace = build_trace(im, face, cells);
    std::vector<double> vals(trace.points.size());
    std::array<int, kMaxParamDim> idx{};
    for (long t = 0; t < static_cast<long>(trace.points.size()); ++t) {
      std::array<int, kMaxParamDim> fidx{};
      trace.face_grid.unflatten(t, std::span<int>(fidx.data(), trace.face_grid.dim()));
      lift_face_index(bundle.ctx.grid, face,
                      std::span<const int>(fidx.data(), trace.face_grid.dim()),
                      std::span<int>(idx.data(), n));
      const auto idx_span = std::span<const int>(idx.data(), n);
      const long flat = bundle.ctx.grid.flat_index(idx_span);
      const double phi_sq = std::max(bundle.phi_sq.v[flat], 1e-300);
      const double nu_phi_sq = conormal_derivative(bundle.ctx.grid, bundle.phi_sq, idx_span,
                                                   face, trace.points[t].conormal_comp);
      vals[t] = nu_phi_sq / phi_sq;
    }
    out.boundary_identity += integrate_trace_nodes(trace, vals);
  }

  GaussBonnetResult gb = gauss_bonnet_check(im, spec);
  out.chi = gb.chi_estimate;
  out.boundary_expected = -4.0 * mu0 * gb.boundary_measure;
  out.chain_lhs = integrate_surface_value(im, [&](const ParamVec&, const FundamentalData& fd) {
                    const double phi = std::sqrt(std::max(0.0, fd.phi_sq));
                    return p_H(c, n, h, phi);
                  }, spec);
  out.chain_rhs = 2.0 * (mu0 * gb.boundary_measure - 2.0 * kPi * out.chi);
  out.chi_nonpositive = out.chi <= 1e-6;
  out.equality = std::abs(out.chi) <= 1e-3;
  return out;
}

DivergenceCheck divergence_theorem_check(const FieldBundle& bundle) {
  const Immersion& im = *bundle.ctx.im;
  const int n = bundle.ctx.dim();
  DivergenceCheck out;
  out.interior = integrate_field_nodes(bundle.ctx, bundle.lap_phi_sq);
  const int cells = bundle.ctx.grid.axes[0].cells;
  for (const auto& face : im.domain.marked_faces) {
    BoundaryTraceGrid trace = build_trace(im, face, cells);
    std::vector<double> vals(trace.points.size());
    std::array<int, kMaxParamDim> idx{};
    for (long t = 0; t < static_cast<long>(trace.points.size()); ++t) {
      std::array<int, kMaxParamDim> fidx{};
      trace.face_grid.unflatten(t, std::span<int>(fidx.data(), trace.face_grid.dim()));
      lift_face_index(bundle.ctx.grid, face,
                      std::span<const int>(fidx.data(), trace.face_grid.dim()),
                      std::span<int>(idx.data(), n));
      const auto idx_span = std::span<const int>(idx.data(), n);
      vals[t] = conormal_derivative(bundle.ctx.grid, bundle.phi_sq, idx_span, face,
                                    trace.points[t].conormal_comp);
    }
    out.boundary += integrate_trace_nodes(trace, vals);
  }
  out.residual = std::abs(out.interior - out.boundary);
  return out;
}

}  // namespace cmclab
