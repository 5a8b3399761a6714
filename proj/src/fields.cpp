#include "cmclab/fields.hpp"

#include <cmath>
#include <stdexcept>

namespace cmclab {

namespace {

int packed_index(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  // row-major upper triangle
  return i * n - i * (i - 1) / 2 + (j - i);
}

// Sample with wrap on periodic axes; callers keep interval offsets in range.
double sample(const Grid& grid, const std::vector<double>& v, std::span<const int> idx,
              int axis, int off) {
  const GridAxis& ax = grid.axes[axis];
  int i = idx[axis] + off;
  if (ax.periodic) {
    const int n = ax.nodes();
    i = ((i % n) + n) % n;
  }
  std::array<int, kMaxParamDim> tmp;
  for (int d = 0; d < grid.dim(); ++d) tmp[d] = idx[d];
  tmp[axis] = i;
  return v[grid.flat_index(std::span<const int>(tmp.data(), grid.dim()))];
}

}  // namespace

double FieldContext::inv_at(long flat, int i, int j) const {
  return inv_metric[flat * packed_size() + packed_index(dim(), i, j)];
}

FieldContext build_field_context(const Immersion& im, int cells, int order) {
  if (order != 2 && order != 4) throw std::invalid_argument("stencil order must be 2 or 4");
  FieldContext ctx;
  ctx.im = &im;
  ctx.grid = im.domain.grid(cells);
  ctx.order = order;
  const int n = ctx.dim();
  const long total = ctx.grid.node_count();
  ctx.sqrt_det.resize(total);
  ctx.inv_metric.resize(total * ctx.packed_size());
  for_each_node(ctx.grid, [&](long flat, std::span<const int>, const ParamVec& u) {
    FundamentalData fd = fundamental_data(im, u);
    ctx.sqrt_det[flat] = fd.sqrt_det;
    double* dst = ctx.inv_metric.data() + flat * ctx.packed_size();
    int p = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) dst[p++] = fd.metric_inv(i, j);
  });
  return ctx;
}

GridScalar sample_field(const FieldContext& ctx,
                        const std::function<double(const ParamVec&, const FundamentalData&)>& f) {
  GridScalar out(ctx.grid);
  for_each_node(ctx.grid, [&](long flat, std::span<const int>, const ParamVec& u) {
    out.v[flat] = f(u, fundamental_data(*ctx.im, u));
  });
  return out;
}

GridScalar sample_param_field(const Grid& grid, const std::function<double(const ParamVec&)>& f) {
  GridScalar out(grid);
  for_each_node(grid, [&](long flat, std::span<const int>, const ParamVec& u) {
    out.v[flat] = f(u);
  });
  return out;
}

double axis_derivative(const Grid& grid, const std::vector<double>& v,
                       std::span<const int> idx, int axis, int order) {
  const GridAxis& ax = grid.axes[axis];
  const double h = ax.step();
  auto at = [&](int off) { return sample(grid, v, idx, axis, off); };
  const int i = idx[axis];
  const int last = ax.nodes() - 1;

  if (ax.periodic) {
    if (order == 2) return (at(1) - at(-1)) / (2 * h);
    return (-at(2) + 8 * at(1) - 8 * at(-1) + at(-2)) / (12 * h);
  }

  if (order == 2) {
    if (i >= 1 && i <= last - 1) return (at(1) - at(-1)) / (2 * h);
    if (i == 0) return (-3 * at(0) + 4 * at(1) - at(2)) / (2 * h);
    return (3 * at(0) - 4 * at(-1) + at(-2)) / (2 * h);
  }

  if (i >= 2 && i <= last - 2) return (-at(2) + 8 * at(1) - 8 * at(-1) + at(-2)) / (12 * h);
  if (i <= 1) {
    const int s = i;  // shift so the 5-point window starts at the edge
    auto a = [&](int k) { return at(k - s); };
    if (s == 0)
      return (-25 * a(0) + 48 * a(1) - 36 * a(2) + 16 * a(3) - 3 * a(4)) / (12 * h);
    return (-3 * a(0) - 10 * a(1) + 18 * a(2) - 6 * a(3) + a(4)) / (12 * h);
  }
  const int s = last - i;
  auto a = [&](int k) { return at(s - k); };  // mirrored window
  if (s == 0)
    return (25 * a(0) - 48 * a(1) + 36 * a(2) - 16 * a(3) + 3 * a(4)) / (12 * h);
  return (3 * a(0) + 10 * a(1) - 18 * a(2) + 6 * a(3) - a(4)) / (12 * h);
}

double surface_gradient_sq(const FieldContext& ctx, const GridScalar& f,
                           std::span<const int> idx) {
  const int n = ctx.dim();
  const long flat = ctx.grid.flat_index(idx);
  std::array<double, kMaxParamDim> df;
  for (int d = 0; d < n; ++d) df[d] = axis_derivative(ctx.grid, f.v, idx, d, ctx.order);
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s += ctx.inv_at(flat, i, j) * df[i] * df[j];
  return s;
}

GridScalar laplace_beltrami_field(const FieldContext& ctx, const GridScalar& f) {
  const int n = ctx.dim();
  const long total = ctx.grid.node_count();

  // flux^i = sqrt(g) g^{ij} dj f
  std::vector<std::vector<double>> flux(n, std::vector<double>(total));
  for_each_node(ctx.grid, [&](long flat, std::span<const int> idx, const ParamVec&) {
    std::array<double, kMaxParamDim> df;
    for (int d = 0; d < n; ++d) df[d] = axis_derivative(ctx.grid, f.v, idx, d, ctx.order);
    for (int i = 0; i < n; ++i) {
      double s = 0.0;
      for (int j = 0; j < n; ++j) s += ctx.inv_at(flat, i, j) * df[j];
      flux[i][flat] = ctx.sqrt_det[flat] * s;
    }
  });

  GridScalar lap(ctx.grid);
  for_each_node(ctx.grid, [&](long flat, std::span<const int> idx, const ParamVec&) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += axis_derivative(ctx.grid, flux[i], idx, i, ctx.order);
    lap.v[flat] = s / ctx.sqrt_det[flat];
  });
  return lap;
}

double conormal_derivative(const Grid& grid, const GridScalar& f, std::span<const int> idx,
                           const BoundaryFace& face, const ParamVec& conormal_components) {
  const int n = grid.dim();
  double result = 0.0;
  for (int d = 0; d < n; ++d) {
    const double c = conormal_components(d);
    if (c == 0.0 && d != face.axis) continue;
    double df;
    if (d == face.axis) {
      const double h = grid.axes[d].step();
      auto at = [&](int off) { return sample(grid, f.v, idx, d, off); };
      // 3-point one-sided into the domain
      df = face.high ? (3 * at(0) - 4 * at(-1) + at(-2)) / (2 * h)
                     : (-3 * at(0) + 4 * at(1) - at(2)) / (2 * h);
    } else {
      df = axis_derivative(grid, f.v, idx, d, 2);
    }
    result += c * df;
  }
  return result;
}

FieldBundle build_field_bundle(const Immersion& im, int cells, int order) {
  FieldBundle b;
  b.ctx = build_field_context(im, cells, order);
  b.phi_sq = sample_field(b.ctx, [](const ParamVec&, const FundamentalData& fd) {
    return fd.phi_sq;
  });
  b.phi_abs = GridScalar(b.ctx.grid);
  for (long i = 0; i < static_cast<long>(b.phi_sq.v.size()); ++i)
    b.phi_abs.v[i] = std::sqrt(std::max(0.0, b.phi_sq.v[i]));
  b.lap_phi_sq = laplace_beltrami_field(b.ctx, b.phi_sq);
  return b;
}

double simons_residual(const FieldBundle& bundle, std::span<const int> idx, double h_const) {
  const FieldContext& ctx = bundle.ctx;
  const int n = ctx.dim();
  for (int d = 0; d < n; ++d) {
    const GridAxis& ax = ctx.grid.axes[d];
    if (ax.periodic) continue;
    if (idx[d] < 2 || idx[d] > ax.nodes() - 3)
      throw std::invalid_argument("simons_residual: point too close to the domain edge");
  }
  const long flat = ctx.grid.flat_index(idx);
  const double phi2 = bundle.phi_sq.v[flat];
  const double phi = bundle.phi_abs.v[flat];
  const double grad2 = surface_gradient_sq(ctx, bundle.phi_abs, idx);
  const double lap = bundle.lap_phi_sq.v[flat];
  const int c = ctx.im->model.curvature();
  return phi2 * p_H(c, n, h_const, phi) - (double(n) + 2.0) / n * grad2 + 0.5 * lap;
}

}  // namespace cmclab
