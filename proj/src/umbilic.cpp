#include "cmclab/umbilic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cmclab {

namespace {

constexpr double kPi = std::numbers::pi;

using Complex = std::complex<double>;

int wrap_index(const GridAxis& ax, int i) {
  if (!ax.periodic) return i;
  const int n = ax.nodes();
  return ((i % n) + n) % n;
}

bool index_valid(const Grid& g, int axis, int i) {
  if (g.axes[axis].periodic) return true;
  return i >= 0 && i < g.axes[axis].nodes();
}

Complex field_at(const HopfField& f, int i0, int i1) {
  std::array<int, 2> idx = {wrap_index(f.grid.axes[0], i0), wrap_index(f.grid.axes[1], i1)};
  return f.w[f.grid.flat_index(std::span<const int>(idx.data(), 2))];
}

/// Sum the argument increments along a node path; throws if the field is too
/// small to carry a well-defined phase somewhere on the path, or if a single
/// step turns so far that the phase cannot be tracked.
double path_argument(const HopfField& f, const std::vector<std::array<int, 2>>& path,
                     double floor_abs) {
  double total = 0.0;
  Complex prev = field_at(f, path[0][0], path[0][1]);
  if (std::abs(prev) < floor_abs) throw std::runtime_error("winding loop crosses a zero");
  for (size_t k = 1; k < path.size(); ++k) {
    Complex cur = field_at(f, path[k][0], path[k][1]);
    if (std::abs(cur) < floor_abs) throw std::runtime_error("winding loop crosses a zero");
    const double step = std::arg(cur / prev);
    if (std::abs(step) > 2.8) throw std::runtime_error("winding loop too coarse");
    total += step;
    prev = cur;
  }
  return total;
}

// closed counterclockwise rectangle in the (axis0, axis1) plane with
// per-axis radii
std::vector<std::array<int, 2>> full_ring(int c0, int c1, int r0, int r1) {
  std::vector<std::array<int, 2>> path;
  path.reserve(4 * (r0 + r1) + 1);
  for (int j = -r1; j < r1; ++j) path.push_back({c0 + r0, c1 + j});
  for (int i = r0; i > -r0; --i) path.push_back({c0 + i, c1 + r1});
  for (int j = r1; j > -r1; --j) path.push_back({c0 - r0, c1 + j});
  for (int i = -r0; i < r0; ++i) path.push_back({c0 + i, c1 - r1});
  path.push_back({c0 + r0, c1 - r1});  // closure
  return path;
}

/// Interior arc of the ring for a zero sitting on a face of axis 0, traversed
/// counterclockwise (angle increasing) from one face end to the other.
std::vector<std::array<int, 2>> half_ring_axis0(int c0, int c1, int r0, int r1,
                                                bool high_face) {
  std::vector<std::array<int, 2>> path;
  path.reserve(2 * (r0 + r1) + 1);
  if (high_face) {
    // the interior sits at smaller axis-0 index: north -> west -> south
    for (int i = 0; i >= -r0; --i) path.push_back({c0 + i, c1 + r1});
    for (int j = r1 - 1; j >= -r1; --j) path.push_back({c0 - r0, c1 + j});
    for (int i = -r0 + 1; i <= 0; ++i) path.push_back({c0 + i, c1 - r1});
  } else {
    // the interior sits at larger axis-0 index: south -> east -> north
    for (int i = 0; i <= r0; ++i) path.push_back({c0 + i, c1 - r1});
    for (int j = -r1 + 1; j <= r1; ++j) path.push_back({c0 + r0, c1 + j});
    for (int i = r0 - 1; i >= 0; --i) path.push_back({c0 + i, c1 + r1});
  }
  return path;
}

// per-axis index radii making the ring metrically isotropic
std::array<int, 2> ring_radii(const HopfField& f, long flat, int r) {
  if (f.step_len.empty()) return {r, r};
  const double s0 = f.step_len[flat][0], s1 = f.step_len[flat][1];
  const double big = std::max(s0, s1);
  const double target = r * big;
  return {std::max(3, static_cast<int>(std::lround(target / s0))),
          std::max(3, static_cast<int>(std::lround(target / s1)))};
}

std::vector<std::array<int, 2>> theta_row(const HopfField& f, int row) {
  const int n = f.grid.axes[1].nodes();
  std::vector<std::array<int, 2>> path;
  path.reserve(n + 1);
  for (int j = 0; j <= n; ++j) path.push_back({row, j});
  return path;
}

int rounded_winding(double angle, double turns_per_unit, const char* what) {
  const double turns = angle / (2.0 * kPi) * turns_per_unit;
  const double rounded = std::round(turns);
  if (std::abs(turns - rounded) > 0.1)
    throw std::runtime_error(std::string(what) + ": non-integer winding " + std::to_string(turns));
  return static_cast<int>(rounded);
}

struct Candidate {
  int i0, i1;
  double abs;
};

}  // namespace

HopfField hopf_field(const Immersion& im, int cells) {
  if (im.domain.dim() != 2)
    throw std::invalid_argument("hopf_field: surface dimension must be 2");
  HopfField f;
  f.grid = im.domain.grid(cells);
  f.faces = im.domain.marked_faces;
  f.pole_axis0_low = im.domain.axes[0].offset_low;
  f.w.resize(f.grid.node_count());
  f.step_len.resize(f.grid.node_count());
  for_each_node(f.grid, [&](long flat, std::span<const int>, const ParamVec& u) {
    FundamentalData fd = fundamental_data(im, u);
    f.step_len[flat] = {std::sqrt(fd.metric(0, 0)) * f.grid.axes[0].step(),
                        std::sqrt(fd.metric(1, 1)) * f.grid.axes[1].step()};
    // Gram-Schmidt frame from the coordinate tangents
    const double g11 = fd.metric(0, 0), g12 = fd.metric(0, 1), g22 = fd.metric(1, 1);
    const double c1 = 1.0 / std::sqrt(g11);
    const double n2_sq = g22 - g12 * g12 / g11;
    const double c2b = 1.0 / std::sqrt(n2_sq);
    const double c2a = -g12 / g11 * c2b;
    // trace-free bilinear form of the shape operator
    ParamMat hphi = fd.second_ff - 0.5 * fd.mean * fd.metric;
    const double a11 = c1 * c1 * hphi(0, 0);
    const double a12 = c1 * (c2a * hphi(0, 0) + c2b * hphi(0, 1));
    const double a22 = c2a * c2a * hphi(0, 0) + 2.0 * c2a * c2b * hphi(0, 1) +
                       c2b * c2b * hphi(1, 1);
    f.w[flat] = Complex(0.5 * (a11 - a22), -a12);
    f.max_abs = std::max(f.max_abs, std::abs(f.w[flat]));
  });
  return f;
}

int loop_winding(const HopfField& field, std::span<const int> center, int radius) {
  const long flat = field.grid.flat_index(center);
  auto radii = ring_radii(field, flat, radius);
  auto path = full_ring(center[0], center[1], radii[0], radii[1]);
  const double angle = path_argument(field, path, 1e-300);
  return rounded_winding(angle, 1.0, "loop_winding");
}

UmbilicReport detect_umbilics(const HopfField& field, const UmbilicOptions& opts) {
  const Grid& g = field.grid;
  const int n0 = g.axes[0].nodes();
  const int n1 = g.axes[1].nodes();
  if (g.dim() != 2) throw std::invalid_argument("detect_umbilics: grid dimension must be 2");

  if (field.max_abs < 1e-10)
    throw hypothesis_error("detect_umbilics: field vanishes identically, zeros not isolated");
  {
    long tiny = 0;
    for (const Complex& w : field.w)
      if (std::abs(w) < 1e-10) ++tiny;
    if (tiny > static_cast<long>(field.w.size()) / 4)
      throw hypothesis_error("detect_umbilics: zero set is not isolated");
  }

  const double thresh = opts.detect_rel * field.max_abs;
  auto abs_at = [&](int i, int j) { return std::abs(field_at(field, i, j)); };

  // grid-local minima of |w| under the threshold
  std::vector<Candidate> cands;
  for (int i = 0; i < n0; ++i) {
    for (int j = 0; j < n1; ++j) {
      const double v = abs_at(i, j);
      if (v >= thresh) continue;
      bool is_min = true;
      for (int di = -1; di <= 1 && is_min; ++di)
        for (int dj = -1; dj <= 1 && is_min; ++dj) {
          if (di == 0 && dj == 0) continue;
          if (!index_valid(g, 0, i + di)) continue;
          if (!g.axes[1].periodic && (j + dj < 0 || j + dj >= n1)) continue;
          if (abs_at(i + di, j + dj) < v) is_min = false;
        }
      if (is_min) cands.push_back({i, j, v});
    }
  }

  // merge candidates into clusters (representative = smallest |w|); all
  // candidates hiding behind the chart center collapse into one pole cluster
  std::sort(cands.begin(), cands.end(),
            [](const Candidate& a, const Candidate& b) { return a.abs < b.abs; });
  std::vector<Candidate> reps;
  bool have_pole = false;
  auto near = [&](const Candidate& a, const Candidate& b, int cells) {
    int d0 = std::abs(a.i0 - b.i0);
    int d1 = std::abs(a.i1 - b.i1);
    if (g.axes[1].periodic) d1 = std::min(d1, n1 - d1);
    return std::max(d0, d1) <= cells;
  };
  auto radii_of = [&](const Candidate& c) {
    std::array<int, 2> idx = {c.i0, c.i1};
    return ring_radii(field, g.flat_index(std::span<const int>(idx.data(), 2)),
                      opts.loop_radius);
  };
  auto near_pole = [&](const Candidate& c) {
    return field.pole_axis0_low && c.i0 <= radii_of(c)[0];
  };
  for (const auto& c : cands) {
    if (near_pole(c)) {
      if (!have_pole) {
        reps.push_back(c);
        have_pole = true;
      }
      continue;
    }
    bool merged = false;
    for (const auto& r : reps)
      if (!near_pole(r) && near(c, r, opts.cluster_cells)) {
        merged = true;
        break;
      }
    if (!merged) reps.push_back(c);
  }
  for (size_t a = 0; a < reps.size(); ++a)
    for (size_t b = a + 1; b < reps.size(); ++b) {
      if (near_pole(reps[a]) || near_pole(reps[b])) {
        // a regular zero must stay clear of the rows the pole loop walks
        const Candidate& reg = near_pole(reps[a]) ? reps[b] : reps[a];
        const Candidate& pol = near_pole(reps[a]) ? reps[a] : reps[b];
        if (reg.i0 <= pol.i0 + 2 * radii_of(pol)[0] + 2)
          throw std::runtime_error("detect_umbilics: unresolved zero cluster");
        continue;
      }
      const auto ra = radii_of(reps[a]);
      const auto rb = radii_of(reps[b]);
      int d1 = std::abs(reps[a].i1 - reps[b].i1);
      if (g.axes[1].periodic) d1 = std::min(d1, n1 - d1);
      if (std::abs(reps[a].i0 - reps[b].i0) <= std::max(ra[0], rb[0]) &&
          d1 <= std::max(ra[1], rb[1]))
        throw std::runtime_error("detect_umbilics: unresolved zero cluster");
    }

  UmbilicReport report;
  const double floor_abs = 1e-14 * std::max(1.0, field.max_abs);
  for (const auto& rep : reps) {
    const auto radii = radii_of(rep);
    const bool at_pole = near_pole(rep);
    bool on_face = false;
    bool face_high = true;
    for (const auto& face : field.faces) {
      if (face.axis != 0) continue;  // surfaces here carry faces on axis 0
      const int face_row = face.high ? n0 - 1 : 0;
      if (std::abs(rep.i0 - face_row) <= opts.cluster_cells && !at_pole) {
        on_face = true;
        face_high = face.high;
      }
    }

    int mult = 0;
    if (at_pole) {
      // circle around the hidden chart center
      const int r1 = rep.i0 + radii[0];
      const int r2 = r1 + 2;
      if (r2 >= n0) throw std::runtime_error("detect_umbilics: pole loop leaves the grid");
      const int w1 = rounded_winding(path_argument(field, theta_row(field, r1), floor_abs), 1.0,
                                     "pole loop");
      const int w2 = rounded_winding(path_argument(field, theta_row(field, r2), floor_abs), 1.0,
                                     "pole loop");
      if (w1 != w2) throw std::runtime_error("detect_umbilics: pole winding radius mismatch");
      mult = w1;
    } else if (on_face) {
      const int row = face_high ? n0 - 1 : 0;
      auto wind_half = [&](int extra) {
        auto path = half_ring_axis0(row, rep.i1, radii[0] + extra, radii[1] + extra, face_high);
        const double angle = path_argument(field, path, floor_abs);
        return rounded_winding(angle, 2.0, "boundary half loop");  // doubled
      };
      const int w1 = wind_half(0);
      const int w2 = wind_half(2);
      if (w1 != w2) throw std::runtime_error("detect_umbilics: boundary winding radius mismatch");
      mult = w1;
    } else {
      if (!index_valid(g, 0, rep.i0 - radii[0] - 2) || !index_valid(g, 0, rep.i0 + radii[0] + 2))
        throw std::runtime_error("detect_umbilics: interior loop leaves the grid");
      auto wind_full = [&](int extra) {
        auto path = full_ring(rep.i0, rep.i1, radii[0] + extra, radii[1] + extra);
        const double angle = path_argument(field, path, floor_abs);
        return rounded_winding(angle, 1.0, "interior loop");
      };
      const int w1 = wind_full(0);
      const int w2 = wind_full(2);
      if (w1 != w2) throw std::runtime_error("detect_umbilics: winding radius mismatch");
      mult = w1;
    }

    if (mult == 0) continue;  // a dip of |w| without a zero

    UmbilicPoint p;
    std::array<int, 2> idx = {at_pole ? 0 : rep.i0, rep.i1};
    p.location = g.point(std::span<const int>(idx.data(), 2));
    p.multiplicity = mult;
    p.on_boundary = on_face;
    report.points.push_back(p);
    if (on_face)
      report.theta_boundary += mult;
    else
      report.theta_interior += mult;
  }
  return report;
}

EulerCountResult euler_count_check(const Immersion& im, const QuadSpec& spec,
                                   const UmbilicOptions& opts) {
  if (im.domain.dim() != 2)
    throw hypothesis_error("euler_count_check: needs a surface (n = 2)");
  {
    FreeBoundaryResidual r = free_boundary_residual(im, 32);
    if (r.contain > 1e-6 || r.ortho > 1e-6)
      throw hypothesis_error("euler_count_check: free-boundary condition fails");
  }
  if (!im.h_decl) throw hypothesis_error("euler_count_check: no declared mean curvature");

  EulerCountResult out;
  out.chi_gb = gauss_bonnet_check(im, spec).chi_estimate;
  if (std::abs(out.chi_gb - 1.0) < 0.5)
    throw hypothesis_error("euler_count_check: surface is a disk");

  HopfField field = hopf_field(im, spec.cells);
  UmbilicReport rep = detect_umbilics(field, opts);
  out.theta_interior = rep.theta_interior;
  out.theta_boundary = rep.theta_boundary;
  out.residual = out.chi_gb + out.theta_interior / 2.0 + out.theta_boundary / 4.0;
  return out;
}

double SyntheticPhi::g(double x, double y) const {
  double s = 0.0;
  for (size_t k = 0; k < g_coeff.size(); ++k)
    s += g_coeff[k] * std::pow(x, g_px[k]) * std::pow(y, g_py[k]);
  return s;
}

void SyntheticPhi::grad_g(double x, double y, double& gx, double& gy) const {
  gx = gy = 0.0;
  for (size_t k = 0; k < g_coeff.size(); ++k) {
    const int p = g_px[k], q = g_py[k];
    if (p > 0) gx += g_coeff[k] * p * std::pow(x, p - 1) * std::pow(y, q);
    if (q > 0) gy += g_coeff[k] * q * std::pow(x, p) * std::pow(y, q - 1);
  }
}

double SyntheticPhi::lap_g(double x, double y) const {
  double s = 0.0;
  for (size_t k = 0; k < g_coeff.size(); ++k) {
    const int p = g_px[k], q = g_py[k];
    if (p >= 2) s += g_coeff[k] * p * (p - 1) * std::pow(x, p - 2) * std::pow(y, q);
    if (q >= 2) s += g_coeff[k] * q * (q - 1) * std::pow(x, p) * std::pow(y, q - 2);
  }
  return s;
}

Complex SyntheticPhi::psi(Complex z) const {
  Complex p(1.0, 0.0);
  for (const auto& zero : zeros)
    for (int m = 0; m < zero.multiplicity; ++m) p *= z - zero.z;
  return p;
}

Complex SyntheticPhi::w(Complex z) const {
  return psi(z) * std::exp(g(z.real(), z.imag()));
}

double SyntheticPhi::nu_log_phi(double theta, bool outer) const {
  const double r = outer ? 1.0 : rho0;
  const Complex z = std::polar(r, theta);
  const double sign = outer ? 1.0 : -1.0;
  double total = 0.0;
  const Complex dir = std::polar(1.0, theta);  // radial direction
  for (const auto& zero : zeros) {
    double term;
    if (std::abs(std::abs(zero.z) - r) < 1e-12) {
      // zero on this circle: Re(dir/(z - z_j)) is the constant 1/(2r)
      term = 1.0 / (2.0 * r);
    } else {
      term = (dir / (z - zero.z)).real();
    }
    total += zero.multiplicity * term;
  }
  double gx, gy;
  grad_g(z.real(), z.imag(), gx, gy);
  total += gx * std::cos(theta) + gy * std::sin(theta);
  return sign * total;
}

int SyntheticPhi::theta_interior() const {
  int t = 0;
  for (const auto& zero : zeros) {
    const double a = std::abs(zero.z);
    if (std::abs(a - 1.0) > 1e-12 && (rho0 == 0.0 || std::abs(a - rho0) > 1e-12))
      t += zero.multiplicity;
  }
  return t;
}

int SyntheticPhi::theta_boundary() const {
  int t = 0;
  for (const auto& zero : zeros) {
    const double a = std::abs(zero.z);
    if (std::abs(a - 1.0) <= 1e-12 || (rho0 > 0.0 && std::abs(a - rho0) <= 1e-12))
      t += zero.multiplicity;
  }
  return t;
}

Grid SyntheticPhi::chart_grid(int cells) const {
  Grid g;
  GridAxis rho;
  rho.a = rho0;
  rho.b = 1.0;
  rho.cells = cells;
  rho.offset_low = rho0 == 0.0;  // keep the chart center off the grid
  GridAxis th;
  th.a = 0.0;
  th.b = 2.0 * kPi;
  th.cells = cells;
  th.periodic = true;
  g.axes = {rho, th};
  return g;
}

HopfField SyntheticPhi::field(int cells) const {
  HopfField f;
  f.grid = chart_grid(cells);
  f.pole_axis0_low = rho0 == 0.0;
  f.faces.push_back({0, true});
  if (rho0 > 0.0) f.faces.push_back({0, false});
  f.w.resize(f.grid.node_count());
  f.step_len.resize(f.grid.node_count());
  for_each_node(f.grid, [&](long flat, std::span<const int>, const ParamVec& u) {
    const Complex z = std::polar(u(0), u(1));
    f.w[flat] = w(z);
    f.max_abs = std::max(f.max_abs, std::abs(f.w[flat]));
    f.step_len[flat] = {f.grid.axes[0].step(), u(0) * f.grid.axes[1].step()};
  });
  return f;
}

LogLemmaResult log_lemma_check(const SyntheticPhi& phi, const QuadSpec& spec) {
  LogLemmaResult out;

  // interior integral of lap(log phi): only the smooth factor contributes
  std::vector<ParamAxis> axes(2);
  axes[0] = {phi.rho0, 1.0, false, phi.rho0 == 0.0, false};
  axes[1] = {0.0, 2.0 * kPi, true, false, false};
  out.lhs = integrate_chart(axes,
                            [&](const ParamVec& u) {
                              const double x = u(0) * std::cos(u(1));
                              const double y = u(0) * std::sin(u(1));
                              return phi.lap_g(x, y) * u(0);  // polar density
                            },
                            spec);

  std::vector<ParamAxis> circle(1);
  circle[0] = {0.0, 2.0 * kPi, true, false, false};
  out.boundary = integrate_chart(circle,
                                 [&](const ParamVec& u) { return phi.nu_log_phi(u(0), true); },
                                 spec);
  if (phi.rho0 > 0.0)
    out.boundary += phi.rho0 * integrate_chart(circle,
                                               [&](const ParamVec& u) {
                                                 return phi.nu_log_phi(u(0), false);
                                               },
                                               spec);
  out.rhs = -2.0 * kPi * phi.theta_interior() - kPi * phi.theta_boundary() + out.boundary;
  out.residual = std::abs(out.lhs - out.rhs);
  return out;
}

}  // namespace cmclab
