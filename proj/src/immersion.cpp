#include "cmclab/immersion.hpp"

#include <cmath>
#include <stdexcept>

namespace cmclab {

Grid ParamDomain::grid(int cells) const {
  Grid g;
  g.axes.reserve(axes.size());
  for (const auto& ax : axes) {
    GridAxis ga;
    ga.a = ax.a;
    ga.b = ax.b;
    ga.cells = cells;
    ga.periodic = ax.periodic;
    ga.offset_low = ax.offset_low;
    ga.offset_high = ax.offset_high;
    g.axes.push_back(ga);
  }
  return g;
}

std::vector<BoundaryFace> ParamDomain::physical_faces() const {
  std::vector<BoundaryFace> faces;
  for (int d = 0; d < dim(); ++d) {
    if (axes[d].periodic) continue;
    if (!axes[d].offset_low) faces.push_back({d, false});
    if (!axes[d].offset_high) faces.push_back({d, true});
  }
  return faces;
}

FundamentalData fundamental_data(const Immersion& im, const ParamVec& u) {
  const int n = im.domain.dim();
  const Jet jet = im.jet(u);
  const AmbientModel& model = im.model;

  FundamentalData fd;
  fd.n = n;
  fd.conf = model.conformal_factor(jet.x);
  fd.position = jet.x;
  fd.tangents = jet.dx;

  // Induced metric and rank condition (singular values of dX are the square
  // roots of the Euclidean Gram eigenvalues).
  ParamMat gram_euclid = jet.dx.transpose() * jet.dx;
  {
    double lam_min, lam_max;
    if (n == 2) {
      Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es;
      es.computeDirect(Eigen::Matrix2d(gram_euclid));
      lam_min = es.eigenvalues().minCoeff();
      lam_max = es.eigenvalues().maxCoeff();
    } else {
      Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es;
      es.computeDirect(Eigen::Matrix3d(gram_euclid));
      lam_min = es.eigenvalues().minCoeff();
      lam_max = es.eigenvalues().maxCoeff();
    }
    if (!(lam_min > 0.0) || std::sqrt(lam_min / lam_max) < 1e-10)
      throw std::domain_error("immersion: tangent map is rank-deficient");
  }

  fd.metric = fd.conf * gram_euclid;
  fd.metric_inv = fd.metric.inverse();
  fd.sqrt_det = std::sqrt(fd.metric.determinant());

  // Metric-unit normal from the oriented complement of the tangents.
  AmbientVec raw = hodge_normal(jet.dx);
  const double raw_norm = raw.norm();
  fd.normal = im.normal_sign * raw / (raw_norm * std::sqrt(fd.conf));

  // h_ij = g(d2X + Gamma(dXi, dXj), normal); g(v, w) = conf * <v, w>_euclid.
  fd.second_ff.resize(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      AmbientVec cov = jet.second(i, j, n) +
                       model.christoffel_apply(jet.dx.col(i), jet.dx.col(j), jet.x);
      const double hij = fd.conf * cov.dot(fd.normal);
      fd.second_ff(i, j) = hij;
      fd.second_ff(j, i) = hij;
    }
  }

  fd.shape = fd.metric_inv * fd.second_ff;
  fd.kappas = self_adjoint_eigenvalues(fd.metric, fd.second_ff);
  fd.mean = fd.kappas.sum();
  fd.norm_a_sq = fd.kappas.squaredNorm();
  // assemble |phi|^2 from the trace-free deviations; algebraically equal to
  // |A|^2 - H^2/n but nonnegative in floating point
  double phi_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double s = fd.kappas(i) - fd.mean / n;
    phi_sq += s * s;
  }
  fd.phi_sq = phi_sq;
  return fd;
}

double p_H(int curvature, int n, double h, double t) {
  const double slope = (n - 2) / std::sqrt(double(n) * (n - 1));
  return t * t + slope * std::abs(h) * t - h * h / n - double(n) * curvature;
}

double gauss_curvature_2d(const FundamentalData& fd, int curvature) {
  if (fd.n != 2) throw std::invalid_argument("gauss_curvature_2d: surface dimension must be 2");
  return fd.kappas(0) * fd.kappas(1) + curvature;
}

double gauss_identity_residual_2d(const FundamentalData& fd, int curvature) {
  const double k = gauss_curvature_2d(fd, curvature);
  return fd.phi_sq + 2.0 * (k - curvature) - fd.mean * fd.mean / 2.0;
}

std::function<Jet(const ParamVec&)> jet_from_position(
    std::function<AmbientVec(const ParamVec&)> position, int n, double step) {
  return [position = std::move(position), n, step](const ParamVec& u) {
    auto shift = [&](int axis, double d) {
      ParamVec v = u;
      v(axis) += d;
      return v;
    };
    Jet jet;
    jet.x = position(u);
    const int m = static_cast<int>(jet.x.size());
    jet.dx.resize(m, n);
    auto d1 = [&](const std::function<AmbientVec(const ParamVec&)>& f, const ParamVec& at,
                  int axis) -> AmbientVec {
      auto eval = [&](double d) {
        ParamVec q = at;
        q(axis) += d;
        return f(q);
      };
      return (-eval(2 * step) + 8.0 * eval(step) - 8.0 * eval(-step) + eval(-2 * step)) /
             (12.0 * step);
    };
    for (int i = 0; i < n; ++i) jet.dx.col(i) = d1(position, u, i);
    for (int i = 0; i < n; ++i) {
      // pure second derivative, order-4 central
      auto eval = [&](double d) { return position(shift(i, d)); };
      jet.second(i, i, n) = (-eval(2 * step) + 16.0 * eval(step) - 30.0 * eval(0.0) +
                             16.0 * eval(-step) - eval(-2 * step)) /
                            (12.0 * step * step);
      for (int j = i + 1; j < n; ++j) {
        auto di = [&](const ParamVec& at) { return d1(position, at, i); };
        AmbientVec mixed = (-di(shift(j, 2 * step)) + 8.0 * di(shift(j, step)) -
                            8.0 * di(shift(j, -step)) + di(shift(j, -2 * step))) /
                           (12.0 * step);
        jet.second(i, j, n) = mixed;
        jet.second(j, i, n) = mixed;
      }
    }
    return jet;
  };
}

}  // namespace cmclab
