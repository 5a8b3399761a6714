#include "cmclab/ambient.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace cmclab {

namespace {
// u(t) = -log(1 + c t / 4), so u'(t) = -(c/4) / (1 + c t / 4).
double u_prime(int c, double t) { return -(c / 4.0) / (1.0 + c * t / 4.0); }
}  // namespace

double pairwise_sum(std::span<const double> xs) {
  if (xs.size() <= 8) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s;
  }
  const size_t half = xs.size() / 2;
  return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

AmbientVec hodge_normal(const TangentMat& t) {
  const int m = static_cast<int>(t.rows());
  const int n = static_cast<int>(t.cols());
  if (m != n + 1) throw std::invalid_argument("hodge_normal: need (n+1) x n tangents");
  AmbientVec normal(m);
  ParamMat minor(n, n);
  for (int k = 0; k < m; ++k) {
    int r = 0;
    for (int i = 0; i < m; ++i) {
      if (i == k) continue;
      minor.row(r++) = t.row(i);
    }
    const double d = minor.determinant();
    normal(k) = (k % 2 == 0) ? d : -d;
  }
  return normal;
}

namespace {

// eigenvalues of G^{-1/2} h G^{-1/2} through a Cholesky congruence and the
// closed-form symmetric eigensolver (sizes 2 and 3 only)
template <int N>
Eigen::Matrix<double, N, 1> congruent_eigs(const ParamMat& gram, const ParamMat& h) {
  Eigen::Matrix<double, N, N> g = gram, hh = h;
  Eigen::LLT<Eigen::Matrix<double, N, N>> llt(g);
  if (llt.info() != Eigen::Success)
    throw std::domain_error("self_adjoint_eigenvalues: metric not positive definite");
  Eigen::Matrix<double, N, N> l = llt.matrixL();
  Eigen::Matrix<double, N, N> x = l.template triangularView<Eigen::Lower>().solve(hh);
  Eigen::Matrix<double, N, N> b =
      l.template triangularView<Eigen::Lower>().solve(x.transpose()).transpose();
  b = (0.5 * (b + b.transpose())).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, N, N>> es;
  es.computeDirect(b);
  return es.eigenvalues();
}

}  // namespace

ParamVec self_adjoint_eigenvalues(const ParamMat& gram, const ParamMat& h) {
  const int n = static_cast<int>(gram.rows());
  if (n == 1) {
    if (!(gram(0, 0) > 0.0))
      throw std::domain_error("self_adjoint_eigenvalues: metric not positive definite");
    ParamVec v(1);
    v(0) = h(0, 0) / gram(0, 0);
    return v;
  }
  if (n == 2) return congruent_eigs<2>(gram, h);
  if (n == 3) return congruent_eigs<3>(gram, h);
  throw std::invalid_argument("self_adjoint_eigenvalues: unsupported size");
}

AmbientModel AmbientModel::make(int curvature, int ambient_dim, RadiusConvention conv) {
  if (curvature != -1 && curvature != 0 && curvature != 1)
    throw std::invalid_argument("curvature must be -1, 0 or +1");
  if (ambient_dim < 3 || ambient_dim > kMaxAmbientDim)
    throw std::invalid_argument("ambient dimension out of supported range");
  AmbientModel m;
  m.c_ = curvature;
  m.dim_ = ambient_dim;
  m.conv_ = conv;
  m.radius_ = gauge_unit_radius(curvature, conv);
  if (m.radius_ >= m.chart_limit())
    throw std::invalid_argument("ball radius exceeds the conformal chart");
  if (m.mu0() <= 0.0)
    throw std::invalid_argument("boundary potential mu0 must be positive");
  return m;
}

double AmbientModel::gauge_unit_radius(int curvature, RadiusConvention conv) {
  if (curvature != -1 && curvature != 0 && curvature != 1)
    throw std::invalid_argument("curvature must be -1, 0 or +1");
  if (conv == RadiusConvention::GaugeUnit) {
    switch (curvature) {
      case 0:
        return 1.0;
      case 1:
        return 2.0;  // double root of r^2 - 4r + 4
      default:
        return 2.0 * (std::sqrt(2.0) - 1.0);  // positive root of r^2 + 4r - 4
    }
  }
  switch (curvature) {
    case 0:
      return 1.0;
    case 1:
      return 2.0 * std::tan(0.5);
    default:
      return 2.0 * std::tanh(0.5);
  }
}

double AmbientModel::chart_limit() const {
  return c_ == -1 ? 2.0 : std::numeric_limits<double>::infinity();
}

void AmbientModel::check_chart(double norm_sq) const {
  if (c_ == -1 && norm_sq >= 4.0)
    throw std::domain_error("point outside the conformal chart of hyperbolic space");
}

double AmbientModel::conformal_exponent(const AmbientVec& x) const {
  const double t = x.squaredNorm();
  check_chart(t);
  return -std::log1p(c_ * t / 4.0);
}

double AmbientModel::conformal_factor(const AmbientVec& x) const {
  const double e = conformal_exponent(x);
  return std::exp(2.0 * e);
}

AmbientVec AmbientModel::conformal_exponent_gradient(const AmbientVec& x) const {
  const double t = x.squaredNorm();
  check_chart(t);
  return 2.0 * u_prime(c_, t) * x;
}

double AmbientModel::potential_mu(const AmbientVec& x) const {
  const double t = x.squaredNorm();
  check_chart(t);
  return (1.0 - c_ * t / 4.0) / (1.0 + c_ * t / 4.0);
}

double AmbientModel::mu0() const {
  const double t = radius_ * radius_;
  return (1.0 - c_ * t / 4.0) / (1.0 + c_ * t / 4.0);
}

double AmbientModel::boundary_gauge_norm() const {
  return radius_ / (1.0 + c_ * radius_ * radius_ / 4.0);
}

std::pair<double, double> AmbientModel::boundary_sphere_shape() const {
  const double m0 = mu0();
  return {-m0, m0};
}

std::vector<double> AmbientModel::conformal_christoffels(const AmbientVec& x) const {
  const int m = dim_;
  const AmbientVec dphi = conformal_exponent_gradient(x);
  std::vector<double> gamma(static_cast<size_t>(m) * m * m, 0.0);
  for (int k = 0; k < m; ++k)
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        double v = 0.0;
        if (k == a) v += dphi(b);
        if (k == b) v += dphi(a);
        if (a == b) v -= dphi(k);
        gamma[(static_cast<size_t>(k) * m + a) * m + b] = v;
      }
  return gamma;
}

AmbientVec AmbientModel::christoffel_apply(const AmbientVec& u, const AmbientVec& v,
                                           const AmbientVec& x) const {
  const AmbientVec dphi = conformal_exponent_gradient(x);
  return dphi.dot(v) * u + dphi.dot(u) * v - u.dot(v) * dphi;
}

}  // namespace cmclab
