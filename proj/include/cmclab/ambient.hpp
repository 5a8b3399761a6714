#pragma once

#include <utility>
#include <vector>

#include "cmclab/linalg.hpp"

namespace cmclab {

/// Which normalization fixed the Euclidean radius of the ball model.
/// GaugeUnit: the position vector has unit metric norm on the boundary sphere,
///   r / (1 + c r^2 / 4) = 1. This is what the boundary identities use.
/// GeodesicUnit: the geodesic distance from the center to the boundary is 1.
enum class RadiusConvention { GaugeUnit, GeodesicUnit };

/// A simply connected space form of curvature c in {-1, 0, +1}, realized as a
/// Euclidean ball with the radial conformal metric e^{2 phi_c} g_euclid,
/// phi_c(x) = -log(1 + c |x|^2 / 4). Immutable; all members are pure.
class AmbientModel {
 public:
  static AmbientModel make(int curvature, int ambient_dim, RadiusConvention conv);

  /// Euclidean radius of the model ball under the given convention.
  /// GaugeUnit solves r/(1 + c r^2/4) = 1; GeodesicUnit inverts the radial
  /// geodesic distance. Defined for all c even when the resulting model is
  /// rejected (c = +1 GaugeUnit has mu0 = 0).
  static double gauge_unit_radius(int curvature, RadiusConvention conv);

  int curvature() const { return c_; }
  int ambient_dim() const { return dim_; }
  double radius() const { return radius_; }
  RadiusConvention convention() const { return conv_; }

  /// Largest Euclidean norm the chart admits (2 for c = -1, inf otherwise).
  double chart_limit() const;

  /// phi_c(x); throws std::domain_error outside the chart.
  double conformal_exponent(const AmbientVec& x) const;

  /// e^{2 phi_c(x)}.
  double conformal_factor(const AmbientVec& x) const;

  /// Euclidean gradient of phi_c at x, i.e. 2 u'(|x|^2) x.
  AmbientVec conformal_exponent_gradient(const AmbientVec& x) const;

  /// Potential mu(x) = 1 + 2 u'(|x|^2) |x|^2 = (1 - c|x|^2/4)/(1 + c|x|^2/4).
  double potential_mu(const AmbientVec& x) const;

  /// mu at the boundary sphere |x| = r.
  double mu0() const;

  /// Metric norm of the position vector on the boundary sphere, e^{phi_c(r)} r.
  /// Equals 1 under GaugeUnit.
  double boundary_gauge_norm() const;

  /// (kappa, mu0): kappa = -mu0 is the constant eigenvalue of the shape
  /// operator of the boundary sphere taken with respect to the outward
  /// position-direction normal.
  std::pair<double, double> boundary_sphere_shape() const;

  /// Connection coefficients of the conformal metric at x, flattened
  /// Gamma[k][a][b] -> vector index (k*m + a)*m + b with m = ambient_dim.
  std::vector<double> conformal_christoffels(const AmbientVec& x) const;

  /// Gamma(u, v) at x without materializing the 3-index array.
  AmbientVec christoffel_apply(const AmbientVec& u, const AmbientVec& v,
                               const AmbientVec& x) const;

 private:
  AmbientModel() = default;
  void check_chart(double norm_sq) const;

  int c_ = 0;
  int dim_ = 3;
  double radius_ = 1.0;
  RadiusConvention conv_ = RadiusConvention::GaugeUnit;
};

}  // namespace cmclab
