#pragma once

#include <complex>
#include <vector>

#include "cmclab/fields.hpp"
#include "cmclab/integrate.hpp"

namespace cmclab {

/// Complex encoding of the trace-free second fundamental form of a surface,
/// sampled on the parameter grid in a metric-orthonormal frame:
/// w = (a11 - a22)/2 - i a12 with |w|^2 = |phi|^2 / 2. Zeros are umbilic
/// points; their winding numbers are the multiplicities.
struct HopfField {
  Grid grid;
  std::vector<std::complex<double>> w;
  std::vector<BoundaryFace> faces;  // faces where boundary zeros live
  bool pole_axis0_low = false;      // chart center hidden behind an offset end
  double max_abs = 0.0;
  // physical length of one index step per axis at each node; winding loops
  // are built metrically isotropic from these
  std::vector<std::array<double, 2>> step_len;
};

HopfField hopf_field(const Immersion& im, int cells);

struct UmbilicPoint {
  ParamVec location;
  int multiplicity = 0;
  bool on_boundary = false;
};

struct UmbilicReport {
  std::vector<UmbilicPoint> points;
  int theta_interior = 0;
  int theta_boundary = 0;
};

struct UmbilicOptions {
  int loop_radius = 8;      // grid cells; generous so phase steps stay small
  int cluster_cells = 3;    // candidates closer than this merge
  double detect_rel = 0.1;  // local-min threshold relative to max |w|
};

/// Locate zeros of the field and compute their multiplicities by the argument
/// principle on grid loops (doubled half-loops on the boundary). Throws
/// hypothesis_error when the field vanishes identically (zeros not isolated)
/// and std::runtime_error for unresolved clusters or non-integer windings.
UmbilicReport detect_umbilics(const HopfField& field, const UmbilicOptions& opts = {});

/// Winding of the field along the counterclockwise grid rectangle of the given
/// radius (in cells) around a node; exposed for the loop-invariance property.
int loop_winding(const HopfField& field, std::span<const int> center, int radius);

struct EulerCountResult {
  double chi_gb = 0.0;
  int theta_interior = 0;
  int theta_boundary = 0;
  double residual = 0.0;  // chi + theta_int/2 + theta_bdry/4
};

/// Umbilic counting formula chi = -theta_int/2 - theta_bdry/4 for
/// free-boundary CMC surfaces that are not disks.
EulerCountResult euler_count_check(const Immersion& im, const QuadSpec& spec,
                                   const UmbilicOptions& opts = {});

/// |psi| f data on a flat disk or annulus chart: psi a polynomial with listed
/// zeros, f = exp(g) with g a bivariate polynomial (so the boundary integrand
/// and the Laplacian of log f stay analytic).
struct SyntheticZero {
  std::complex<double> z;
  int multiplicity = 1;
};

struct SyntheticPhi {
  std::vector<SyntheticZero> zeros;
  double rho0 = 0.0;  // 0: disk chart, > 0: annulus with inner radius rho0
  // g(x, y) = sum coeff[k] x^{px[k]} y^{py[k]}
  std::vector<double> g_coeff;
  std::vector<int> g_px, g_py;

  double g(double x, double y) const;
  void grad_g(double x, double y, double& gx, double& gy) const;
  double lap_g(double x, double y) const;
  std::complex<double> psi(std::complex<double> z) const;
  std::complex<double> w(std::complex<double> z) const;  // psi * exp(g)

  /// nu(log phi) along the outer (|z|=1) or inner (|z|=rho0) circle, with the
  /// removable 1/2-type limits at boundary zeros evaluated in closed form.
  double nu_log_phi(double theta, bool outer) const;

  int theta_interior() const;
  int theta_boundary() const;
  Grid chart_grid(int cells) const;
  HopfField field(int cells) const;
};

struct LogLemmaResult {
  double lhs = 0.0;       // int of lap(log f) over the chart
  double rhs = 0.0;       // -2 pi theta_int - pi theta_bdry + boundary integral
  double boundary = 0.0;  // the boundary integral alone
  double residual = 0.0;
};

/// Log-singularity balance: the chart integral of lap(log phi) against the
/// zero orders and the boundary flux. Exact for the synthetic class.
LogLemmaResult log_lemma_check(const SyntheticPhi& phi, const QuadSpec& spec);

}  // namespace cmclab
