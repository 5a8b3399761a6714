#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace cmclab {

/// Real eigenvalues of a trace-free symmetric operator, projected so the sum
/// vanishes exactly in floating point.
struct TraceFreeSpectrum {
  std::vector<double> sigma;

  int n() const { return static_cast<int>(sigma.size()); }
  double norm_sq() const;

  /// Subtract the mean; afterwards |sum sigma_i| <= 1e-14 (1 + |phi|).
  void project();
};

/// Residuals |LHS - RHS| of the three symmetric double sums any trace-free
/// spectrum satisfies:
///   sum_{ij} s_i s_j (s_i - s_j)^2       = -2 |phi|^4
///   sum_{ij} (s_i + s_j)(s_i - s_j)^2    = 2 n sum_i s_i^3
///   sum_{ij} (s_i - s_j)^2               = 2 n |phi|^2
/// evaluated by direct double-sum accumulation against the closed forms.
std::array<double, 3> symmetric_sum_identities(const TraceFreeSpectrum& spec);

struct OkumuraResult {
  double lhs = 0.0;  // |sum s_i^3|
  double rhs = 0.0;  // (n-2)/sqrt(n(n-1)) |phi|^3
  bool tight = false;
};

/// Cubic-sum bound for trace-free spectra; tight exactly on spectra with one
/// simple eigenvalue and the rest equal.
OkumuraResult okumura_bound(const TraceFreeSpectrum& spec);

/// Right-hand side of the integrated first inequality per unit boundary
/// measure under totally umbilical data A = lambda I; collapses to zero for
/// every (n, lambda, mu0).
double umbilical_rhs_collapse(int n, double lambda, double mu0);

/// Deterministic spectrum draws for the property suites.
std::vector<TraceFreeSpectrum> random_spectra(int count, int n_min, int n_max, uint64_t seed);

}  // namespace cmclab
