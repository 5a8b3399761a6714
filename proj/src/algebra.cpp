#include "cmclab/algebra.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace cmclab {

double TraceFreeSpectrum::norm_sq() const {
  double s = 0.0;
  for (double x : sigma) s += x * x;
  return s;
}

void TraceFreeSpectrum::project() {
  double mean = 0.0;
  for (double x : sigma) mean += x;
  mean /= sigma.size();
  for (double& x : sigma) x -= mean;
}

std::array<double, 3> symmetric_sum_identities(const TraceFreeSpectrum& spec) {
  const int n = spec.n();
  const auto& s = spec.sigma;
  double sum1 = 0.0, sum2 = 0.0, sum3 = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double d2 = (s[i] - s[j]) * (s[i] - s[j]);
      sum1 += s[i] * s[j] * d2;
      sum2 += (s[i] + s[j]) * d2;
      sum3 += d2;
    }
  const double phi2 = spec.norm_sq();
  double cubes = 0.0;
  for (double x : s) cubes += x * x * x;
  return {std::abs(sum1 - (-2.0 * phi2 * phi2)),
          std::abs(sum2 - 2.0 * n * cubes),
          std::abs(sum3 - 2.0 * n * phi2)};
}

OkumuraResult okumura_bound(const TraceFreeSpectrum& spec) {
  const int n = spec.n();
  if (n < 2) throw std::invalid_argument("okumura_bound: need n >= 2");
  OkumuraResult out;
  double cubes = 0.0;
  for (double x : spec.sigma) cubes += x * x * x;
  out.lhs = std::abs(cubes);
  const double phi2 = spec.norm_sq();
  out.rhs = (n - 2) / std::sqrt(double(n) * (n - 1)) * std::pow(phi2, 1.5);
  out.tight = std::abs(out.lhs - out.rhs) <= 1e-10 * (1.0 + phi2 * std::sqrt(phi2 + 1.0));
  return out;
}

double umbilical_rhs_collapse(int n, double lambda, double mu0) {
  if (n < 3) throw std::invalid_argument("umbilical_rhs_collapse: need n >= 3");
  const double h = n * lambda;
  const double ht = (n - 1.0) * lambda;
  const double gap_sq = (h - ht) * (h - ht);
  const double norm_sq = (n - 1.0) * lambda * lambda;
  const double l_mu0 = (mu0 - 1.0) * ((n + 1.0) * gap_sq + norm_sq - 2.0 * h * h);
  return 0.5 * n * (gap_sq - norm_sq) + 2.0 * mu0 * h * ht -
         (3.0 * n - 2.0) / (2.0 * n) * h * h + l_mu0;
}

std::vector<TraceFreeSpectrum> random_spectra(int count, int n_min, int n_max, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> val(-1.0, 1.0);
  std::uniform_int_distribution<int> dim(n_min, n_max);
  std::vector<TraceFreeSpectrum> out;
  out.reserve(count);
  for (int k = 0; k < count; ++k) {
    TraceFreeSpectrum s;
    s.sigma.resize(dim(rng));
    for (double& x : s.sigma) x = val(rng);
    s.project();
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace cmclab
