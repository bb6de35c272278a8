#pragma once

#include <complex>
#include <vector>

#include "hca/automaton.hpp"

namespace hca {

/// Equidistant Gaussian-integer samples psi_n at times t_n = n * scale_l,
/// bandwidth omega_max = pi / scale_l. With periodic = true the stored
/// range is treated as one full period and indexing wraps, which makes the
/// reconstruction sum effectively complete for periodic orbits.
struct SampledWavefunction {
  long long n_first = 0;
  std::vector<std::vector<GaussInt>> samples;  // [i] is tick n_first + i
  double scale_l = 1.0;
  bool periodic = false;

  int dim() const { return samples.empty() ? 0 : static_cast<int>(samples.front().size()); }
  long long n_last() const { return n_first + static_cast<long long>(samples.size()) - 1; }
  bool has(long long n) const { return periodic || (n >= n_first && n <= n_last()); }
  const std::vector<GaussInt>& sample(long long n) const;
  double omega_max() const;

  static SampledWavefunction from_trajectory(const Trajectory& t, bool periodic = false);
};

struct Reconstruction {
  std::vector<std::complex<double>> value;
  /// Truncation magnitude estimate: for finite sample sets, the exact
  /// absolute-sum bound over the known samples excluded by the window; for
  /// periodic extensions, an alternating-tail heuristic from the max norm
  /// over one period.
  double tail_bound = 0.0;
  /// True when the window was clipped by sample availability.
  bool truncated = false;
};

/// Truncated cardinal-series interpolation with a symmetric window of
/// `window` nodes on each side of t. Exactly reproduces the stored sample
/// when t lies within 1e-9 ticks of an available node.
Reconstruction reconstruct(const SampledWavefunction& w, double t, long long window);

struct ResidualReport {
  double residual_norm = 0.0;
  double tail_bound = 0.0;
};

/// Norm of [psi(t+l) - psi(t-l)] + i (S+iA) psi(t), all three values
/// reconstructed with the same window: the defect of the shifted-argument
/// evolution identity at continuum time t. At sample nodes the identity
/// reduces to the discrete step equation, so the residual is pure
/// truncation noise. Requires the unit step sequence c == 1, which is what
/// aligns automaton ticks with equidistant physical times.
ResidualReport modified_schrodinger_residual(const AutomatonSpec& spec,
                                             const SampledWavefunction& w, double t,
                                             long long window);

struct EigenResult {
  std::vector<double> eigenvalues;       // ascending
  std::vector<double> residual_bounds;   // ||H v - e v||_2 per pair
};

/// Dense Hermitian eigensolve in double precision with per-pair residuals.
EigenResult eigen_decompose(const HermitianMatrix& h);

struct DispersionSolution {
  double epsilon = 0.0;
  double epsbar = 0.0;   // epsilon / 2
  double energy = 0.0;   // E with sin(E l) = epsbar, E l in [-pi/2, pi/2]
  double scale_l = 1.0;
};

/// Principal-branch solution of sin(E l) = epsilon / 2. Requires
/// |epsilon| <= 2; outside the band there is no real stationary energy.
DispersionSolution dispersion_energy(double epsilon, double l);

/// Truncated odd series of the arcsine: order 1 gives epsbar / l, order 3
/// gives epsbar (1 + epsbar^2 / 6) / l. Only orders 1 and 3 are supported.
double dispersion_series(double epsilon, double l, int order);

}  // namespace hca
