#include "hca/bridge.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hca/dynamics.hpp"
#include "hca/errors.hpp"

namespace hca {

namespace {

constexpr double kNodeEps = 1e-9;  // |t/l - n| below this snaps to node n

double to_double(const Int& v) { return v.convert_to<double>(); }

std::complex<double> to_complex(const GaussInt& g) {
  return {to_double(g.re), to_double(g.im)};
}

double sample_norm(const std::vector<GaussInt>& v) {
  double acc = 0.0;
  for (const auto& g : v) {
    const auto z = to_complex(g);
    acc += std::norm(z);
  }
  return std::sqrt(acc);
}

std::vector<std::complex<double>> apply_complex(const HermitianMatrix& h,
                                                const std::vector<std::complex<double>>& v) {
  const int d = h.dim();
  std::vector<std::complex<double>> out(static_cast<std::size_t>(d), {0.0, 0.0});
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      out[static_cast<std::size_t>(a)] +=
          to_complex(h.at(a, b)) * v[static_cast<std::size_t>(b)];
  return out;
}

double frobenius(const HermitianMatrix& h) {
  double acc = 0.0;
  for (int a = 0; a < h.dim(); ++a)
    for (int b = 0; b < h.dim(); ++b) acc += std::norm(to_complex(h.at(a, b)));
  return std::sqrt(acc);
}

}  // namespace

const std::vector<GaussInt>& SampledWavefunction::sample(long long n) const {
  if (samples.empty()) throw ValidationError("no samples available");
  const auto count = static_cast<long long>(samples.size());
  long long i = n - n_first;
  if (periodic) {
    i %= count;
    if (i < 0) i += count;
  } else if (i < 0 || i >= count) {
    throw ValidationError("sample index out of range");
  }
  return samples[static_cast<std::size_t>(i)];
}

double SampledWavefunction::omega_max() const { return std::numbers::pi / scale_l; }

SampledWavefunction SampledWavefunction::from_trajectory(const Trajectory& t, bool periodic) {
  SampledWavefunction w;
  w.n_first = t.first_tick();
  w.scale_l = t.spec().scale_l;
  w.periodic = periodic;
  w.samples.reserve(t.ticks().size());
  for (const auto& tick : t.ticks()) w.samples.push_back(tick.psi());
  return w;
}

Reconstruction reconstruct(const SampledWavefunction& w, double t, long long window) {
  if (w.samples.empty()) throw ValidationError("no samples available");
  if (window < 0) throw ValidationError("window must be nonnegative");
  if (!(w.scale_l > 0.0)) throw ValidationError("scale must be positive");

  const int d = w.dim();
  const double u = t / w.scale_l;
  const auto m = static_cast<long long>(std::llround(u));
  const double r = u - static_cast<double>(m);

  Reconstruction out;
  out.value.assign(static_cast<std::size_t>(d), {0.0, 0.0});

  if (std::abs(r) <= kNodeEps && w.has(m)) {
    const auto& s = w.sample(m);
    for (int a = 0; a < d; ++a) out.value[static_cast<std::size_t>(a)] = to_complex(s[a]);
    return out;
  }

  // sin(pi (u - k)) = (-1)^(k - m) sin(pi r): evaluating the sine once at
  // the small residual r keeps the kernel exact to rounding even for nodes
  // far from t.
  const double sin_pr = std::sin(std::numbers::pi * r);
  long long lo = m - window;
  long long hi = m + window;
  if (!w.periodic) {
    if (lo < w.n_first) {
      lo = w.n_first;
      out.truncated = true;
    }
    if (hi > w.n_last()) {
      hi = w.n_last();
      out.truncated = true;
    }
  }

  for (long long k = lo; k <= hi; ++k) {
    const double denom = std::numbers::pi * (u - static_cast<double>(k));
    const double sign = ((k - m) % 2 == 0) ? 1.0 : -1.0;
    const double kernel = sign * sin_pr / denom;
    const auto& s = w.sample(k);
    for (int a = 0; a < d; ++a)
      out.value[static_cast<std::size_t>(a)] += kernel * to_complex(s[a]);
  }

  if (w.periodic) {
    // One-period max norm feeds an alternating-tail estimate: beyond the
    // window the kernel magnitudes decay like 1/(pi dist) with alternating
    // signs, so each side contributes about M / (pi (window + 1/2)).
    double mx = 0.0;
    for (const auto& s : w.samples) mx = std::max(mx, sample_norm(s));
    out.tail_bound = 2.0 * mx / (std::numbers::pi * (static_cast<double>(window) + 0.5));
  } else {
    double acc = 0.0;
    for (long long k = w.n_first; k <= w.n_last(); ++k) {
      if (k >= lo && k <= hi) continue;
      acc += sample_norm(w.sample(k)) / (std::numbers::pi * std::abs(u - static_cast<double>(k)));
    }
    out.tail_bound = acc;
  }
  return out;
}

ResidualReport modified_schrodinger_residual(const AutomatonSpec& spec,
                                             const SampledWavefunction& w, double t,
                                             long long window) {
  if (spec.dim != w.dim()) throw ValidationError("sample dimension does not match coupling");
  for (const auto& ck : spec.c)
    if (ck != 1)
      throw ValidationError("shifted-argument residual requires the unit step sequence");

  const double l = w.scale_l;
  const Reconstruction plus = reconstruct(w, t + l, window);
  const Reconstruction minus = reconstruct(w, t - l, window);
  const Reconstruction mid = reconstruct(w, t, window);

  const HermitianMatrix h = hamiltonian_matrix(spec);
  const std::vector<std::complex<double>> hpsi = apply_complex(h, mid.value);

  const int d = spec.dim;
  double acc = 0.0;
  for (int a = 0; a < d; ++a) {
    const auto i = static_cast<std::size_t>(a);
    const std::complex<double> res =
        plus.value[i] - minus.value[i] + std::complex<double>(0.0, 1.0) * hpsi[i];
    acc += std::norm(res);
  }

  ResidualReport rep;
  rep.residual_norm = std::sqrt(acc);
  rep.tail_bound = plus.tail_bound + minus.tail_bound + frobenius(h) * mid.tail_bound;
  return rep;
}

EigenResult eigen_decompose(const HermitianMatrix& h) {
  const int d = h.dim();
  Eigen::MatrixXcd m(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      const GaussInt& g = h.at(a, b);
      m(a, b) = std::complex<double>(to_double(g.re), to_double(g.im));
    }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  if (solver.info() != Eigen::Success) throw InternalError("eigensolver failed to converge");

  EigenResult out;
  out.eigenvalues.reserve(static_cast<std::size_t>(d));
  out.residual_bounds.reserve(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    const double e = solver.eigenvalues()(i);
    std::vector<std::complex<double>> v(static_cast<std::size_t>(d));
    for (int r = 0; r < d; ++r) v[static_cast<std::size_t>(r)] = solver.eigenvectors()(r, i);
    const std::vector<std::complex<double>> hv = apply_complex(h, v);
    double acc = 0.0;
    for (int r = 0; r < d; ++r) {
      const auto idx = static_cast<std::size_t>(r);
      acc += std::norm(hv[idx] - e * v[idx]);
    }
    out.eigenvalues.push_back(e);
    out.residual_bounds.push_back(std::sqrt(acc));
  }
  return out;
}

DispersionSolution dispersion_energy(double epsilon, double l) {
  if (!(l > 0.0)) throw ValidationError("scale must be positive");
  const double eb = epsilon / 2.0;
  if (std::abs(eb) > 1.0)
    throw ValidationError("no real stationary energy: |epsilon| exceeds the band edge 2");
  DispersionSolution sol;
  sol.epsilon = epsilon;
  sol.epsbar = eb;
  sol.scale_l = l;
  sol.energy = std::asin(eb) / l;
  return sol;
}

double dispersion_series(double epsilon, double l, int order) {
  if (!(l > 0.0)) throw ValidationError("scale must be positive");
  const double eb = epsilon / 2.0;
  switch (order) {
    case 1:
      return eb / l;
    case 3:
      return eb * (1.0 + eb * eb / 6.0) / l;
    default:
      throw ValidationError("series order must be 1 or 3");
  }
}

}  // namespace hca
