#include "hca/dynamics.hpp"

#include <algorithm>
#include <utility>

#include "hca/errors.hpp"

namespace hca {

Int doubled_energy(const AutomatonSpec& spec, const std::vector<Int>& x,
                   const std::vector<Int>& p) {
  const int d = spec.dim;
  Int acc = 0;
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      const Int& s = spec.S.at(a, b);
      if (!s.is_zero())
        acc += s * (p[static_cast<std::size_t>(a)] * p[static_cast<std::size_t>(b)] +
                    x[static_cast<std::size_t>(a)] * x[static_cast<std::size_t>(b)]);
      const Int& aa = spec.A.at(a, b);
      if (!aa.is_zero())
        acc += 2 * aa * p[static_cast<std::size_t>(a)] * x[static_cast<std::size_t>(b)];
    }
  }
  return acc;
}

namespace {

// S*p + A*x and S*x - A*p, the two real combinations entering the step.
void coupling_products(const AutomatonSpec& spec, const std::vector<Int>& x,
                       const std::vector<Int>& p, std::vector<Int>& sp_ax,
                       std::vector<Int>& sx_ap) {
  const int d = spec.dim;
  sp_ax.assign(static_cast<std::size_t>(d), Int(0));
  sx_ap.assign(static_cast<std::size_t>(d), Int(0));
  for (int a = 0; a < d; ++a) {
    Int acc1 = 0, acc2 = 0;
    for (int b = 0; b < d; ++b) {
      const Int& s = spec.S.at(a, b);
      const Int& aa = spec.A.at(a, b);
      if (!s.is_zero()) {
        acc1 += s * p[static_cast<std::size_t>(b)];
        acc2 += s * x[static_cast<std::size_t>(b)];
      }
      if (!aa.is_zero()) {
        acc1 += aa * x[static_cast<std::size_t>(b)];
        acc2 -= aa * p[static_cast<std::size_t>(b)];
      }
    }
    sp_ax[static_cast<std::size_t>(a)] = std::move(acc1);
    sx_ap[static_cast<std::size_t>(a)] = std::move(acc2);
  }
}

void check_bitcap(const StatePair& s, std::size_t bitcap) {
  auto over = [bitcap](const Int& v) { return bit_length(v) > bitcap; };
  for (const Int& v : s.x_curr)
    if (over(v)) throw ResourceError("component bit-length cap exceeded");
  for (const Int& v : s.p_curr)
    if (over(v)) throw ResourceError("component bit-length cap exceeded");
  if (over(s.tau_curr) || over(s.pi2_curr))
    throw ResourceError("component bit-length cap exceeded");
}

TickState curr_tick(const StatePair& s) {
  return TickState{s.tick, s.x_curr, s.p_curr, s.tau_curr, s.pi2_curr};
}

TickState prev_tick(const StatePair& s) {
  return TickState{s.tick - 1, s.x_prev, s.p_prev, s.tau_prev, s.pi2_prev};
}

}  // namespace

StatePair step_forward(const AutomatonSpec& spec, const StatePair& s, bool time_sector) {
  validate_state(spec, s);
  const Int& c = spec.c_at(s.tick);
  std::vector<Int> sp_ax, sx_ap;
  coupling_products(spec, s.x_curr, s.p_curr, sp_ax, sx_ap);

  StatePair out;
  out.tick = s.tick + 1;
  out.x_prev = s.x_curr;
  out.p_prev = s.p_curr;

  const auto d = static_cast<std::size_t>(spec.dim);
  out.x_curr.resize(d);
  out.p_curr.resize(d);
  for (std::size_t i = 0; i < d; ++i) {
    out.x_curr[i] = s.x_prev[i] + c * sp_ax[i];
    out.p_curr[i] = s.p_prev[i] - c * sx_ap[i];
  }
  if (time_sector) {
    out.tau_prev = s.tau_curr;
    out.pi2_prev = s.pi2_curr;
    out.tau_curr = s.tau_prev + c;
    out.pi2_curr = s.pi2_prev + doubled_energy(spec, out.x_curr, out.p_curr) -
                   doubled_energy(spec, s.x_prev, s.p_prev);
  } else {
    out.tau_prev = s.tau_prev;
    out.pi2_prev = s.pi2_prev;
    out.tau_curr = s.tau_curr;
    out.pi2_curr = s.pi2_curr;
  }
  return out;
}

StatePair step_backward(const AutomatonSpec& spec, const StatePair& s, bool time_sector) {
  validate_state(spec, s);
  const Int& c = spec.c_at(s.tick - 1);
  std::vector<Int> sp_ax, sx_ap;
  coupling_products(spec, s.x_prev, s.p_prev, sp_ax, sx_ap);

  StatePair out;
  out.tick = s.tick - 1;
  out.x_curr = s.x_prev;
  out.p_curr = s.p_prev;

  const auto d = static_cast<std::size_t>(spec.dim);
  out.x_prev.resize(d);
  out.p_prev.resize(d);
  for (std::size_t i = 0; i < d; ++i) {
    out.x_prev[i] = s.x_curr[i] - c * sp_ax[i];
    out.p_prev[i] = s.p_curr[i] + c * sx_ap[i];
  }
  if (time_sector) {
    out.tau_curr = s.tau_prev;
    out.pi2_curr = s.pi2_prev;
    out.tau_prev = s.tau_curr - c;
    out.pi2_prev = s.pi2_curr - doubled_energy(spec, s.x_curr, s.p_curr) +
                   doubled_energy(spec, out.x_prev, out.p_prev);
  } else {
    out.tau_prev = s.tau_prev;
    out.pi2_prev = s.pi2_prev;
    out.tau_curr = s.tau_curr;
    out.pi2_curr = s.pi2_curr;
  }
  return out;
}

Trajectory evolve(const AutomatonSpec& spec, const StatePair& s, long long k,
                  const EvolveLimits& limits) {
  validate_state(spec, s);
  std::vector<TickState> ticks;
  ticks.reserve(static_cast<std::size_t>((k >= 0 ? k : -k) + 2));
  if (k >= 0) {
    ticks.push_back(prev_tick(s));
    ticks.push_back(curr_tick(s));
    StatePair cur = s;
    for (long long i = 0; i < k; ++i) {
      cur = step_forward(spec, cur, limits.time_sector);
      check_bitcap(cur, limits.bitcap);
      ticks.push_back(curr_tick(cur));
    }
  } else {
    StatePair cur = s;
    ticks.push_back(curr_tick(s));
    ticks.push_back(prev_tick(s));
    for (long long i = 0; i < -k; ++i) {
      cur = step_backward(spec, cur, limits.time_sector);
      check_bitcap(cur, limits.bitcap);
      ticks.push_back(prev_tick(cur));
    }
    std::reverse(ticks.begin(), ticks.end());
  }
  return Trajectory(spec, std::move(ticks));
}

std::optional<long long> detect_period(const AutomatonSpec& spec, const StatePair& s,
                                       long long max_steps, const EvolveLimits& limits) {
  if (max_steps < 1) throw ValidationError("max_steps must be >= 1");
  validate_state(spec, s);
  const long long cycle = static_cast<long long>(spec.c.size());
  StatePair cur = s;
  for (long long t = 1; t <= max_steps; ++t) {
    // The comparison ignores tau/pi, so their updates would be dead work.
    cur = step_forward(spec, cur, /*time_sector=*/false);
    check_bitcap(cur, limits.bitcap);
    if (cycle > 1 && t % cycle != 0) continue;
    if (cur.x_prev == s.x_prev && cur.p_prev == s.p_prev && cur.x_curr == s.x_curr &&
        cur.p_curr == s.p_curr)
      return t;
  }
  return std::nullopt;
}

Int two_point_invariant(const HermitianMatrix& G, const StatePair& s) {
  if (G.dim() != s.dim()) throw ValidationError("observable dimension mismatch");
  const std::vector<GaussInt> prev = s.psi_prev();
  const std::vector<GaussInt> gcurr = G.matrix().apply(s.psi_curr());
  Int re2 = 0;
  for (std::size_t i = 0; i < prev.size(); ++i) {
    // Re(conj(a) * b) = a.re*b.re + a.im*b.im; only the real part is needed.
    re2 += prev[i].re * gcurr[i].re + prev[i].im * gcurr[i].im;
  }
  return 2 * re2;
}

}  // namespace hca
