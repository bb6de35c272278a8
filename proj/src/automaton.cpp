#include "hca/automaton.hpp"

#include <utility>

#include "hca/errors.hpp"

namespace hca {

const Int& AutomatonSpec::c_at(long long n) const {
  const long long len = static_cast<long long>(c.size());
  long long r = n % len;
  if (r < 0) r += len;
  return c[static_cast<std::size_t>(r)];
}

bool AutomatonSpec::constant_c() const {
  for (const Int& v : c)
    if (v != c.front()) return false;
  return true;
}

AutomatonSpec validate_spec(IntMatrix S, IntMatrix A, std::vector<Int> c, double scale_l) {
  if (S.dim() <= 0) throw ValidationError("S must be a nonempty square matrix");
  if (A.dim() == 0) A = IntMatrix::zero(S.dim());
  if (A.dim() != S.dim()) throw ValidationError("S and A have mismatched dimensions");
  if (!S.is_symmetric()) throw ValidationError("S not symmetric");
  if (!A.is_antisymmetric()) throw ValidationError("A not antisymmetric");
  if (c.empty()) throw ValidationError("c sequence must be nonempty");
  if (!(scale_l > 0.0)) throw ValidationError("scale_l must be positive");
  AutomatonSpec spec;
  spec.dim = S.dim();
  spec.S = std::move(S);
  spec.A = std::move(A);
  spec.c = std::move(c);
  spec.scale_l = scale_l;
  return spec;
}

HermitianMatrix hamiltonian_matrix(const AutomatonSpec& spec) {
  return HermitianMatrix(spec.S, spec.A);
}

static std::vector<GaussInt> zip_psi(const std::vector<Int>& x, const std::vector<Int>& p) {
  std::vector<GaussInt> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = GaussInt(x[i], p[i]);
  return out;
}

std::vector<GaussInt> StatePair::psi_prev() const { return zip_psi(x_prev, p_prev); }
std::vector<GaussInt> StatePair::psi_curr() const { return zip_psi(x_curr, p_curr); }

StatePair StatePair::from_psi(const std::vector<GaussInt>& prev, const std::vector<GaussInt>& curr,
                              long long tick) {
  if (prev.size() != curr.size()) throw ValidationError("state vectors have mismatched lengths");
  StatePair s;
  s.tick = tick;
  const std::size_t d = prev.size();
  s.x_prev.resize(d);
  s.p_prev.resize(d);
  s.x_curr.resize(d);
  s.p_curr.resize(d);
  for (std::size_t i = 0; i < d; ++i) {
    s.x_prev[i] = prev[i].re;
    s.p_prev[i] = prev[i].im;
    s.x_curr[i] = curr[i].re;
    s.p_curr[i] = curr[i].im;
  }
  return s;
}

void validate_state(const AutomatonSpec& spec, const StatePair& s) {
  const auto d = static_cast<std::size_t>(spec.dim);
  if (s.x_prev.size() != d || s.p_prev.size() != d || s.x_curr.size() != d ||
      s.p_curr.size() != d)
    throw ValidationError("state vector lengths do not match spec dimension");
}

std::vector<GaussInt> TickState::psi() const { return zip_psi(x, p); }

Trajectory::Trajectory(AutomatonSpec spec, std::vector<TickState> ticks)
    : spec_(std::move(spec)), ticks_(std::move(ticks)) {
  if (ticks_.empty()) throw ValidationError("trajectory must contain at least one tick");
  for (std::size_t i = 1; i < ticks_.size(); ++i) {
    if (ticks_[i].n != ticks_[i - 1].n + 1)
      throw ValidationError("trajectory ticks must be contiguous");
  }
}

const TickState& Trajectory::at(long long n) const {
  if (n < first_tick() || n > last_tick()) throw ValidationError("tick outside trajectory range");
  return ticks_[static_cast<std::size_t>(n - first_tick())];
}

StatePair Trajectory::pair_at(long long n) const {
  const TickState& prev = at(n - 1);
  const TickState& curr = at(n);
  StatePair s;
  s.x_prev = prev.x;
  s.p_prev = prev.p;
  s.tau_prev = prev.tau;
  s.pi2_prev = prev.pi2;
  s.x_curr = curr.x;
  s.p_curr = curr.p;
  s.tau_curr = curr.tau;
  s.pi2_curr = curr.pi2;
  s.tick = n;
  return s;
}

}  // namespace hca
