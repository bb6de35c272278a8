#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hca/automaton.hpp"

namespace hca {

/// Default cap on the bit-length of any single state component. Specs whose
/// coupling spectrum leaves [-2, 2] grow exponentially, so long runs need an
/// explicit resource limit rather than silent multi-gigabyte integers.
inline constexpr std::size_t kDefaultBitcap = 1'000'000;

struct EvolveLimits {
  std::size_t bitcap = kDefaultBitcap;
  /// Advance tau and pi alongside (x, p). Switching this off freezes both at
  /// their seed values and skips the per-tick energy evaluations, whose cost
  /// dominates long runs once components outgrow machine words; it is sound
  /// whenever the caller consumes only the (x, p) sector.
  bool time_sector = true;
};

/// Doubled energy 2H = S_ab(p_a p_b + x_a x_b) + 2 A_ab p_a x_b, an exact
/// integer for any integer state (H itself can be a half-integer).
Int doubled_energy(const AutomatonSpec& spec, const std::vector<Int>& x,
                   const std::vector<Int>& p);

/// One tick forward. With s holding ticks (n-1, n):
///   x_{n+1} = x_{n-1} + c_n (S p_n + A x_n)
///   p_{n+1} = p_{n-1} - c_n (S x_n - A p_n)
///   tau_{n+1} = tau_{n-1} + c_n
///   2pi_{n+1} = 2pi_{n-1} + 2H_{n+1} - 2H_{n-1}
/// equivalently psi_{n+1} = psi_{n-1} - i c_n (S + iA) psi_n. With
/// time_sector false the tau/pi fields are carried over unchanged.
StatePair step_forward(const AutomatonSpec& spec, const StatePair& s, bool time_sector = true);

/// Exact inverse of step_forward: returns the pair at ticks (n-2, n-1).
StatePair step_backward(const AutomatonSpec& spec, const StatePair& s, bool time_sector = true);

/// k steps (backward when k < 0); the returned trajectory covers every
/// visited tick. Throws ResourceError when any component exceeds the bitcap.
Trajectory evolve(const AutomatonSpec& spec, const StatePair& s, long long k,
                  const EvolveLimits& limits = {});

/// Smallest T >= 1 with the (x, p) pair state recurring after T steps, or
/// nullopt within max_steps. tau and pi are excluded: tau drifts linearly
/// and pi tracks the energy. When the c sequence is a nontrivial cycle, T
/// must additionally be a multiple of its length for the recurrence to
/// continue identically.
std::optional<long long> detect_period(const AutomatonSpec& spec, const StatePair& s,
                                       long long max_steps, const EvolveLimits& limits = {});

/// Two-point form Q_G = psi_prev^dag G psi_curr + psi_curr^dag G psi_prev
/// = 2 Re(psi_prev^dag G psi_curr), an exact integer. Conserved along
/// trajectories exactly when [G, S+iA] = 0 and c is constant.
Int two_point_invariant(const HermitianMatrix& G, const StatePair& s);

}  // namespace hca
