#pragma once

#include <vector>

#include "hca/matrix.hpp"

namespace hca {

/// One automaton: the integer coupling matrices, the integer step-length
/// sequence c_n (continued periodically in both time directions), and the
/// physical duration of a tick used by the continuum side.
struct AutomatonSpec {
  int dim = 0;
  IntMatrix S;  // symmetric part of the coupling
  IntMatrix A;  // antisymmetric part of the coupling
  std::vector<Int> c = {Int(1)};
  double scale_l = 1.0;

  /// c_n for arbitrary tick n; the sequence repeats with period c.size(),
  /// extended to negative n with floor semantics.
  const Int& c_at(long long n) const;

  bool constant_c() const;
};

/// Checks symmetry/antisymmetry/shape and returns the validated spec.
/// Throws ValidationError naming the violated condition.
AutomatonSpec validate_spec(IntMatrix S, IntMatrix A, std::vector<Int> c = {Int(1)},
                            double scale_l = 1.0);

/// S + iA; Hermitian by construction for a validated spec.
HermitianMatrix hamiltonian_matrix(const AutomatonSpec& spec);

/// Full dynamical state at two adjacent ticks: the minimal data for the
/// second-order recurrence. `tick` indexes the curr slot; prev is tick-1.
/// The pi fields hold the doubled momentum 2*pi so that every stored
/// component stays an exact integer even when the doubled energy is odd.
struct StatePair {
  std::vector<Int> x_prev, p_prev;
  std::vector<Int> x_curr, p_curr;
  Int tau_prev{0}, tau_curr{0};
  Int pi2_prev{0}, pi2_curr{0};
  long long tick = 0;

  bool operator==(const StatePair&) const = default;

  int dim() const { return static_cast<int>(x_curr.size()); }
  std::vector<GaussInt> psi_prev() const;
  std::vector<GaussInt> psi_curr() const;

  /// Convenience constructor from complex pairs; tau/pi default to zero.
  static StatePair from_psi(const std::vector<GaussInt>& prev, const std::vector<GaussInt>& curr,
                            long long tick = 0);
};

/// Throws ValidationError unless every vector in s has length spec.dim.
void validate_state(const AutomatonSpec& spec, const StatePair& s);

/// Snapshot of a single tick.
struct TickState {
  long long n = 0;
  std::vector<Int> x, p;
  Int tau{0}, pi2{0};

  bool operator==(const TickState&) const = default;
  std::vector<GaussInt> psi() const;
};

/// Contiguous run of ticks; adjacent entries satisfy the step recurrences
/// exactly by construction.
class Trajectory {
 public:
  Trajectory() = default;
  Trajectory(AutomatonSpec spec, std::vector<TickState> ticks);

  const AutomatonSpec& spec() const { return spec_; }
  const std::vector<TickState>& ticks() const { return ticks_; }
  long long first_tick() const { return ticks_.front().n; }
  long long last_tick() const { return ticks_.back().n; }

  const TickState& at(long long n) const;

  /// StatePair with curr slot at tick n (requires n-1 in range).
  StatePair pair_at(long long n) const;
  StatePair initial_pair() const { return pair_at(first_tick() + 1); }
  StatePair final_pair() const { return pair_at(last_tick()); }

 private:
  AutomatonSpec spec_;
  std::vector<TickState> ticks_;
};

}  // namespace hca
