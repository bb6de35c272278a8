#pragma once

#include <map>
#include <vector>

#include "hca/automaton.hpp"
#include "hca/polynomial.hpp"

namespace hca {

/// Per-tick arrays over a contiguous tick range [n0, n1], n1 >= n0 + 2.
/// pi2 carries the doubled momentum, mirroring StatePair.
struct TrajectoryWindow {
  long long n0 = 0;
  std::vector<std::vector<Int>> x, p;  // [i] is tick n0 + i
  std::vector<Int> tau, pi2;

  long long n1() const { return n0 + static_cast<long long>(tau.size()) - 1; }
  int dim() const { return x.empty() ? 0 : static_cast<int>(x.front().size()); }
  std::size_t idx(long long n) const { return static_cast<std::size_t>(n - n0); }

  static TrajectoryWindow from_trajectory(const Trajectory& t);
};

/// Throws ValidationError on shape violations (length < 3, ragged arrays,
/// dimension mismatch with the automaton).
void validate_window(const AutomatonSpec& spec, const TrajectoryWindow& w);

/// Doubled action over the window: the sum of action_term for
/// n = n0+1 .. n1. Doubling keeps the value an exact integer when the
/// doubled per-tick energy is odd.
Int action_value(const AutomatonSpec& spec, const TrajectoryWindow& w);

/// The tick-n contribution (couples ticks n-1 and n):
///   2 (p_n + p_{n-1}) . (x_n - x_{n-1})
///   + (2pi_n + 2pi_{n-1}) (tau_n - tau_{n-1})
///   - (tau_n - tau_{n-1}) (2H_n + 2H_{n-1})
///   - c_n 2pi_n
Int action_term(const AutomatonSpec& spec, const TrajectoryWindow& w, long long n);

/// Same term symbolically, over the variables at ticks n-1 and n. Pi
/// variables stand for the momentum pi itself, so window values enter as
/// exact halves of the stored doubled integers.
Poly action_term_poly(const AutomatonSpec& spec, long long n);

/// Doubled per-tick energy as a polynomial over tick-n variables.
Poly doubled_energy_poly(const AutomatonSpec& spec, long long n);

/// Values of every window variable for polynomial evaluation.
std::map<VarId, Rat> window_assignment(const TrajectoryWindow& w);

struct StationarityViolation {
  VarId v;
  Int delta;
  Rat doubled_derivative;  // nonzero variational derivative of the doubled action
};

struct StationarityReport {
  std::vector<StationarityViolation> violations;
  bool stationary() const { return violations.empty(); }
};

/// Applies the symmetric difference quotient to every interior variable
/// (each x_n^a, p_n^a, tau_n, pi_n with n0 < n < n1) for every delta in
/// deltas; edge ticks are held fixed. An empty report is equivalent to the
/// window satisfying the step recurrences at every interior tick.
StationarityReport stationarity_check(const AutomatonSpec& spec, const TrajectoryWindow& w,
                                      const std::vector<Int>& deltas);

/// Brute-force test oracle: finds the unique next-tick values that zero all
/// variational derivatives at the now-interior tick of `boundary`. x, p and
/// tau candidates are scanned over [-bound, bound]; the doubled momentum is
/// scanned over a range derived from the triangle inequality on its update
/// law, since its magnitude tracks the doubled energy rather than the
/// coordinate bound. Throws ValidationError when no candidate fits the
/// bound and InternalError if the zero set is not a single point.
StatePair eom_from_stationarity_oracle(const AutomatonSpec& spec, const StatePair& boundary,
                                       const Int& bound);

}  // namespace hca
