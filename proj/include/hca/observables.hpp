#pragma once

#include <string>
#include <vector>

#include "hca/automaton.hpp"
#include "hca/polynomial.hpp"

namespace hca {

/// A Hermitian Gaussian-integer matrix G regarded as the real quadratic
/// form psi^dag G psi / 2 over one tick's (x, p) variables.
class QuadraticObservable {
 public:
  QuadraticObservable() = default;
  explicit QuadraticObservable(HermitianMatrix g) : g_(std::move(g)) {}

  int dim() const { return g_.dim(); }
  const HermitianMatrix& matrix() const { return g_; }
  bool operator==(const QuadraticObservable&) const = default;

  /// With G = Gs + i Ga:
  ///   psi^dag G psi / 2
  ///     = [Gs_ab (x_a x_b + p_a p_b) - Ga_ab (x_a p_b - p_a x_b)] / 2.
  Poly to_polynomial(long long tick) const;

  Rat value(const std::vector<Int>& x, const std::vector<Int>& p) const;

 private:
  HermitianMatrix g_;
};

/// psi^dag G psi / 2 with psi = x + ip; exact rational with denominator
/// dividing 2, real by Hermiticity.
Rat quadratic_form_value(const HermitianMatrix& g, const std::vector<Int>& x,
                         const std::vector<Int>& p);

/// Bracket on the quadratic-form algebra in matrix form: [G1, G2] / i.
/// The sign is pinned globally by hamiltonian_flow_check; with this choice
/// the result equals poisson_bracket_variational on the corresponding
/// forms for every variation choice.
QuadraticObservable bracket_closed_form(const QuadraticObservable& g1,
                                        const QuadraticObservable& g2);

struct FlowCheckReport {
  bool pass = true;
  std::vector<std::string> mismatches;
};

/// Verifies componentwise that the variational bracket of each coordinate
/// with the quadratic energy form reproduces the stepper differences:
///   x_{n+1} - x_{n-1} = c_n {x_n, Q_H},  p_{n+1} - p_{n-1} = c_n {p_n, Q_H}.
FlowCheckReport hamiltonian_flow_check(const AutomatonSpec& spec, const StatePair& s);

}  // namespace hca
