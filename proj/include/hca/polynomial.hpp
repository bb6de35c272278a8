#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hca/exact.hpp"

namespace hca {

enum class VarKind : int { X = 0, P = 1, Tau = 2, Pi = 3 };

std::string var_kind_name(VarKind k);

/// One dynamical variable: kind, degree-of-freedom index (0 for tau/pi),
/// and tick. Totally ordered so monomials have a canonical form.
struct VarId {
  VarKind kind = VarKind::X;
  int alpha = 0;
  long long tick = 0;

  auto operator<=>(const VarId&) const = default;
  std::string str() const;
};

inline VarId var_x(int alpha, long long tick) { return {VarKind::X, alpha, tick}; }
inline VarId var_p(int alpha, long long tick) { return {VarKind::P, alpha, tick}; }
inline VarId var_tau(long long tick) { return {VarKind::Tau, 0, tick}; }
inline VarId var_pi(long long tick) { return {VarKind::Pi, 0, tick}; }

/// Sorted variable list with repetition: [v, v, w] is v^2 w.
using Monomial = std::vector<VarId>;

/// Sparse multivariate polynomial with exact rational coefficients over the
/// dynamical variables. Integer-coefficient polynomials are the subclass
/// with every coefficient a whole number (is_integer()).
class Poly {
 public:
  Poly() = default;

  static Poly constant(Rat c);
  static Poly constant(Int c) { return constant(Rat(std::move(c))); }
  static Poly var(VarId v);

  bool is_zero() const { return terms_.empty(); }
  bool is_integer() const;
  int total_degree() const;
  int degree_in(VarId v) const;
  std::vector<VarId> variables() const;

  const std::map<Monomial, Rat>& terms() const { return terms_; }

  bool operator==(const Poly&) const = default;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rat& k) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);

  /// Substitutes v -> v + shift (binomial expansion; exact).
  Poly shifted(VarId v, const Rat& shift) const;

  /// Evaluates under a total assignment; throws ValidationError if a
  /// variable of the polynomial is missing from the map.
  Rat eval(const std::map<VarId, Rat>& assign) const;

  /// Deterministic human-readable rendering, e.g. "3 x0@1^2 - 1/2".
  std::string str() const;

  /// Inserts (or accumulates) one term; normalizes the monomial order and
  /// drops the term if the coefficient cancels to zero.
  void add_term(Monomial mono, Rat coeff);

 private:
  std::map<Monomial, Rat> terms_;
};

inline Poly operator*(const Rat& k, const Poly& p) { return p * k; }

/// Per-variable variation sizes for the symmetric difference quotient.
/// A variable not covered by the choice is not varied at all (its
/// variational derivative is the zero polynomial). Variation sizes are
/// nonzero integers by construction.
class VariationChoice {
 public:
  /// Varies every variable by the same nonzero delta.
  static VariationChoice uniform(Int delta);

  /// Varies exactly the explicitly set variables.
  VariationChoice& set(VarId v, Int delta);

  std::optional<Int> delta_for(VarId v) const;

  /// Same coverage with every delta doubled (used to witness or rule out
  /// delta dependence).
  VariationChoice doubled() const;

 private:
  std::optional<Int> default_;
  std::map<VarId, Int> overrides_;
};

/// Symmetric difference quotient [g(f+d) - g(f-d)] / 2d, computed
/// symbolically; exact partial derivative whenever f appears at degree <= 2.
/// Degree cap 3 on g; an uncovered f yields the zero polynomial.
Poly var_derivative(const Poly& g, VarId f, const VariationChoice& choice);

struct BracketResult {
  Poly poly;
  /// True when recomputing with doubled variations changes the result
  /// (possible only when an input carries a variable at degree 3).
  bool delta_dependent = false;
};

/// Sum over canonical pairs (x^a_n, p^a_n) and (tau_n, pi_n) of
/// dA/dX dB/dP - dB/dX dA/dP with the variational derivative above.
BracketResult poisson_bracket_variational(const Poly& a, const Poly& b,
                                          const VariationChoice& choice);

}  // namespace hca
