#include "hca/polynomial.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "hca/errors.hpp"

namespace hca {

std::string var_kind_name(VarKind k) {
  switch (k) {
    case VarKind::X:
      return "x";
    case VarKind::P:
      return "p";
    case VarKind::Tau:
      return "tau";
    case VarKind::Pi:
      return "pi";
  }
  throw InternalError("unknown variable kind");
}

std::string VarId::str() const {
  std::string s = var_kind_name(kind);
  if (kind == VarKind::X || kind == VarKind::P) s += std::to_string(alpha);
  s += "@" + std::to_string(tick);
  return s;
}

Poly Poly::constant(Rat c) {
  Poly p;
  p.add_term({}, std::move(c));
  return p;
}

Poly Poly::var(VarId v) {
  Poly p;
  p.add_term({v}, Rat(1));
  return p;
}

bool Poly::is_integer() const {
  for (const auto& [mono, coeff] : terms_)
    if (boost::multiprecision::denominator(coeff) != 1) return false;
  return true;
}

int Poly::total_degree() const {
  int d = 0;
  for (const auto& [mono, coeff] : terms_) d = std::max(d, static_cast<int>(mono.size()));
  return d;
}

int Poly::degree_in(VarId v) const {
  int d = 0;
  for (const auto& [mono, coeff] : terms_)
    d = std::max(d, static_cast<int>(std::count(mono.begin(), mono.end(), v)));
  return d;
}

std::vector<VarId> Poly::variables() const {
  std::set<VarId> seen;
  for (const auto& [mono, coeff] : terms_) seen.insert(mono.begin(), mono.end());
  return {seen.begin(), seen.end()};
}

void Poly::add_term(Monomial mono, Rat coeff) {
  if (coeff == 0) return;
  std::sort(mono.begin(), mono.end());
  auto [it, inserted] = terms_.try_emplace(std::move(mono), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator+(const Poly& o) const {
  Poly out = *this;
  out += o;
  return out;
}

Poly Poly::operator-(const Poly& o) const {
  Poly out = *this;
  out -= o;
  return out;
}

Poly Poly::operator-() const {
  Poly out;
  for (const auto& [mono, coeff] : terms_) out.terms_.emplace(mono, -coeff);
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [mono, coeff] : o.terms_) add_term(mono, coeff);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [mono, coeff] : o.terms_) add_term(mono, -coeff);
  return *this;
}

Poly Poly::operator*(const Poly& o) const {
  Poly out;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      Monomial m;
      m.reserve(m1.size() + m2.size());
      std::merge(m1.begin(), m1.end(), m2.begin(), m2.end(), std::back_inserter(m));
      out.add_term(std::move(m), c1 * c2);
    }
  }
  return out;
}

Poly Poly::operator*(const Rat& k) const {
  Poly out;
  if (k == 0) return out;
  for (const auto& [mono, coeff] : terms_) out.terms_.emplace(mono, coeff * k);
  return out;
}

Poly Poly::shifted(VarId v, const Rat& shift) const {
  Poly out;
  for (const auto& [mono, coeff] : terms_) {
    const auto k = static_cast<int>(std::count(mono.begin(), mono.end(), v));
    if (k == 0) {
      out.add_term(mono, coeff);
      continue;
    }
    Monomial rest;
    rest.reserve(mono.size() - static_cast<std::size_t>(k));
    std::copy_if(mono.begin(), mono.end(), std::back_inserter(rest),
                 [&v](const VarId& w) { return w != v; });
    // (v + shift)^k * rest, expanded binomially.
    std::vector<Rat> shift_pow(static_cast<std::size_t>(k) + 1);
    shift_pow[0] = Rat(1);
    for (int j = 1; j <= k; ++j)
      shift_pow[static_cast<std::size_t>(j)] = shift_pow[static_cast<std::size_t>(j - 1)] * shift;
    for (int j = 0; j <= k; ++j) {
      Int binom = 1;  // C(k, j), exact at every intermediate division
      for (int t = 0; t < j; ++t) binom = binom * (k - t) / (t + 1);
      Monomial m = rest;
      for (int t = 0; t < j; ++t) m.push_back(v);
      out.add_term(std::move(m), coeff * Rat(binom) * shift_pow[static_cast<std::size_t>(k - j)]);
    }
  }
  return out;
}

Rat Poly::eval(const std::map<VarId, Rat>& assign) const {
  Rat total = 0;
  for (const auto& [mono, coeff] : terms_) {
    Rat prod = coeff;
    for (const VarId& v : mono) {
      auto it = assign.find(v);
      if (it == assign.end())
        throw ValidationError("assignment missing variable " + v.str());
      prod *= it->second;
    }
    total += prod;
  }
  return total;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [mono, coeff] : terms_) {
    const bool neg = coeff < 0;
    const Rat mag = neg ? Rat(-coeff) : coeff;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const bool unit = (mag == 1) && !mono.empty();
    if (!unit) out += rat_to_string(mag);
    std::size_t i = 0;
    while (i < mono.size()) {
      std::size_t j = i;
      while (j < mono.size() && mono[j] == mono[i]) ++j;
      if (!unit || i > 0) out += " ";
      out += mono[i].str();
      if (j - i > 1) out += "^" + std::to_string(j - i);
      i = j;
    }
  }
  return out;
}

VariationChoice VariationChoice::uniform(Int delta) {
  if (delta == 0) throw ValidationError("variation size must be nonzero");
  VariationChoice c;
  c.default_ = std::move(delta);
  return c;
}

VariationChoice& VariationChoice::set(VarId v, Int delta) {
  if (delta == 0) throw ValidationError("variation size must be nonzero");
  overrides_[v] = std::move(delta);
  return *this;
}

std::optional<Int> VariationChoice::delta_for(VarId v) const {
  auto it = overrides_.find(v);
  if (it != overrides_.end()) return it->second;
  return default_;
}

VariationChoice VariationChoice::doubled() const {
  VariationChoice c;
  if (default_) c.default_ = *default_ * 2;
  for (const auto& [v, d] : overrides_) c.overrides_[v] = d * 2;
  return c;
}

namespace {

constexpr int kDegreeCap = 3;

void check_degree(const Poly& g, const char* what) {
  if (g.total_degree() > kDegreeCap)
    throw ValidationError(std::string(what) + ": polynomial degree exceeds the supported cap (3)");
}

Poly var_derivative_unchecked(const Poly& g, VarId f, const VariationChoice& choice) {
  const auto delta = choice.delta_for(f);
  if (!delta) return {};
  const Rat d{*delta};
  return (g.shifted(f, d) - g.shifted(f, -d)) * Rat(Int(1), *delta * 2);
}

Poly bracket_with(const Poly& a, const Poly& b, const VariationChoice& choice) {
  // Canonical pairs touched by either polynomial: (x^alpha_n, p^alpha_n)
  // keyed by (alpha, tick), and (tau_n, pi_n) keyed by tick.
  std::set<std::pair<int, long long>> xp_pairs;
  std::set<long long> taupi_pairs;
  for (const Poly* g : {&a, &b}) {
    for (const VarId& v : g->variables()) {
      if (v.kind == VarKind::X || v.kind == VarKind::P)
        xp_pairs.insert({v.alpha, v.tick});
      else
        taupi_pairs.insert(v.tick);
    }
  }
  Poly out;
  auto accumulate = [&](VarId xv, VarId pv) {
    const Poly da_dx = var_derivative_unchecked(a, xv, choice);
    const Poly db_dp = var_derivative_unchecked(b, pv, choice);
    const Poly db_dx = var_derivative_unchecked(b, xv, choice);
    const Poly da_dp = var_derivative_unchecked(a, pv, choice);
    out += da_dx * db_dp - db_dx * da_dp;
  };
  for (const auto& [alpha, tick] : xp_pairs) accumulate(var_x(alpha, tick), var_p(alpha, tick));
  for (const long long tick : taupi_pairs) accumulate(var_tau(tick), var_pi(tick));
  return out;
}

}  // namespace

Poly var_derivative(const Poly& g, VarId f, const VariationChoice& choice) {
  check_degree(g, "var_derivative");
  return var_derivative_unchecked(g, f, choice);
}

BracketResult poisson_bracket_variational(const Poly& a, const Poly& b,
                                          const VariationChoice& choice) {
  check_degree(a, "poisson_bracket");
  check_degree(b, "poisson_bracket");
  BracketResult r;
  r.poly = bracket_with(a, b, choice);
  r.delta_dependent = bracket_with(a, b, choice.doubled()) != r.poly;
  return r;
}

}  // namespace hca
