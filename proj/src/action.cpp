#include "hca/action.hpp"

#include <utility>

#include "hca/dynamics.hpp"
#include "hca/errors.hpp"

namespace hca {

TrajectoryWindow TrajectoryWindow::from_trajectory(const Trajectory& t) {
  TrajectoryWindow w;
  w.n0 = t.first_tick();
  for (const TickState& s : t.ticks()) {
    w.x.push_back(s.x);
    w.p.push_back(s.p);
    w.tau.push_back(s.tau);
    w.pi2.push_back(s.pi2);
  }
  return w;
}

void validate_window(const AutomatonSpec& spec, const TrajectoryWindow& w) {
  const std::size_t len = w.tau.size();
  if (len < 3) throw ValidationError("window must span at least three ticks");
  if (w.x.size() != len || w.p.size() != len || w.pi2.size() != len)
    throw ValidationError("window arrays have ragged lengths");
  for (std::size_t i = 0; i < len; ++i) {
    if (w.x[i].size() != static_cast<std::size_t>(spec.dim) ||
        w.p[i].size() != static_cast<std::size_t>(spec.dim))
      throw ValidationError("window vectors do not match spec dimension");
  }
}

Int action_term(const AutomatonSpec& spec, const TrajectoryWindow& w, long long n) {
  if (n <= w.n0 || n > w.n1()) throw ValidationError("term tick outside window");
  const std::size_t i = w.idx(n), j = w.idx(n - 1);
  Int kinetic = 0;
  for (std::size_t a = 0; a < w.x[i].size(); ++a)
    kinetic += (w.p[i][a] + w.p[j][a]) * (w.x[i][a] - w.x[j][a]);
  const Int dtau = w.tau[i] - w.tau[j];
  const Int h2 = doubled_energy(spec, w.x[i], w.p[i]) + doubled_energy(spec, w.x[j], w.p[j]);
  return 2 * kinetic + (w.pi2[i] + w.pi2[j]) * dtau - dtau * h2 - spec.c_at(n) * w.pi2[i];
}

Int action_value(const AutomatonSpec& spec, const TrajectoryWindow& w) {
  validate_window(spec, w);
  Int total = 0;
  for (long long n = w.n0 + 1; n <= w.n1(); ++n) total += action_term(spec, w, n);
  return total;
}

Poly doubled_energy_poly(const AutomatonSpec& spec, long long n) {
  Poly out;
  for (int a = 0; a < spec.dim; ++a) {
    for (int b = 0; b < spec.dim; ++b) {
      const Int& s = spec.S.at(a, b);
      if (!s.is_zero()) {
        out.add_term({var_p(a, n), var_p(b, n)}, Rat(s));
        out.add_term({var_x(a, n), var_x(b, n)}, Rat(s));
      }
      const Int& aa = spec.A.at(a, b);
      if (!aa.is_zero()) out.add_term({var_p(a, n), var_x(b, n)}, Rat(aa * 2));
    }
  }
  return out;
}

Poly action_term_poly(const AutomatonSpec& spec, long long n) {
  Poly out;
  for (int a = 0; a < spec.dim; ++a) {
    const Poly psum = Poly::var(var_p(a, n)) + Poly::var(var_p(a, n - 1));
    const Poly dx = Poly::var(var_x(a, n)) - Poly::var(var_x(a, n - 1));
    out += psum * dx * Rat(2);
  }
  const Poly dtau = Poly::var(var_tau(n)) - Poly::var(var_tau(n - 1));
  const Poly pisum = Poly::var(var_pi(n)) + Poly::var(var_pi(n - 1));
  out += pisum * dtau * Rat(2);
  out -= dtau * (doubled_energy_poly(spec, n) + doubled_energy_poly(spec, n - 1));
  out -= Poly::var(var_pi(n)) * Rat(spec.c_at(n) * 2);
  return out;
}

std::map<VarId, Rat> window_assignment(const TrajectoryWindow& w) {
  std::map<VarId, Rat> assign;
  const Rat half(Int(1), Int(2));
  for (long long n = w.n0; n <= w.n1(); ++n) {
    const std::size_t i = w.idx(n);
    for (std::size_t a = 0; a < w.x[i].size(); ++a) {
      assign[var_x(static_cast<int>(a), n)] = Rat(w.x[i][a]);
      assign[var_p(static_cast<int>(a), n)] = Rat(w.p[i][a]);
    }
    assign[var_tau(n)] = Rat(w.tau[i]);
    assign[var_pi(n)] = Rat(w.pi2[i]) * half;
  }
  return assign;
}

namespace {

std::vector<VarId> tick_variables(int dim, long long n) {
  std::vector<VarId> vars;
  for (int a = 0; a < dim; ++a) {
    vars.push_back(var_x(a, n));
    vars.push_back(var_p(a, n));
  }
  vars.push_back(var_tau(n));
  vars.push_back(var_pi(n));
  return vars;
}

}  // namespace

StationarityReport stationarity_check(const AutomatonSpec& spec, const TrajectoryWindow& w,
                                      const std::vector<Int>& deltas) {
  validate_window(spec, w);
  if (deltas.empty()) throw ValidationError("delta list must be nonempty");
  for (const Int& d : deltas)
    if (d == 0) throw ValidationError("variation size must be nonzero");

  const auto assign = window_assignment(w);
  StationarityReport report;
  for (long long m = w.n0 + 1; m < w.n1(); ++m) {
    // Only the tick-m and tick-(m+1) terms contain tick-m variables.
    const Poly local = action_term_poly(spec, m) + action_term_poly(spec, m + 1);
    for (const VarId& v : tick_variables(spec.dim, m)) {
      for (const Int& d : deltas) {
        const Rat val = var_derivative(local, v, VariationChoice::uniform(d)).eval(assign);
        if (val != 0) report.violations.push_back({v, d, val});
      }
    }
  }
  return report;
}

StatePair eom_from_stationarity_oracle(const AutomatonSpec& spec, const StatePair& boundary,
                                       const Int& bound) {
  validate_state(spec, boundary);
  if (bound < 1) throw ValidationError("scan bound must be positive");
  const long long m = boundary.tick;
  const Poly local = action_term_poly(spec, m) + action_term_poly(spec, m + 1);
  const VariationChoice unit = VariationChoice::uniform(Int(1));

  // Known values at ticks m-1 and m.
  std::map<VarId, Rat> assign;
  const Rat half(Int(1), Int(2));
  for (int a = 0; a < spec.dim; ++a) {
    assign[var_x(a, m - 1)] = Rat(boundary.x_prev[static_cast<std::size_t>(a)]);
    assign[var_p(a, m - 1)] = Rat(boundary.p_prev[static_cast<std::size_t>(a)]);
    assign[var_x(a, m)] = Rat(boundary.x_curr[static_cast<std::size_t>(a)]);
    assign[var_p(a, m)] = Rat(boundary.p_curr[static_cast<std::size_t>(a)]);
  }
  assign[var_tau(m - 1)] = Rat(boundary.tau_prev);
  assign[var_tau(m)] = Rat(boundary.tau_curr);
  assign[var_pi(m - 1)] = Rat(boundary.pi2_prev) * half;
  assign[var_pi(m)] = Rat(boundary.pi2_curr) * half;

  // Each interior derivative is linear in exactly one next-tick unknown, so
  // the scans run in a dependency order; non-unique zero sets would signal
  // a broken derivation and surface as an internal error.
  auto scan = [&](const Poly& derivative, VarId unknown, const Int& lo, const Int& hi,
                  bool halved) -> Rat {
    bool found = false;
    Rat solution;
    for (Int cand = lo; cand <= hi; ++cand) {
      const Rat value = halved ? Rat(cand) * half : Rat(cand);
      assign[unknown] = value;
      if (derivative.eval(assign) == 0) {
        if (found) throw InternalError("stationarity zero set is not unique");
        found = true;
        solution = value;
      }
    }
    if (!found)
      throw ValidationError("no solution in bound for " + unknown.str());
    assign[unknown] = solution;
    return solution;
  };

  StatePair out;
  out.tick = m + 1;
  out.x_prev = boundary.x_curr;
  out.p_prev = boundary.p_curr;
  out.tau_prev = boundary.tau_curr;
  out.pi2_prev = boundary.pi2_curr;

  // tau_{m+1} from the pi_m condition.
  const Rat tau_next =
      scan(var_derivative(local, var_pi(m), unit), var_tau(m + 1), -bound, bound, false);
  out.tau_curr = boost::multiprecision::numerator(tau_next);

  // x_{m+1}^a from the p_m^a condition, p_{m+1}^a from the x_m^a condition.
  for (int a = 0; a < spec.dim; ++a) {
    const Rat xv =
        scan(var_derivative(local, var_p(a, m), unit), var_x(a, m + 1), -bound, bound, false);
    out.x_curr.push_back(boost::multiprecision::numerator(xv));
  }
  for (int a = 0; a < spec.dim; ++a) {
    const Rat pv =
        scan(var_derivative(local, var_x(a, m), unit), var_p(a, m + 1), -bound, bound, false);
    out.p_curr.push_back(boost::multiprecision::numerator(pv));
  }

  // 2pi_{m+1} from the tau_m condition; its magnitude is bounded by the
  // update law |2pi_{m+1}| <= |2pi_{m-1}| + |2H_{m+1}| + |2H_{m-1}|, not by
  // the coordinate bound.
  using boost::multiprecision::abs;
  const Int pi_range = abs(boundary.pi2_prev) +
                       abs(doubled_energy(spec, out.x_curr, out.p_curr)) +
                       abs(doubled_energy(spec, boundary.x_prev, boundary.p_prev));
  const Rat pi_next = scan(var_derivative(local, var_tau(m), unit), var_pi(m + 1), -pi_range,
                           pi_range, true);
  out.pi2_curr = boost::multiprecision::numerator(Rat(pi_next * 2));

  // The scans solved the four stationarity families one at a time; confirm
  // they vanish jointly at the assembled assignment.
  for (const VarId& v : tick_variables(spec.dim, m)) {
    if (var_derivative(local, v, unit).eval(assign) != 0)
      throw InternalError("joint stationarity failed after staged scan");
  }
  return out;
}

}  // namespace hca
