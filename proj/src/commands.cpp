#include "hca/commands.hpp"

#include <json.hpp>

#include <sstream>

#include "hca/action.hpp"
#include "hca/bridge.hpp"
#include "hca/errors.hpp"
#include "hca/observables.hpp"

namespace hca {

namespace {

using nlohmann::json;

json int_json(const Int& v) { return json(v.str()); }

json matrix_json(const IntMatrix& m) {
  json out = json::array();
  for (int r = 0; r < m.dim(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.dim(); ++c) row.push_back(int_json(m.at(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Trajectory run(const ModelFile& m, long long steps, const EvolveLimits& limits) {
  return evolve(m.spec, m.initial, steps, limits);
}

}  // namespace

std::string cmd_evolve(const ModelFile& m, long long steps, const EvolveLimits& limits) {
  const Trajectory t = run(m, steps, limits);
  std::ostringstream out;
  for (const TickState& tick : t.ticks()) out << tick_record(tick) << '\n';
  return out.str();
}

std::string cmd_plot_csv(const ModelFile& m, long long steps, const EvolveLimits& limits) {
  const Trajectory t = run(m, steps, limits);
  std::ostringstream out;
  out << "n";
  for (int a = 0; a < m.spec.dim; ++a) out << ",re" << a << ",im" << a;
  out << '\n';
  for (const TickState& tick : t.ticks()) {
    out << tick.n;
    for (int a = 0; a < m.spec.dim; ++a) {
      const auto i = static_cast<std::size_t>(a);
      out << ',' << tick.x[i].convert_to<double>() << ',' << tick.p[i].convert_to<double>();
    }
    out << '\n';
  }
  return out.str();
}

std::string cmd_conserve(const ModelFile& m, long long steps, const std::string& g_spec,
                         const EvolveLimits& limits) {
  const HermitianMatrix g = parse_g_spec(g_spec, m.spec);
  const Trajectory t = run(m, steps, limits);

  std::ostringstream out;
  bool have_first = false;
  Int first;
  std::optional<long long> first_violation;
  for (long long n = t.first_tick() + 1; n <= t.last_tick(); ++n) {
    const Int q = two_point_invariant(g, t.pair_at(n));
    json rec;
    rec["n"] = n;
    rec["q"] = int_json(q);
    out << rec.dump() << '\n';
    if (!have_first) {
      first = q;
      have_first = true;
    } else if (q != first && !first_violation) {
      first_violation = n;
    }
  }

  json summary;
  summary["constant"] = !first_violation.has_value();
  summary["first_violation"] = first_violation ? json(*first_violation) : json(nullptr);
  if (have_first) summary["initial_value"] = int_json(first);
  out << summary.dump() << '\n';
  return out.str();
}

std::string cmd_bracket(const std::string& lhs_text, const std::string& rhs_text,
                        const std::vector<Int>& deltas) {
  if (deltas.empty()) throw ValidationError("at least one delta is required");
  const BracketOperand lhs = parse_bracket_operand(lhs_text);
  const BracketOperand rhs = parse_bracket_operand(rhs_text);

  const bool observables = lhs.obs.has_value() && rhs.obs.has_value();
  Poly pa, pb;
  long long tick = 0;
  if (lhs.obs) {
    tick = lhs.tick;
    pa = QuadraticObservable(*lhs.obs).to_polynomial(lhs.tick);
  } else {
    pa = *lhs.poly;
  }
  if (rhs.obs) {
    if (observables && rhs.tick != lhs.tick)
      throw ValidationError("observable operands must share a tick");
    pb = QuadraticObservable(*rhs.obs).to_polynomial(rhs.tick);
  } else {
    pb = *rhs.poly;
  }

  json rep;
  rep["kind"] = observables ? "observable" : "polynomial";

  json per_delta = json::array();
  bool dependent = false;
  std::string first_poly;
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    const auto choice = VariationChoice::uniform(deltas[i]);
    const BracketResult r = poisson_bracket_variational(pa, pb, choice);
    json row;
    row["delta"] = int_json(deltas[i]);
    row["poly"] = r.poly.str();
    row["delta_dependent"] = r.delta_dependent;
    per_delta.push_back(std::move(row));
    if (r.delta_dependent) dependent = true;
    if (i == 0)
      first_poly = r.poly.str();
    else if (r.poly.str() != first_poly)
      dependent = true;
  }
  rep["per_delta"] = std::move(per_delta);
  rep["delta_dependent"] = dependent;

  if (observables) {
    const QuadraticObservable closed = bracket_closed_form(QuadraticObservable(*lhs.obs),
                                                           QuadraticObservable(*rhs.obs));
    rep["closed_form"] = closed.to_polynomial(tick).str();
    rep["variational"] = first_poly;
    rep["identical"] = (rep["closed_form"] == rep["variational"]) && !dependent;
  }
  return rep.dump() + "\n";
}

std::string cmd_action_check(const ModelFile& m, long long steps, const std::vector<Int>& deltas,
                             const EvolveLimits& limits) {
  if (steps < 2) throw ValidationError("stationarity needs at least two steps of history");
  const Trajectory t = run(m, steps, limits);
  const TrajectoryWindow w = TrajectoryWindow::from_trajectory(t);
  const StationarityReport report = stationarity_check(m.spec, w, deltas);

  std::ostringstream out;
  for (const auto& v : report.violations) {
    json rec;
    rec["var"] = v.v.str();
    rec["delta"] = int_json(v.delta);
    rec["doubled_derivative"] = rat_to_string(v.doubled_derivative);
    out << rec.dump() << '\n';
  }
  json summary;
  summary["stationary"] = report.stationary();
  summary["violations"] = static_cast<long long>(report.violations.size());
  summary["window_first"] = w.n0;
  summary["window_last"] = w.n1();
  out << summary.dump() << '\n';
  return out.str();
}

std::string cmd_reconstruct(const ModelFile& m, long long steps, const std::vector<double>& times,
                            long long window, bool periodic, const EvolveLimits& limits) {
  const Trajectory t = run(m, steps, limits);
  const SampledWavefunction w = SampledWavefunction::from_trajectory(t, periodic);

  std::ostringstream out;
  for (double time : times) {
    const Reconstruction rec = reconstruct(w, time, window);
    json row;
    row["t"] = time;
    json vals = json::array();
    for (const auto& z : rec.value) {
      json pair = json::array();
      pair.push_back(z.real());
      pair.push_back(z.imag());
      vals.push_back(std::move(pair));
    }
    row["value"] = std::move(vals);
    row["tail_bound"] = rec.tail_bound;
    row["truncated"] = rec.truncated;
    out << row.dump() << '\n';
  }
  return out.str();
}

namespace {

json dispersion_row(double eps, double l) {
  json row;
  row["epsilon"] = eps;
  try {
    const DispersionSolution sol = dispersion_energy(eps, l);
    row["energy"] = sol.energy;
    row["series1"] = dispersion_series(eps, l, 1);
    row["series3"] = dispersion_series(eps, l, 3);
  } catch (const ValidationError& e) {
    row["error"] = e.what();
  }
  return row;
}

}  // namespace

std::string cmd_dispersion_model(const ModelFile& m) {
  const EigenResult eig = eigen_decompose(hamiltonian_matrix(m.spec));
  std::ostringstream out;
  for (std::size_t i = 0; i < eig.eigenvalues.size(); ++i) {
    json row = dispersion_row(eig.eigenvalues[i], m.spec.scale_l);
    row["residual_bound"] = eig.residual_bounds[i];
    out << row.dump() << '\n';
  }
  return out.str();
}

std::string cmd_dispersion_eps(const std::vector<double>& eps, double scale_l) {
  std::ostringstream out;
  for (double e : eps) out << dispersion_row(e, scale_l).dump() << '\n';
  return out.str();
}

std::string cmd_scan(int dim, int entry_bound, bool dedup, BandMode mode, int jobs,
                     bool hermitian) {
  const EnumerationResult res =
      enumerate_bounded_spectrum(dim, entry_bound, dedup, mode, jobs, hermitian);

  std::ostringstream out;
  for (const auto& rec : res.survivors) {
    json row;
    row["s"] = matrix_json(rec.s);
    row["a"] = matrix_json(rec.a);
    row["canonical_s"] = matrix_json(rec.canon_s);
    row["canonical_a"] = matrix_json(rec.canon_a);
    row["verdict"] = band_verdict_name(rec.verdict);
    out << row.dump() << '\n';
  }
  json summary;
  summary["raw_count"] = res.raw_count;
  summary["dedup_count"] = res.dedup_count;
  summary["candidates"] = res.candidates;
  summary["prefilter_rejects"] = res.prefilter_rejects;
  summary["deduplicated"] = res.deduplicated;
  out << summary.dump() << '\n';
  return out.str();
}

std::string cmd_period(const ModelFile& m, long long max_steps, const EvolveLimits& limits) {
  const auto period = detect_period(m.spec, m.initial, max_steps, limits);
  json rep;
  rep["period"] = period ? json(*period) : json(nullptr);
  rep["max_steps"] = max_steps;
  return rep.dump() + "\n";
}

}  // namespace hca
