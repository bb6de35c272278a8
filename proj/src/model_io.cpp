#include "hca/model_io.hpp"

#include <json.hpp>

#include "hca/errors.hpp"

namespace hca {

namespace {

using nlohmann::json;

json parse_text(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ValidationError(std::string(what) + ": " + e.what());
  }
}

[[noreturn]] void bad_field(const std::string& field, const char* why) {
  throw ValidationError("field '" + field + "': " + why);
}

const json& require_field(const json& j, const std::string& field) {
  const auto it = j.find(field);
  if (it == j.end()) bad_field(field, "missing");
  return *it;
}

// Exact integers only: JSON integer tokens or decimal strings. Floats are
// refused so big components cannot be silently truncated to 53 bits.
Int read_int(const json& j, const std::string& field) {
  if (j.is_string()) {
    try {
      return parse_int(j.get<std::string>());
    } catch (const ValidationError& e) {
      bad_field(field, e.what());
    }
  }
  if (j.is_number_integer() || j.is_number_unsigned()) {
    return Int(j.get<long long>());
  }
  if (j.is_number_float()) bad_field(field, "floating point is not exact; use a decimal string");
  bad_field(field, "expected an integer or decimal string");
}

long long read_small_int(const json& j, const std::string& field, long long lo, long long hi) {
  const Int v = read_int(j, field);
  if (v < lo || v > hi) bad_field(field, "out of range");
  return v.convert_to<long long>();
}

std::vector<Int> read_int_vector(const json& j, const std::string& field, int expect_len) {
  if (!j.is_array()) bad_field(field, "expected an array");
  std::vector<Int> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(read_int(j[i], field + "[" + std::to_string(i) + "]"));
  if (expect_len >= 0 && static_cast<int>(out.size()) != expect_len)
    bad_field(field, "wrong length");
  return out;
}

IntMatrix read_matrix(const json& j, const std::string& field, int dim) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim) bad_field(field, "expected dim rows");
  IntMatrix m(dim);
  for (int r = 0; r < dim; ++r) {
    const auto row =
        read_int_vector(j[static_cast<std::size_t>(r)], field + "[" + std::to_string(r) + "]", dim);
    for (int c = 0; c < dim; ++c) m.at(r, c) = row[static_cast<std::size_t>(c)];
  }
  return m;
}

json int_json(const Int& v) { return json(v.str()); }

json vector_json(const std::vector<Int>& v) {
  json out = json::array();
  for (const Int& x : v) out.push_back(int_json(x));
  return out;
}

json matrix_json(const IntMatrix& m) {
  json out = json::array();
  for (int r = 0; r < m.dim(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.dim(); ++c) row.push_back(int_json(m.at(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

VarId read_var(const json& j, const std::string& field) {
  if (!j.is_object()) bad_field(field, "expected an object");
  const std::string kind = require_field(j, "kind").get<std::string>();
  const long long tick = read_small_int(require_field(j, "tick"), field + ".tick",
                                        -1'000'000'000LL, 1'000'000'000LL);
  int alpha = 0;
  if (j.contains("alpha"))
    alpha = static_cast<int>(read_small_int(j["alpha"], field + ".alpha", 0, 1'000'000));
  if (kind == "x") return var_x(alpha, tick);
  if (kind == "p") return var_p(alpha, tick);
  if (kind == "tau") return var_tau(tick);
  if (kind == "pi") return var_pi(tick);
  bad_field(field + ".kind", "expected x, p, tau or pi");
}

}  // namespace

ModelFile parse_model(const std::string& json_text) {
  const json j = parse_text(json_text, "model parse error");
  if (!j.is_object()) throw ValidationError("model must be a JSON object");

  const int dim =
      static_cast<int>(read_small_int(require_field(j, "dim"), "dim", 1, 1'000));
  const IntMatrix s = read_matrix(require_field(j, "s"), "s", dim);
  IntMatrix a = IntMatrix::zero(dim);
  if (j.contains("a")) a = read_matrix(j["a"], "a", dim);

  std::vector<Int> c = {Int(1)};
  if (j.contains("c")) {
    if (j["c"].is_array())
      c = read_int_vector(j["c"], "c", -1);
    else
      c = {read_int(j["c"], "c")};
  }

  double scale_l = 1.0;
  if (j.contains("scale_l")) {
    if (!j["scale_l"].is_number()) bad_field("scale_l", "expected a number");
    scale_l = j["scale_l"].get<double>();
  }

  ModelFile m{validate_spec(s, a, c, scale_l), StatePair{}};

  const json& init = require_field(j, "initial");
  if (!init.is_object()) bad_field("initial", "expected an object");
  m.initial.x_prev = read_int_vector(require_field(init, "x_prev"), "initial.x_prev", dim);
  m.initial.p_prev = read_int_vector(require_field(init, "p_prev"), "initial.p_prev", dim);
  m.initial.x_curr = read_int_vector(require_field(init, "x_curr"), "initial.x_curr", dim);
  m.initial.p_curr = read_int_vector(require_field(init, "p_curr"), "initial.p_curr", dim);
  auto opt_int = [&](const char* name) {
    return init.contains(name) ? read_int(init[name], std::string("initial.") + name) : Int(0);
  };
  m.initial.tau_prev = opt_int("tau_prev");
  m.initial.tau_curr = opt_int("tau_curr");
  m.initial.pi2_prev = opt_int("pi2_prev");
  m.initial.pi2_curr = opt_int("pi2_curr");
  m.initial.tick = init.contains("tick")
                       ? read_small_int(init["tick"], "initial.tick", -4'000'000'000LL,
                                        4'000'000'000LL)
                       : 0;
  validate_state(m.spec, m.initial);
  return m;
}

std::string model_to_json(const ModelFile& m) {
  json j;
  j["dim"] = m.spec.dim;
  j["s"] = matrix_json(m.spec.S);
  j["a"] = matrix_json(m.spec.A);
  j["c"] = vector_json(m.spec.c);
  j["scale_l"] = m.spec.scale_l;
  json init;
  init["x_prev"] = vector_json(m.initial.x_prev);
  init["p_prev"] = vector_json(m.initial.p_prev);
  init["x_curr"] = vector_json(m.initial.x_curr);
  init["p_curr"] = vector_json(m.initial.p_curr);
  init["tau_prev"] = int_json(m.initial.tau_prev);
  init["tau_curr"] = int_json(m.initial.tau_curr);
  init["pi2_prev"] = int_json(m.initial.pi2_prev);
  init["pi2_curr"] = int_json(m.initial.pi2_curr);
  init["tick"] = m.initial.tick;
  j["initial"] = std::move(init);
  return j.dump();
}

std::string tick_record(const TickState& t) {
  json j;
  j["n"] = t.n;
  j["x"] = vector_json(t.x);
  j["p"] = vector_json(t.p);
  j["tau"] = int_json(t.tau);
  j["pi2"] = int_json(t.pi2);
  return j.dump();
}

TickState parse_tick_record(const std::string& line) {
  const json j = parse_text(line, "record parse error");
  TickState t;
  t.n = read_small_int(require_field(j, "n"), "n", -4'000'000'000LL, 4'000'000'000LL);
  t.x = read_int_vector(require_field(j, "x"), "x", -1);
  t.p = read_int_vector(require_field(j, "p"), "p", -1);
  if (t.x.size() != t.p.size()) throw ValidationError("record x/p lengths differ");
  t.tau = read_int(require_field(j, "tau"), "tau");
  t.pi2 = read_int(require_field(j, "pi2"), "pi2");
  return t;
}

HermitianMatrix parse_g_spec(const std::string& text, const AutomatonSpec& spec) {
  if (text == "identity") {
    return HermitianMatrix::from_symmetric(IntMatrix::identity(spec.dim));
  }
  const HermitianMatrix h = hamiltonian_matrix(spec);
  if (text == "H") return h;
  if (text == "H2") return HermitianMatrix(h.matrix() * h.matrix());

  const json j = parse_text(text, "observable parse error");
  if (!j.is_object() || !j.contains("s"))
    throw ValidationError("observable needs the keyword identity/H/H2 or an object with 's'");
  const int dim = spec.dim;
  const IntMatrix s = read_matrix(j["s"], "s", dim);
  IntMatrix a = IntMatrix::zero(dim);
  if (j.contains("a")) a = read_matrix(j["a"], "a", dim);
  return HermitianMatrix(s, a);
}

BracketOperand parse_bracket_operand(const std::string& text) {
  const json j = parse_text(text, "operand parse error");
  if (!j.is_object()) throw ValidationError("operand must be a JSON object");

  BracketOperand op;
  if (j.contains("terms")) {
    if (!j["terms"].is_array()) bad_field("terms", "expected an array");
    Poly p;
    for (std::size_t i = 0; i < j["terms"].size(); ++i) {
      const json& term = j["terms"][i];
      const std::string where = "terms[" + std::to_string(i) + "]";
      if (!term.is_object()) bad_field(where, "expected an object");
      const json& cj = require_field(term, "coeff");
      Rat coeff;
      if (cj.is_string()) {
        coeff = parse_rat(cj.get<std::string>());
      } else {
        coeff = Rat(read_int(cj, where + ".coeff"));
      }
      Monomial mono;
      if (term.contains("vars")) {
        if (!term["vars"].is_array()) bad_field(where + ".vars", "expected an array");
        for (std::size_t k = 0; k < term["vars"].size(); ++k)
          mono.push_back(read_var(term["vars"][k],
                                  where + ".vars[" + std::to_string(k) + "]"));
      }
      p.add_term(std::move(mono), coeff);
    }
    op.poly = std::move(p);
    return op;
  }

  if (!j.contains("s"))
    throw ValidationError("operand needs either 'terms' (polynomial) or 's' (observable)");
  const json& srows = j["s"];
  if (!srows.is_array()) bad_field("s", "expected an array");
  const int dim = static_cast<int>(srows.size());
  const IntMatrix s = read_matrix(srows, "s", dim);
  IntMatrix a = IntMatrix::zero(dim);
  if (j.contains("a")) a = read_matrix(j["a"], "a", dim);
  op.obs = HermitianMatrix(s, a);
  if (j.contains("tick"))
    op.tick = read_small_int(j["tick"], "tick", -4'000'000'000LL, 4'000'000'000LL);
  return op;
}

}  // namespace hca
