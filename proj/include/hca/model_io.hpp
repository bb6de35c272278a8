#pragma once

#include <optional>
#include <string>

#include "hca/automaton.hpp"
#include "hca/polynomial.hpp"

namespace hca {

/// A batch-run input: coupling data plus the seed state pair. Discrete
/// quantities travel as JSON integers or decimal strings; floating-point
/// tokens on those fields are rejected so arbitrary-precision components
/// survive a round trip untouched.
struct ModelFile {
  AutomatonSpec spec;
  StatePair initial;
};

ModelFile parse_model(const std::string& json_text);
std::string model_to_json(const ModelFile& m);

/// One trajectory tick as a single JSON line and back.
std::string tick_record(const TickState& t);
TickState parse_tick_record(const std::string& line);

/// Conserved-quantity selector: the keywords identity / H / H2, or a JSON
/// object {"s": [[...]], "a": [[...]]} with an explicit Hermitian pair.
HermitianMatrix parse_g_spec(const std::string& text, const AutomatonSpec& spec);

/// Bracket operand file: either an observable {"s":..., "a":..., "tick":...}
/// or a raw polynomial {"terms": [{"coeff": "...", "vars": [...]}]}.
struct BracketOperand {
  std::optional<Poly> poly;
  std::optional<HermitianMatrix> obs;
  long long tick = 0;
};

BracketOperand parse_bracket_operand(const std::string& text);

}  // namespace hca
