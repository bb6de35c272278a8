#include "hca.h"

#include <cctype>
#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>
#include <vector>

#include "hca/commands.hpp"
#include "hca/errors.hpp"

namespace {

thread_local std::string g_last_error;

int fail(int code, const char* what) {
  g_last_error = what;
  return code;
}

char* copy_out(const std::string& s) {
  char* buf = static_cast<char*>(std::malloc(s.size() + 1));
  if (!buf) return nullptr;
  std::memcpy(buf, s.data(), s.size() + 1);
  return buf;
}

// Translate the C++ error hierarchy into status codes at the boundary.
template <typename Fn>
int guarded(char** out, Fn&& fn) {
  if (out) *out = nullptr;
  try {
    const std::string payload = fn();
    if (out) {
      *out = copy_out(payload);
      if (!*out) return fail(HCA_E_RESOURCE, "out of memory");
    }
    return HCA_OK;
  } catch (const hca::ValidationError& e) {
    return fail(HCA_E_VALIDATION, e.what());
  } catch (const hca::ResourceError& e) {
    return fail(HCA_E_RESOURCE, e.what());
  } catch (const hca::InternalError& e) {
    return fail(HCA_E_INTERNAL, e.what());
  } catch (const std::exception& e) {
    return fail(HCA_E_INTERNAL, e.what());
  }
}

hca::EvolveLimits limits_from(unsigned long long bitcap) {
  hca::EvolveLimits lim;
  if (bitcap > 0) lim.bitcap = static_cast<std::size_t>(bitcap);
  return lim;
}

std::vector<hca::Int> parse_deltas(const char* csv) {
  if (!csv || !*csv) throw hca::ValidationError("delta list is empty");
  std::vector<hca::Int> out;
  std::istringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(hca::parse_int(item));
  if (out.empty()) throw hca::ValidationError("delta list is empty");
  return out;
}

std::vector<double> parse_doubles(const char* csv) {
  if (!csv || !*csv) throw hca::ValidationError("value list is empty");
  std::vector<double> out;
  std::istringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw hca::ValidationError("not a number: " + item);
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used != item.size()) throw hca::ValidationError("not a number: " + item);
    out.push_back(v);
  }
  if (out.empty()) throw hca::ValidationError("value list is empty");
  return out;
}

const hca::ModelFile& deref(const hca_model* m) {
  if (!m) throw hca::ValidationError("model handle is null");
  return *reinterpret_cast<const hca::ModelFile*>(m);
}

}  // namespace

extern "C" {

const char* hca_last_error(void) { return g_last_error.c_str(); }

void hca_buf_free(char* buf) { std::free(buf); }

int hca_model_load_json(const char* json_text, hca_model** out) {
  if (out) *out = nullptr;
  if (!json_text) return fail(HCA_E_VALIDATION, "model text is null");
  if (!out) return fail(HCA_E_VALIDATION, "output handle is null");
  try {
    auto* m = new hca::ModelFile(hca::parse_model(json_text));
    *out = reinterpret_cast<hca_model*>(m);
    return HCA_OK;
  } catch (const hca::ValidationError& e) {
    return fail(HCA_E_VALIDATION, e.what());
  } catch (const std::exception& e) {
    return fail(HCA_E_INTERNAL, e.what());
  }
}

void hca_model_free(hca_model* m) { delete reinterpret_cast<hca::ModelFile*>(m); }

int hca_model_dump_json(const hca_model* m, char** out) {
  return guarded(out, [&] { return hca::model_to_json(deref(m)); });
}

int hca_cmd_evolve(const hca_model* m, long long steps, unsigned long long bitcap, char** out) {
  return guarded(out, [&] { return hca::cmd_evolve(deref(m), steps, limits_from(bitcap)); });
}

int hca_cmd_plot_csv(const hca_model* m, long long steps, unsigned long long bitcap, char** out) {
  return guarded(out, [&] { return hca::cmd_plot_csv(deref(m), steps, limits_from(bitcap)); });
}

int hca_cmd_conserve(const hca_model* m, long long steps, const char* g_spec,
                     unsigned long long bitcap, char** out) {
  return guarded(out, [&] {
    if (!g_spec) throw hca::ValidationError("observable selector is null");
    return hca::cmd_conserve(deref(m), steps, g_spec, limits_from(bitcap));
  });
}

int hca_cmd_bracket(const char* lhs_json, const char* rhs_json, const char* deltas_csv,
                    char** out) {
  return guarded(out, [&] {
    if (!lhs_json || !rhs_json) throw hca::ValidationError("operand text is null");
    return hca::cmd_bracket(lhs_json, rhs_json, parse_deltas(deltas_csv));
  });
}

int hca_cmd_action_check(const hca_model* m, long long steps, const char* deltas_csv,
                         unsigned long long bitcap, char** out) {
  return guarded(out, [&] {
    return hca::cmd_action_check(deref(m), steps, parse_deltas(deltas_csv),
                                 limits_from(bitcap));
  });
}

int hca_cmd_reconstruct(const hca_model* m, long long steps, const char* times_csv,
                        long long window, int periodic, unsigned long long bitcap, char** out) {
  return guarded(out, [&] {
    return hca::cmd_reconstruct(deref(m), steps, parse_doubles(times_csv), window,
                                periodic != 0, limits_from(bitcap));
  });
}

int hca_cmd_dispersion_model(const hca_model* m, char** out) {
  return guarded(out, [&] { return hca::cmd_dispersion_model(deref(m)); });
}

int hca_cmd_dispersion_eps(const char* eps_csv, double scale_l, char** out) {
  return guarded(out, [&] { return hca::cmd_dispersion_eps(parse_doubles(eps_csv), scale_l); });
}

int hca_cmd_scan(int dim, int entry_bound, int dedup, const char* mode, int jobs, int hermitian,
                 char** out) {
  return guarded(out, [&] {
    hca::BandMode bm;
    const std::string ms = mode ? mode : "";
    if (ms == "exact")
      bm = hca::BandMode::Exact;
    else if (ms == "numeric")
      bm = hca::BandMode::Numeric;
    else
      throw hca::ValidationError("mode must be exact or numeric");
    return hca::cmd_scan(dim, entry_bound, dedup != 0, bm, jobs, hermitian != 0);
  });
}

int hca_cmd_period(const hca_model* m, long long max_steps, unsigned long long bitcap,
                   char** out) {
  return guarded(out, [&] { return hca::cmd_period(deref(m), max_steps, limits_from(bitcap)); });
}

}  // extern "C"
