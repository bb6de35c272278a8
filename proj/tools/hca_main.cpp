// Batch front door: maps subcommands and flags onto the C API, prints the
// payload to stdout and a run report to stderr. stdout carries no timing
// or machine-dependent data, so identical invocations are byte-identical.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "hca.h"

namespace {

struct CommandError {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CommandError{HCA_E_VALIDATION, "cannot open file: " + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char hex[8];
          std::snprintf(hex, sizeof hex, "\\u%04x", c);
          out += hex;
        } else {
          out += c;
        }
    }
  }
  return out;
}

// Flag wins over the environment; zero means the library default.
unsigned long long resolve_bitcap(unsigned long long flag_value, bool flag_set) {
  if (flag_set) return flag_value;
  if (const char* env = std::getenv("HCA_BITCAP")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw CommandError{HCA_E_VALIDATION, "HCA_BITCAP is not a number"};
    }
  }
  return 0;
}

class ModelHandle {
 public:
  explicit ModelHandle(const std::string& path) {
    const std::string text = read_file(path);
    const int rc = hca_model_load_json(text.c_str(), &m_);
    if (rc != HCA_OK) throw CommandError{rc, hca_last_error()};
  }
  ~ModelHandle() { hca_model_free(m_); }
  ModelHandle(const ModelHandle&) = delete;
  ModelHandle& operator=(const ModelHandle&) = delete;
  const hca_model* get() const { return m_; }

 private:
  hca_model* m_ = nullptr;
};

std::string take_payload(int rc, char* buf) {
  if (rc != HCA_OK) {
    if (buf) hca_buf_free(buf);
    throw CommandError{rc, hca_last_error()};
  }
  std::string out = buf ? buf : "";
  hca_buf_free(buf);
  return out;
}

// The conserved-quantity selector is a keyword or a path to a JSON file.
std::string g_spec_text(const std::string& value) {
  if (value == "identity" || value == "H" || value == "H2") return value;
  return read_file(value);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact simulator and verification toolkit for integer Hamiltonian automata"};
  app.require_subcommand(1);

  std::string model_path, lhs_path, rhs_path, observable = "H";
  std::string deltas = "1,2", times, mode = "exact", plot_path, eps_list;
  long long steps = 0, window = 64, period_steps = 1'000'000;
  unsigned long long bitcap = 0;
  int dim = 2, bound = 2, jobs = 1;
  double scale_l = 1.0;
  bool periodic = false, dedup = false, hermitian = false;

  auto* evolve = app.add_subcommand("evolve", "advance the automaton and stream tick records");
  evolve->add_option("--model", model_path, "model JSON file")->required();
  evolve->add_option("--steps", steps, "tick count (negative runs backward)");
  auto* evolve_bitcap = evolve->add_option("--bitcap", bitcap, "component bit-length cap");
  evolve->add_option("--plot-data", plot_path, "write a float CSV view to this file");

  auto* conserve = app.add_subcommand("conserve", "track a two-point invariant along a run");
  conserve->add_option("--model", model_path, "model JSON file")->required();
  conserve->add_option("--steps", steps, "tick count");
  conserve->add_option("--observable", observable, "identity, H, H2, or a matrix JSON file");
  auto* conserve_bitcap = conserve->add_option("--bitcap", bitcap, "component bit-length cap");

  auto* bracket = app.add_subcommand("bracket", "variational bracket of two operand files");
  bracket->add_option("--lhs", lhs_path, "left operand JSON file")->required();
  bracket->add_option("--rhs", rhs_path, "right operand JSON file")->required();
  bracket->add_option("--delta", deltas, "comma-separated variation sizes");

  auto* action = app.add_subcommand("action-check", "test stationarity of a generated window");
  action->add_option("--model", model_path, "model JSON file")->required();
  action->add_option("--steps", steps, "tick count (>= 2)")->default_val(4);
  action->add_option("--delta", deltas, "comma-separated variation sizes");
  auto* action_bitcap = action->add_option("--bitcap", bitcap, "component bit-length cap");

  auto* rec = app.add_subcommand("reconstruct", "interpolate the sampled wavefunction");
  rec->add_option("--model", model_path, "model JSON file")->required();
  rec->add_option("--steps", steps, "tick count")->default_val(12);
  rec->add_option("--at", times, "comma-separated times")->required();
  rec->add_option("--window", window, "nodes kept on each side");
  rec->add_flag("--periodic", periodic, "extend the samples periodically");
  auto* rec_bitcap = rec->add_option("--bitcap", bitcap, "component bit-length cap");

  auto* disp = app.add_subcommand("dispersion", "stationary energies from the half-sine band");
  auto* disp_model = disp->add_option("--model", model_path, "model JSON file");
  auto* disp_eps = disp->add_option("--eps", eps_list, "comma-separated eigenvalues");
  disp->add_option("--scale", scale_l, "tick duration for the eps list");
  disp_model->excludes(disp_eps);

  auto* scan = app.add_subcommand("scan", "enumerate couplings with spectrum in the band");
  scan->add_option("--dim", dim, "matrix dimension (1..5)")->required();
  scan->add_option("--bound", bound, "entry bound")->required();
  scan->add_flag("--dedup", dedup, "keep one canonical representative per orbit");
  scan->add_option("--mode", mode, "exact or numeric");
  scan->add_option("--jobs", jobs, "worker count");
  scan->add_flag("--hermitian", hermitian, "scan Hermitian pairs (dim <= 3)");

  auto* period = app.add_subcommand("period", "search for the orbit period");
  period->add_option("--model", model_path, "model JSON file")->required();
  period->add_option("--steps", period_steps, "search bound");
  auto* period_bitcap = period->add_option("--bitcap", bitcap, "component bit-length cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : HCA_E_VALIDATION;
  }

  CLI::App* active = app.get_subcommands().front();
  const std::string command = active->get_name();
  const auto t0 = std::chrono::steady_clock::now();

  int status = HCA_OK;
  std::string diagnostic;
  try {
    std::string payload;
    if (command == "evolve") {
      ModelHandle m(model_path);
      const auto cap = resolve_bitcap(bitcap, !evolve_bitcap->empty());
      char* buf = nullptr;
      const int rc = hca_cmd_evolve(m.get(), steps, cap, &buf);
      payload = take_payload(rc, buf);
      if (!plot_path.empty()) {
        char* csv = nullptr;
        const int prc = hca_cmd_plot_csv(m.get(), steps, cap, &csv);
        const std::string table = take_payload(prc, csv);
        std::ofstream out(plot_path, std::ios::binary);
        if (!out) throw CommandError{HCA_E_VALIDATION, "cannot write file: " + plot_path};
        out << table;
      }
    } else if (command == "conserve") {
      ModelHandle m(model_path);
      const auto cap = resolve_bitcap(bitcap, !conserve_bitcap->empty());
      char* buf = nullptr;
      const int rc = hca_cmd_conserve(m.get(), steps, g_spec_text(observable).c_str(), cap, &buf);
      payload = take_payload(rc, buf);
    } else if (command == "bracket") {
      const std::string lhs = read_file(lhs_path);
      const std::string rhs = read_file(rhs_path);
      char* buf = nullptr;
      const int rc = hca_cmd_bracket(lhs.c_str(), rhs.c_str(), deltas.c_str(), &buf);
      payload = take_payload(rc, buf);
    } else if (command == "action-check") {
      ModelHandle m(model_path);
      const auto cap = resolve_bitcap(bitcap, !action_bitcap->empty());
      char* buf = nullptr;
      const int rc = hca_cmd_action_check(m.get(), steps, deltas.c_str(), cap, &buf);
      payload = take_payload(rc, buf);
    } else if (command == "reconstruct") {
      ModelHandle m(model_path);
      const auto cap = resolve_bitcap(bitcap, !rec_bitcap->empty());
      char* buf = nullptr;
      const int rc =
          hca_cmd_reconstruct(m.get(), steps, times.c_str(), window, periodic ? 1 : 0, cap, &buf);
      payload = take_payload(rc, buf);
    } else if (command == "dispersion") {
      char* buf = nullptr;
      if (!disp_model->empty()) {
        ModelHandle m(model_path);
        const int rc = hca_cmd_dispersion_model(m.get(), &buf);
        payload = take_payload(rc, buf);
      } else if (!disp_eps->empty()) {
        const int rc = hca_cmd_dispersion_eps(eps_list.c_str(), scale_l, &buf);
        payload = take_payload(rc, buf);
      } else {
        throw CommandError{HCA_E_VALIDATION, "dispersion needs --model or --eps"};
      }
    } else if (command == "scan") {
      char* buf = nullptr;
      const int rc =
          hca_cmd_scan(dim, bound, dedup ? 1 : 0, mode.c_str(), jobs, hermitian ? 1 : 0, &buf);
      payload = take_payload(rc, buf);
    } else if (command == "period") {
      ModelHandle m(model_path);
      const auto cap = resolve_bitcap(bitcap, !period_bitcap->empty());
      char* buf = nullptr;
      const int rc = hca_cmd_period(m.get(), period_steps, cap, &buf);
      payload = take_payload(rc, buf);
    }
    std::cout << payload;
    std::cout.flush();
  } catch (const CommandError& e) {
    status = e.code;
    diagnostic = e.message;
  } catch (const std::exception& e) {
    status = HCA_E_INTERNAL;
    diagnostic = e.what();
  }

  const auto t1 = std::chrono::steady_clock::now();
  const double wall_ms =
      std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(t1 - t0).count();

  std::ostringstream report;
  report << "{\"command\":\"" << json_escape(command) << "\",\"exit\":" << status
         << ",\"wall_ms\":" << wall_ms;
  if (!diagnostic.empty()) report << ",\"error\":\"" << json_escape(diagnostic) << "\"";
  report << "}";
  std::cerr << report.str() << std::endl;
  return status;
}
