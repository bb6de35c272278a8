#pragma once

#include <string>
#include <vector>

#include "hca/dynamics.hpp"
#include "hca/model_io.hpp"
#include "hca/spectra.hpp"

namespace hca {

/// Batch command bodies. Each returns the complete stdout payload —
/// newline-delimited JSON records, with any summary as the final line —
/// and throws the usual error hierarchy on failure. Payloads contain no
/// timing or other run-dependent data, so identical inputs produce
/// byte-identical output.

std::string cmd_evolve(const ModelFile& m, long long steps, const EvolveLimits& limits);

/// Lossy float view (n, Re psi, Im psi per component) for plotting.
std::string cmd_plot_csv(const ModelFile& m, long long steps, const EvolveLimits& limits);

std::string cmd_conserve(const ModelFile& m, long long steps, const std::string& g_spec,
                         const EvolveLimits& limits);

std::string cmd_bracket(const std::string& lhs_text, const std::string& rhs_text,
                        const std::vector<Int>& deltas);

std::string cmd_action_check(const ModelFile& m, long long steps, const std::vector<Int>& deltas,
                             const EvolveLimits& limits);

std::string cmd_reconstruct(const ModelFile& m, long long steps, const std::vector<double>& times,
                            long long window, bool periodic, const EvolveLimits& limits);

std::string cmd_dispersion_model(const ModelFile& m);
std::string cmd_dispersion_eps(const std::vector<double>& eps, double scale_l);

std::string cmd_scan(int dim, int entry_bound, bool dedup, BandMode mode, int jobs,
                     bool hermitian);

std::string cmd_period(const ModelFile& m, long long max_steps, const EvolveLimits& limits);

}  // namespace hca
