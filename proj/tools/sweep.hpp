#ifndef FADCAP_TOOLS_SWEEP_HPP
#define FADCAP_TOOLS_SWEEP_HPP

#include <string>

#include "model_flags.hpp"

namespace fadcap_cli {

// One CSV-producing parameter sweep. Output is deterministic for a fixed
// spec: grid points come from the same closed-form grid and every value is
// printed with 12 significant digits in grid order.
struct SweepSpec {
    ModelOptions model;
    std::string param; // P | rho | p_avg | T
    double lo = 0.0;
    double hi = 0.0;
    int count = 0;
    bool log_scale = false;
    double fixed_P = 1.0; // peak for rho and T sweeps
    double beta = 1.0;    // peak-to-average ratio for p_avg sweeps
    double quad_tol = 1e-10;
    std::string output = "-"; // path or - for stdout
};

void run_sweep(const SweepSpec& spec);

} // namespace fadcap_cli

#endif
