#ifndef FADCAP_TOOLS_MODEL_FLAGS_HPP
#define FADCAP_TOOLS_MODEL_FLAGS_HPP

#include <optional>
#include <string>

#include <CLI11.hpp>

#include "fadcap/capacity.hpp"
#include "fadcap/spectral_model.hpp"

namespace fadcap_cli {

// Spectrum selection shared by every subcommand.
struct ModelOptions {
    std::string model;
    double rho = 0.0;
    bool rho_set = false;
    double fm = 0.0; // clarke: 0 keeps the normalized closed-form route
    double block_T = 0.0;
    bool block_T_set = false;
    std::string table_path;
    bool renormalize = false;
};

void add_model_flags(CLI::App& cmd, ModelOptions& opt);

// A constructed spectrum, or the normalized closed-form route for clarke
// without an explicit Doppler shift (peak parameter P plays the role of the
// normalized peak).
struct EvalModel {
    std::optional<fadcap::SpectralModel> model;
    std::string label;

    fadcap::CapacityResult capacity(double P, double quad_tol) const;
};

EvalModel build_model(const ModelOptions& opt);

} // namespace fadcap_cli

#endif
