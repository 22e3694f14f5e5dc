#include "model_flags.hpp"

#include <cmath>

#include "fadcap/errors.hpp"

namespace fadcap_cli {

void add_model_flags(CLI::App& cmd, ModelOptions& opt) {
    cmd.add_option("--model", opt.model,
                   "spectrum: white | gm-discrete | gm-continuous | clarke | block | "
                   "table-discrete | table-continuous")
        ->required();
    cmd.add_option("--rho", opt.rho, "Gauss-Markov correlation, in [0, 1)")
        ->each([&opt](const std::string&) { opt.rho_set = true; });
    cmd.add_option("--fm", opt.fm,
                   "Clarke maximum Doppler shift; omit to use the normalized closed form");
    cmd.add_option("--T", opt.block_T, "block fading coherence length")
        ->each([&opt](const std::string&) { opt.block_T_set = true; });
    cmd.add_option("--table", opt.table_path, "tabulated spectrum file (frequency density rows)");
    cmd.add_flag("--renormalize", opt.renormalize,
                 "rescale a tabulated spectrum to unit variance instead of rejecting it");
}

fadcap::CapacityResult EvalModel::capacity(double P, double quad_tol) const {
    if (model) return fadcap::cap_per_unit_energy(*model, P, quad_tol);
    fadcap::CapacityResult r;
    r.c_p = fadcap::clarke_cp_closed(P);
    r.i_of_p = std::isfinite(P) ? P * (1.0 - r.c_p) : fadcap::infinite;
    r.u_p = P == 0.0 ? 0.0 : fadcap::infinite; // S^2 is not integrable
    r.limit_convention = P == 0.0 || !std::isfinite(P);
    return r;
}

EvalModel build_model(const ModelOptions& o) {
    using fadcap::SpectralModel;
    using fadcap::TimeDomain;
    EvalModel e;
    if (o.model == "white") {
        e.model = SpectralModel::white();
    } else if (o.model == "gm-discrete" || o.model == "gm-continuous") {
        if (!o.rho_set) throw fadcap::domain_error("Gauss-Markov models require --rho");
        e.model = SpectralModel::gauss_markov(o.rho, o.model == "gm-discrete"
                                                        ? TimeDomain::discrete
                                                        : TimeDomain::continuous);
    } else if (o.model == "clarke") {
        if (o.fm != 0.0) e.model = SpectralModel::clarke(o.fm);
    } else if (o.model == "block") {
        if (!o.block_T_set) throw fadcap::domain_error("block fading requires --T");
        e.model = SpectralModel::block_fading(o.block_T);
    } else if (o.model == "table-discrete" || o.model == "table-continuous") {
        if (o.table_path.empty()) throw fadcap::domain_error("tabulated models require --table");
        e.model = SpectralModel::tabulated_from_file(o.table_path,
                                                     o.model == "table-discrete"
                                                         ? TimeDomain::discrete
                                                         : TimeDomain::continuous,
                                                     o.renormalize);
    } else {
        throw fadcap::domain_error("unknown model: " + o.model);
    }
    e.label = e.model ? e.model->name() : "clarke normalized";
    return e;
}

} // namespace fadcap_cli
