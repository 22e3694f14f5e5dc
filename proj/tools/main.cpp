#include <cmath>
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "fadcap/capacity.hpp"
#include "fadcap/errors.hpp"
#include "model_flags.hpp"
#include "sweep.hpp"
#include "verify.hpp"

namespace {

std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void print_field(const char* name, const std::string& value) {
    std::printf("%-9s %s\n", name, value.c_str());
}

int cmd_capacity(const fadcap_cli::ModelOptions& mo, double P, double quad_tol) {
    const fadcap_cli::EvalModel e = fadcap_cli::build_model(mo);
    const fadcap::CapacityResult r = e.capacity(P, quad_tol);
    print_field("model", e.label);
    print_field("P", fmt12(P));
    print_field("c_p", fmt12(r.c_p));
    print_field("i_of_p", fmt12(r.i_of_p));
    print_field("u_p", fmt12(r.u_p));
    print_field("coherent", "1");
    print_field("quad_err", fmt12(r.quad_err));
    print_field("norm_dev", fmt12(r.norm_dev));
    if (r.limit_convention) print_field("limit", "exact limit convention, not quadrature");
    return 0;
}

int cmd_bounds(const fadcap_cli::ModelOptions& mo, double p_avg, double beta, double quad_tol) {
    const fadcap_cli::EvalModel e = fadcap_cli::build_model(mo);
    fadcap::TimeBounds b{};
    if (e.model) {
        b = fadcap::cap_per_unit_time_bounds(*e.model, p_avg, beta, quad_tol);
    } else {
        // Peak-normalized Clarke route: compose the bounds from the closed form.
        if (std::isnan(p_avg) || p_avg < 0.0 || !std::isfinite(p_avg))
            throw fadcap::domain_error("time bounds: p_avg must be finite and nonnegative");
        if (!(beta >= 1.0) || !std::isfinite(beta))
            throw fadcap::domain_error("time bounds: beta = P_peak/P_avg must be >= 1 and finite");
        const fadcap::CapacityResult r = e.capacity(beta * p_avg, quad_tol);
        b.coherent_bound = p_avg;
        b.energy_bound = p_avg * r.c_p;
        b.fourthegy_bound = p_avg == 0.0 ? 0.0 : fadcap::infinite;
    }
    print_field("model", e.label);
    print_field("p_avg", fmt12(p_avg));
    print_field("beta", fmt12(beta));
    print_field("peak", fmt12(beta * p_avg));
    print_field("coherent", fmt12(b.coherent_bound));
    print_field("energy", fmt12(b.energy_bound));
    print_field("fourthegy", fmt12(b.fourthegy_bound));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"capacity per unit energy of peak-limited Rayleigh fading channels"};
    app.set_version_flag("--version", "fadcap 1.0.0");
    app.require_subcommand(1);

    fadcap_cli::ModelOptions cap_model;
    double cap_P = 1.0;
    double cap_tol = 1e-10;
    CLI::App* cap = app.add_subcommand("capacity", "capacity per unit energy at one peak level");
    fadcap_cli::add_model_flags(*cap, cap_model);
    cap->add_option("--P", cap_P, "peak power constraint (0 and inf take the limit value)")
        ->required();
    cap->add_option("--quad-tol", cap_tol, "absolute quadrature tolerance");

    fadcap_cli::SweepSpec sw;
    std::string sw_scale = "log";
    CLI::App* sweep = app.add_subcommand("sweep", "write a CSV sweep over one parameter");
    fadcap_cli::add_model_flags(*sweep, sw.model);
    sweep->add_option("--param", sw.param, "swept parameter: P, rho, p_avg or T")->required();
    sweep->add_option("--min", sw.lo, "first grid value")->required();
    sweep->add_option("--max", sw.hi, "last grid value")->required();
    sweep->add_option("--count", sw.count, "number of grid points")->required();
    sweep->add_option("--scale", sw_scale, "grid spacing: linear or log")
        ->check(CLI::IsMember({"linear", "log"}));
    sweep->add_option("--P", sw.fixed_P, "fixed peak power for rho and T sweeps");
    sweep->add_option("--beta", sw.beta, "peak-to-average ratio for p_avg sweeps");
    sweep->add_option("--quad-tol", sw.quad_tol, "absolute quadrature tolerance");
    sweep->add_option("--output,-o", sw.output, "output path, - for stdout");

    fadcap_cli::ModelOptions bo_model;
    double bo_pavg = 1.0;
    double bo_beta = 1.0;
    double bo_tol = 1e-10;
    CLI::App* bounds = app.add_subcommand("bounds", "capacity per unit time bounds");
    fadcap_cli::add_model_flags(*bounds, bo_model);
    bounds->add_option("--p-avg", bo_pavg, "average power constraint")->required();
    bounds->add_option("--beta", bo_beta, "peak-to-average power ratio, >= 1");
    bounds->add_option("--quad-tol", bo_tol, "absolute quadrature tolerance");

    fadcap_cli::VerifyOptions vo;
    CLI::App* verify = app.add_subcommand("verify", "run the numerical cross-check suites");
    verify->add_option("suite", vo.suite, "szego, subsets, coherent, sampling or all")
        ->check(CLI::IsMember({"szego", "subsets", "coherent", "sampling", "all"}));
    verify->add_option("--rho", vo.rho, "fading correlation coefficient");
    verify->add_option("--P", vo.P, "peak power constraint");
    verify->add_option("--n", vo.n, "matrix order (0 picks a per-suite default)");
    verify->add_option("--trials", vo.trials, "random trials for the coherent suite");
    verify->add_option("--K", vo.K, "finest sampling refinement level");
    verify->add_option("--seed", vo.seed, "random seed");
    verify->add_option("--quad-tol", vo.quad_tol, "absolute quadrature tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cap->parsed()) return cmd_capacity(cap_model, cap_P, cap_tol);
        if (sweep->parsed()) {
            sw.log_scale = sw_scale == "log";
            fadcap_cli::run_sweep(sw);
            return 0;
        }
        if (bounds->parsed()) return cmd_bounds(bo_model, bo_pavg, bo_beta, bo_tol);
        if (verify->parsed()) return fadcap_cli::run_verify(vo);
    } catch (const fadcap::domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const fadcap::error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
    return 0;
}
