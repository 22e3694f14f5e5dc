#include "sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <thread>
#include <vector>

#include "fadcap/errors.hpp"

namespace fadcap_cli {
namespace {

std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

struct Columns {
    std::string header;
    std::function<std::string(int, double)> row; // grid index, grid value
};

// c_p(P) = 1 - avg(log(1+PS))/P is non-decreasing in P for every spectrum,
// and bounded by both 1 and the quadratic bound; a violated row means the
// numerics broke, not the model.
void check_capacity_row(const fadcap::CapacityResult& r, const char* what) {
    const double slack = 1e-9;
    if (!(r.c_p >= -slack) || !(r.c_p <= 1.0 + slack))
        throw fadcap::error(std::string("sweep: c_p outside [0, 1] for ") + what);
    if (std::isfinite(r.u_p) && r.c_p > r.u_p * (1.0 + slack) + slack)
        throw fadcap::error(std::string("sweep: c_p exceeds its quadratic bound for ") + what);
}

void check_monotone(const std::vector<double>& v, const char* what) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] < v[i - 1] - 1e-9)
            throw fadcap::error(std::string("sweep: expected non-decreasing ") + what);
}

} // namespace

void run_sweep(const SweepSpec& spec) {
    if (spec.param != "P" && spec.param != "rho" && spec.param != "p_avg" && spec.param != "T")
        throw fadcap::domain_error("sweep: --param must be one of P, rho, p_avg, T");
    if (spec.count < 2) throw fadcap::domain_error("sweep: --count must be at least 2");
    if (!(spec.lo < spec.hi)) throw fadcap::domain_error("sweep: need --min < --max");
    if (spec.log_scale && !(spec.lo > 0.0))
        throw fadcap::domain_error("sweep: log scale needs positive bounds");

    auto grid = [&](int i) {
        const double t = static_cast<double>(i) / (spec.count - 1);
        return spec.log_scale ? spec.lo * std::exp(t * std::log(spec.hi / spec.lo))
                              : spec.lo + t * (spec.hi - spec.lo);
    };

    const bool gm = spec.model.model == "gm-discrete" || spec.model.model == "gm-continuous";
    std::vector<fadcap::CapacityResult> caps(spec.count);
    Columns cols;
    std::string label;
    if (spec.param == "P") {
        const EvalModel e = build_model(spec.model);
        label = e.label;
        cols.header = "P,c_p,i_of_p,u_p,coherent";
        cols.row = [&, e](int i, double x) {
            caps[i] = e.capacity(x, spec.quad_tol);
            const auto& r = caps[i];
            check_capacity_row(r, "this P");
            return fmt12(x) + "," + fmt12(r.c_p) + "," + fmt12(r.i_of_p) + "," + fmt12(r.u_p) +
                   ",1";
        };
    } else if (spec.param == "rho") {
        if (!gm) throw fadcap::domain_error("sweep: rho sweeps need a Gauss-Markov model");
        const auto domain = spec.model.model == "gm-discrete" ? fadcap::TimeDomain::discrete
                                                              : fadcap::TimeDomain::continuous;
        label = spec.model.model + " (rho swept)";
        cols.header = "rho,c_p,i_of_p,u_p,coherent";
        cols.row = [&, domain](int i, double x) {
            const auto m = fadcap::SpectralModel::gauss_markov(x, domain);
            caps[i] = fadcap::cap_per_unit_energy(m, spec.fixed_P, spec.quad_tol);
            const auto& r = caps[i];
            check_capacity_row(r, "this rho");
            return fmt12(x) + "," + fmt12(r.c_p) + "," + fmt12(r.i_of_p) + "," + fmt12(r.u_p) +
                   ",1";
        };
    } else if (spec.param == "T") {
        if (spec.model.model != "block")
            throw fadcap::domain_error("sweep: T sweeps need the block model");
        label = "block (T swept)";
        cols.header = "T,c_p,i_of_p,u_p,coherent";
        cols.row = [&](int i, double x) {
            const auto m = fadcap::SpectralModel::block_fading(x);
            caps[i] = fadcap::cap_per_unit_energy(m, spec.fixed_P, spec.quad_tol);
            const auto& r = caps[i];
            check_capacity_row(r, "this T");
            return fmt12(x) + "," + fmt12(r.c_p) + "," + fmt12(r.i_of_p) + "," + fmt12(r.u_p) +
                   ",1";
        };
    } else {
        if (!(spec.beta >= 1.0) || !std::isfinite(spec.beta))
            throw fadcap::domain_error("sweep: --beta must be >= 1 and finite");
        const EvalModel e = build_model(spec.model);
        label = e.label;
        cols.header = "p_avg,coherent_bound,energy_bound,fourthegy_bound";
        cols.row = [&, e](int i, double x) {
            caps[i] = e.capacity(spec.beta * x, spec.quad_tol);
            const auto& r = caps[i];
            check_capacity_row(r, "this p_avg");
            const double energy = x * r.c_p;
            const double fourthegy = x == 0.0 ? 0.0 : x * r.u_p;
            if (energy > x * (1.0 + 1e-9))
                throw fadcap::error("sweep: energy bound exceeds the coherent bound");
            return fmt12(x) + "," + fmt12(x) + "," + fmt12(energy) + "," + fmt12(fourthegy);
        };
    }

    // grid points run concurrently, rows land in grid order
    std::vector<std::string> lines(spec.count);
    std::atomic<int> next{0};
    std::exception_ptr first_err;
    std::mutex err_mu;
    auto worker = [&] {
        for (int i; (i = next.fetch_add(1)) < spec.count;) {
            try {
                lines[i] = cols.row(i, grid(i));
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!first_err) first_err = std::current_exception();
            }
        }
    };
    unsigned pool = std::max(1u, std::thread::hardware_concurrency());
    pool = std::min<unsigned>(pool, spec.count);
    if (pool <= 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        for (unsigned t = 0; t < pool; ++t) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }
    if (first_err) std::rethrow_exception(first_err);

    // curve-level sanity on the columns that are monotone by theory
    std::vector<double> cp(spec.count);
    for (int i = 0; i < spec.count; ++i) cp[i] = caps[i].c_p;
    if (spec.param == "P" || spec.param == "rho" || spec.param == "T")
        check_monotone(cp, "c_p along the sweep");

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (spec.output != "-") {
        file.open(spec.output);
        if (!file) throw fadcap::domain_error("sweep: cannot open output file " + spec.output);
        out = &file;
    }
    *out << "# fadcap 1.0.0\n";
    *out << "# model: " << label << "\n";
    *out << "# sweep: param=" << spec.param << " scale=" << (spec.log_scale ? "log" : "linear")
         << " min=" << fmt12(spec.lo) << " max=" << fmt12(spec.hi) << " count=" << spec.count
         << "\n";
    *out << "# fixed: P=" << fmt12(spec.fixed_P) << " beta=" << fmt12(spec.beta)
         << " quad-tol=" << fmt12(spec.quad_tol) << "\n";
    *out << cols.header << "\n";
    for (const auto& line : lines) *out << line << "\n";
    out->flush();
    if (out == &file && !file)
        throw fadcap::domain_error("sweep: writing " + spec.output + " failed");
}

} // namespace fadcap_cli
