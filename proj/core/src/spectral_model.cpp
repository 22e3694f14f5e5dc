#include "fadcap/spectral_model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "fadcap/errors.hpp"

namespace fadcap {
namespace {

constexpr double pi = 3.14159265358979323846264338327950288;

long long integer_lag(double lag) {
    const double r = std::nearbyint(lag);
    if (std::fabs(lag - r) > 1e-9)
        throw domain_error("discrete-time autocorrelation takes integer lags");
    return static_cast<long long>(r);
}

} // namespace

SpectralModel SpectralModel::white() {
    SpectralModel m;
    m.kind_ = Kind::white;
    m.domain_ = TimeDomain::discrete;
    return m;
}

SpectralModel SpectralModel::gauss_markov(double rho, TimeDomain domain) {
    if (!(rho >= 0.0) || rho >= 1.0)
        throw domain_error("gauss_markov: rho must lie in [0, 1)");
    SpectralModel m;
    m.kind_ = domain == TimeDomain::discrete ? Kind::gauss_markov_discrete
                                             : Kind::gauss_markov_continuous;
    m.domain_ = domain;
    m.rho_ = rho;
    return m;
}

SpectralModel SpectralModel::clarke(double f_m) {
    if (!(f_m > 0.0) || !std::isfinite(f_m))
        throw domain_error("clarke: f_m must be positive and finite");
    SpectralModel m;
    m.kind_ = Kind::clarke;
    m.domain_ = TimeDomain::continuous;
    m.f_m_ = f_m;
    return m;
}

SpectralModel SpectralModel::block_fading(double T, TimeDomain domain) {
    if (!(T > 0.0) || !std::isfinite(T))
        throw domain_error("block_fading: T must be positive and finite");
    SpectralModel m;
    m.kind_ = Kind::block_fading;
    m.domain_ = domain;
    m.block_T_ = T;
    return m;
}

SpectralModel SpectralModel::tabulated(std::vector<std::array<double, 2>> samples,
                                       TimeDomain domain, bool renormalize) {
    if (samples.size() < 2)
        throw domain_error("tabulated: need at least two samples");
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (!std::isfinite(samples[i][0]) || !std::isfinite(samples[i][1]))
            throw domain_error("tabulated: non-finite sample");
        if (samples[i][1] < 0.0)
            throw domain_error("tabulated: negative density sample");
        if (i > 0 && !(samples[i][0] > samples[i - 1][0]))
            throw domain_error("tabulated: frequencies must be strictly increasing");
    }
    if (domain == TimeDomain::discrete) {
        if (samples.front()[0] < -pi - 1e-9 || samples.back()[0] > pi + 1e-9)
            throw domain_error("tabulated: discrete table must lie inside [-pi, pi]");
        samples.front()[0] = std::max(samples.front()[0], -pi);
        samples.back()[0] = std::min(samples.back()[0], pi);
    }
    // Trapezoid rule is exact for the piecewise-linear interpolant, so the
    // variance check is exact arithmetic, not a quadrature estimate.
    double integral = 0.0;
    for (std::size_t i = 0; i + 1 < samples.size(); ++i)
        integral += (samples[i + 1][0] - samples[i][0]) * (samples[i][1] + samples[i + 1][1]) / 2.0;
    const double variance = integral / (2.0 * pi);
    SpectralModel m;
    m.kind_ = domain == TimeDomain::discrete ? Kind::tabulated_discrete : Kind::tabulated_continuous;
    m.domain_ = domain;
    if (renormalize) {
        if (!(variance > 0.0))
            throw domain_error("tabulated: cannot renormalize an all-zero table");
        m.scale_ = 1.0 / variance;
        for (auto& s : samples) s[1] *= m.scale_;
    } else if (std::fabs(variance - 1.0) > 1e-9) {
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "tabulated: table integrates to %.12g, not 1; pass renormalize to rescale",
                      variance);
        throw domain_error(buf);
    }
    m.table_ = std::move(samples);
    return m;
}

std::vector<std::array<double, 2>> parse_spectrum_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open spectrum table: " + path);
    std::vector<std::array<double, 2>> rows;
    std::string line;
    bool first_data_line = true;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        for (char& c : line)
            if (c == ',' || c == ';' || c == '\t') c = ' ';
        std::istringstream ss(line);
        double f, s;
        std::string extra;
        if (!(ss >> f)) {
            ss.clear();
            std::string word;
            if (!(ss >> word)) continue; // blank line
            if (first_data_line) {       // optional header line
                first_data_line = false;
                continue;
            }
            throw domain_error("spectrum table " + path + ": unparsable line " +
                               std::to_string(lineno));
        }
        if (!(ss >> s) || (ss >> extra))
            throw domain_error("spectrum table " + path + ": expected two columns at line " +
                               std::to_string(lineno));
        first_data_line = false;
        rows.push_back({f, s});
    }
    return rows;
}

SpectralModel SpectralModel::tabulated_from_file(const std::string& path,
                                                 TimeDomain domain, bool renormalize) {
    return tabulated(parse_spectrum_table(path), domain, renormalize);
}

std::string SpectralModel::name() const {
    char buf[96];
    switch (kind_) {
    case Kind::white: return "white";
    case Kind::gauss_markov_discrete:
        std::snprintf(buf, sizeof buf, "gm-discrete rho=%.12g", rho_);
        return buf;
    case Kind::gauss_markov_continuous:
        std::snprintf(buf, sizeof buf, "gm-continuous rho=%.12g", rho_);
        return buf;
    case Kind::clarke:
        std::snprintf(buf, sizeof buf, "clarke fm=%.12g", f_m_);
        return buf;
    case Kind::block_fading:
        std::snprintf(buf, sizeof buf, "block T=%.12g", block_T_);
        return buf;
    case Kind::tabulated_discrete: return "table-discrete";
    case Kind::tabulated_continuous: return "table-continuous";
    }
    return "?";
}

bool SpectralModel::has_density() const {
    if (kind_ == Kind::block_fading) return false;
    if (kind_ == Kind::gauss_markov_continuous && rho_ == 0.0) return false;
    return true;
}

double SpectralModel::density(double omega) const {
    switch (kind_) {
    case Kind::white:
        if (omega < -pi || omega >= pi)
            throw domain_error("density: discrete model defined on [-pi, pi)");
        return 1.0;
    case Kind::gauss_markov_discrete: {
        if (omega < -pi || omega >= pi)
            throw domain_error("density: discrete model defined on [-pi, pi)");
        const double s = std::sin(0.5 * omega);
        // (1-rho)^2 + 4 rho sin^2(w/2) keeps precision as rho -> 1
        return (1.0 - rho_) * (1.0 + rho_) / ((1.0 - rho_) * (1.0 - rho_) + 4.0 * rho_ * s * s);
    }
    case Kind::gauss_markov_continuous: {
        if (rho_ == 0.0)
            throw domain_error("density: continuous rho=0 limit has no spectral density");
        const double lam = -std::log(rho_);
        return 2.0 * lam / (omega * omega + lam * lam);
    }
    case Kind::clarke: {
        const double edge = 2.0 * pi * f_m_;
        if (std::fabs(omega) >= edge) return 0.0;
        const double r = omega / edge;
        return 1.0 / (pi * f_m_ * std::sqrt(1.0 - r * r));
    }
    case Kind::block_fading:
        throw domain_error("density: block fading is parameterized by T and has no density");
    case Kind::tabulated_discrete:
    case Kind::tabulated_continuous: {
        if (omega < table_.front()[0] || omega > table_.back()[0])
            throw domain_error("density: query outside tabulated range");
        auto it = std::upper_bound(table_.begin(), table_.end(), omega,
                                   [](double w, const std::array<double, 2>& r) { return w < r[0]; });
        if (it == table_.begin()) return table_.front()[1];
        if (it == table_.end()) return table_.back()[1];
        const auto& hi = *it;
        const auto& lo = *(it - 1);
        const double t = (omega - lo[0]) / (hi[0] - lo[0]);
        return lo[1] + t * (hi[1] - lo[1]);
    }
    }
    throw domain_error("density: unknown model kind");
}

double SpectralModel::density_or_zero(double omega) const {
    switch (kind_) {
    case Kind::white:
    case Kind::gauss_markov_discrete:
        return omega < -pi || omega >= pi ? 0.0 : density(omega);
    case Kind::gauss_markov_continuous:
    case Kind::clarke:
        return density(omega); // full-line support, or already 0 past the edge
    case Kind::tabulated_discrete:
    case Kind::tabulated_continuous:
        return omega < table_.front()[0] || omega > table_.back()[0] ? 0.0 : density(omega);
    case Kind::block_fading:
        break;
    }
    throw domain_error("density_or_zero: model has no density");
}

std::complex<double> SpectralModel::autocorrelation_c(double lag) const {
    switch (kind_) {
    case Kind::white:
        return integer_lag(lag) == 0 ? 1.0 : 0.0;
    case Kind::gauss_markov_discrete: {
        const long long k = std::llabs(integer_lag(lag));
        if (k == 0) return 1.0;
        return rho_ == 0.0 ? 0.0 : std::pow(rho_, static_cast<double>(k));
    }
    case Kind::gauss_markov_continuous: {
        const double t = std::fabs(lag);
        if (t == 0.0) return 1.0;
        return rho_ == 0.0 ? 0.0 : std::exp(t * std::log(rho_));
    }
    case Kind::clarke:
        return std::cyl_bessel_j(0.0, std::fabs(2.0 * pi * f_m_ * lag));
    case Kind::block_fading: {
        // correlation averaged over the block phase (triangular window)
        const double t = std::fabs(lag);
        if (domain_ == TimeDomain::discrete) (void)integer_lag(lag);
        return std::max(0.0, 1.0 - t / block_T_);
    }
    case Kind::tabulated_discrete:
    case Kind::tabulated_continuous: {
        if (domain_ == TimeDomain::discrete) (void)integer_lag(lag);
        const double l = lag;
        QuadResult re = integrate([l](double w, double s) { return s * std::cos(w * l); }, 1e-11);
        QuadResult im = integrate([l](double w, double s) { return s * std::sin(w * l); }, 1e-11);
        if (!re.converged || !im.converged)
            throw quadrature_error("autocorrelation: tabulated transform did not converge",
                                   re.error + im.error);
        return {re.value, im.value};
    }
    }
    throw domain_error("autocorrelation: unknown model kind");
}

double SpectralModel::autocorrelation(double lag) const {
    const std::complex<double> r = autocorrelation_c(lag);
    if (std::fabs(r.imag()) > 1e-9 * std::max(1.0, std::fabs(r.real())))
        throw domain_error("autocorrelation: asymmetric table gives a complex value; "
                           "use autocorrelation_c");
    return r.real();
}

double SpectralModel::support_radius() const {
    switch (kind_) {
    case Kind::white:
    case Kind::gauss_markov_discrete: return pi;
    case Kind::gauss_markov_continuous: return rho_ == 0.0 ? 0.0 : infinite;
    case Kind::clarke: return 2.0 * pi * f_m_;
    case Kind::block_fading:
        throw domain_error("support_radius: block fading has no density");
    case Kind::tabulated_discrete:
    case Kind::tabulated_continuous:
        return std::max(std::fabs(table_.front()[0]), std::fabs(table_.back()[0]));
    }
    throw domain_error("support_radius: unknown model kind");
}

bool SpectralModel::quadratic_tail(double& c2, double& from) const {
    switch (kind_) {
    case Kind::gauss_markov_continuous:
        if (rho_ == 0.0) return false;
        c2 = -2.0 * std::log(rho_); // S(x) = c2/(x^2 + log^2 rho) <= c2/x^2
        from = 0.0;
        return true;
    case Kind::clarke:
    case Kind::tabulated_continuous:
    case Kind::tabulated_discrete:
        c2 = 0.0; // compactly supported: nothing beyond the edge
        from = support_radius();
        return true;
    default:
        return false;
    }
}

QuadResult SpectralModel::integrate(const std::function<double(double, double)>& g,
                                    double abs_tol, double cut) const {
    switch (kind_) {
    case Kind::white: {
        const double w = std::min(pi, cut);
        auto f = [&](double omega) { return g(omega, 1.0) / (2.0 * pi); };
        return gk_adaptive(f, {-w, 0.0, w}, abs_tol);
    }
    case Kind::gauss_markov_discrete: {
        const double w = std::min(pi, cut);
        auto f = [&](double omega) { return g(omega, density(omega)) / (2.0 * pi); };
        std::vector<double> bp = {-w, 0.0, w};
        // seed panels at the scale of the spectral peak, which narrows as rho -> 1
        for (double m : {1.0, 8.0, 64.0}) {
            const double x = m * (1.0 - rho_);
            if (x < w) {
                bp.push_back(x);
                bp.push_back(-x);
            }
        }
        return gk_adaptive(f, std::move(bp), abs_tol);
    }
    case Kind::gauss_markov_continuous: {
        if (rho_ == 0.0)
            throw domain_error("integrate: continuous rho=0 limit has no spectral density");
        const double lam = -std::log(rho_);
        // omega = lam tan(u): S becomes (2/lam) cos^2(u) and the line maps to
        // (-pi/2, pi/2) with weight lam sec^2(u); decaying integrands stay
        // bounded at the ends.
        auto f = [&](double u) {
            const double c = std::cos(u);
            const double omega = lam * std::tan(u);
            const double s = (2.0 / lam) * c * c;
            return g(omega, s) * lam / (2.0 * pi * c * c);
        };
        double u_max = pi / 2;
        if (std::isfinite(cut)) u_max = std::atan(cut / lam);
        return gk_adaptive(f, {-u_max, -pi / 4, 0.0, pi / 4, u_max}, abs_tol);
    }
    case Kind::clarke: {
        // f = f_m sin(theta) absorbs the inverse-square-root edge singularity
        const double edge = 2.0 * pi * f_m_;
        auto f = [&](double th) {
            const double c = std::cos(th);
            return f_m_ * c * g(edge * std::sin(th), 1.0 / (pi * f_m_ * c));
        };
        double t_max = pi / 2;
        if (cut < edge) t_max = std::asin(cut / edge);
        return gk_adaptive(f, {-t_max, -t_max / 2, 0.0, t_max / 2, t_max}, abs_tol);
    }
    case Kind::block_fading:
        throw domain_error("integrate: block fading has no density");
    case Kind::tabulated_discrete:
    case Kind::tabulated_continuous: {
        const double lo = std::max(table_.front()[0], -cut);
        const double hi = std::min(table_.back()[0], cut);
        if (!(lo < hi)) return {0.0, 0.0, true, 0};
        std::vector<double> bp = {lo, hi};
        for (const auto& r : table_)
            if (r[0] > lo && r[0] < hi) bp.push_back(r[0]);
        auto f = [&](double omega) { return g(omega, density(omega)) / (2.0 * pi); };
        return gk_adaptive(f, std::move(bp), abs_tol);
    }
    }
    throw domain_error("integrate: unknown model kind");
}

} // namespace fadcap
