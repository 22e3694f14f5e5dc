#include "fadcap/capacity.hpp"

#include <cmath>
#include <cstdio>

#include "fadcap/errors.hpp"

namespace fadcap {
namespace {

constexpr double pi = 3.14159265358979323846264338327950288;

void require_peak(double P, bool allow_inf) {
    if (std::isnan(P) || P < 0.0)
        throw domain_error("peak constraint must be nonnegative");
    if (!allow_inf && !std::isfinite(P))
        throw domain_error("peak constraint must be finite here");
}

[[noreturn]] void throw_quad(const char* where, const QuadResult& q) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%s: quadrature reached abs error %.3e only", where, q.error);
    throw quadrature_error(buf, q.error);
}

} // namespace

QuadResult information_rate_integral(const SpectralModel& m, PeakConstraint P, double abs_tol) {
    require_peak(P, false);
    if (m.kind() == Kind::block_fading)
        throw domain_error("information_rate_integral: block fading has no spectral density; "
                           "use block_cp_closed");
    if (m.kind() == Kind::gauss_markov_continuous && m.rho() == 0.0)
        return {P, 0.0, true, 0}; // memoryless limit of the closed form
    if (P == 0.0) return {0.0, 0.0, true, 0};
    return m.integrate([P](double, double s) { return std::log1p(P * s); }, abs_tol);
}

double spectral_energy(const SpectralModel& m) {
    switch (m.kind()) {
    case Kind::clarke:
        return infinite; // inverse-square-root edge makes S^2 non-integrable
    case Kind::block_fading:
        throw domain_error("spectral_energy: block fading has no spectral density");
    case Kind::gauss_markov_continuous:
        if (m.rho() == 0.0) return 0.0;
        break;
    default:
        break;
    }
    QuadResult q = m.integrate([](double, double s) { return s * s; }, 1e-10);
    if (!q.converged) throw_quad("spectral_energy", q);
    return q.value;
}

double upper_bound_up(const SpectralModel& m, PeakConstraint P) {
    require_peak(P, false);
    if (P == 0.0) return 0.0;
    if (m.kind() == Kind::block_fading)
        return P * m.block_length() / 2.0; // quadratic bound log(1+x) >= x - x^2/2 per block
    const double e = spectral_energy(m);
    return std::isfinite(e) ? P / 2.0 * e : infinite;
}

CapacityResult cap_per_unit_energy(const SpectralModel& m, PeakConstraint P, double abs_tol) {
    require_peak(P, true);
    CapacityResult r;
    if (P == 0.0) {
        r.limit_convention = true; // c_p -> 0 as P -> 0
        return r;
    }
    if (!std::isfinite(P)) {
        r.c_p = 1.0;
        r.i_of_p = infinite;
        r.u_p = infinite;
        r.limit_convention = true;
        return r;
    }
    if (m.kind() == Kind::block_fading) {
        const double T = m.block_length();
        r.c_p = block_cp_closed(P, T);
        r.i_of_p = std::log1p(P * T) / T;
        r.u_p = upper_bound_up(m, P);
        return r;
    }
    if (m.kind() == Kind::gauss_markov_continuous && m.rho() == 0.0) {
        r.c_p = 0.0; // infinitely fast fading: I(P) -> P
        r.i_of_p = P;
        r.u_p = 0.0;
        r.limit_convention = true;
        return r;
    }
    QuadResult iq = information_rate_integral(m, P, abs_tol);
    if (!iq.converged) throw_quad("cap_per_unit_energy", iq);
    QuadResult nq = m.integrate([](double, double s) { return s; }, abs_tol);
    r.c_p = 1.0 - iq.value / P;
    r.i_of_p = iq.value;
    r.u_p = upper_bound_up(m, P);
    r.quad_err = iq.error;
    r.norm_dev = std::fabs(nq.value - 1.0);
    return r;
}

double gauss_markov_info_rate_closed(double rho, PeakConstraint P, TimeDomain domain) {
    if (!(rho >= 0.0) || rho >= 1.0)
        throw domain_error("gauss_markov closed form: rho must lie in [0, 1)");
    require_peak(P, true);
    if (P == 0.0) return 0.0;
    if (domain == TimeDomain::discrete) {
        if (!std::isfinite(P)) return infinite;
        const double one_m_r2 = (1.0 - rho) * (1.0 + rho);
        const double b = 1.0 + P + rho * rho * (1.0 - P);
        const double disc = one_m_r2 * (one_m_r2 * (1.0 + P * P) + 2.0 * P * (1.0 + rho * rho));
        const double z = 0.5 * (b + std::sqrt(disc));
        return std::log(z);
    }
    if (rho == 0.0) return std::isfinite(P) ? P : infinite; // memoryless limit
    if (!std::isfinite(P)) return infinite;
    const double lam = -std::log(rho);
    // sqrt(lam^2 + 2 P lam) - lam, rationalized to avoid cancellation
    return 2.0 * P * lam / (std::sqrt(lam * lam + 2.0 * P * lam) + lam);
}

double gauss_markov_cp_closed(double rho, PeakConstraint P, TimeDomain domain) {
    if (!(rho >= 0.0) || rho >= 1.0)
        throw domain_error("gauss_markov closed form: rho must lie in [0, 1)");
    require_peak(P, true);
    if (P == 0.0) return 0.0;           // limit convention
    if (!std::isfinite(P)) return 1.0;  // I(P)/P -> 0
    return 1.0 - gauss_markov_info_rate_closed(rho, P, domain) / P;
}

double clarke_cp_closed(double a) {
    if (std::isnan(a) || a < 0.0)
        throw domain_error("clarke closed form: peak parameter must be nonnegative");
    if (a == 0.0) return 0.0;          // limit convention
    if (!std::isfinite(a)) return 1.0; // large-peak limit
    double g;
    if (a == 1.0) {
        g = 0.0;
    } else if (a > 1.0) {
        const double r = std::sqrt((a - 1.0) * (a + 1.0));
        g = r / a * std::acos(1.0 / a);
    } else {
        const double r = std::sqrt((1.0 - a) * (1.0 + a));
        g = -(r / a) * std::atanh(r);
    }
    return g - std::log(a / 2.0) / a + 1.0 - pi / 2.0;
}

double block_cp_closed(PeakConstraint P, double T) {
    if (!(T > 0.0) || !std::isfinite(T))
        throw domain_error("block closed form: T must be positive and finite");
    require_peak(P, true);
    if (P == 0.0) return 0.0;
    if (!std::isfinite(P)) return 1.0;
    return 1.0 - std::log1p(P * T) / (P * T);
}

double coherent_cp() { return 1.0; }

TimeBounds cap_per_unit_time_bounds(const SpectralModel& m, double p_avg, double beta,
                                    double abs_tol) {
    if (std::isnan(p_avg) || p_avg < 0.0 || !std::isfinite(p_avg))
        throw domain_error("time bounds: p_avg must be finite and nonnegative");
    if (!(beta >= 1.0) || !std::isfinite(beta))
        throw domain_error("time bounds: beta = P_peak/P_avg must be >= 1 and finite");
    const double P = beta * p_avg;
    TimeBounds b{};
    b.coherent_bound = p_avg;
    b.energy_bound = p_avg * cap_per_unit_energy(m, P, abs_tol).c_p;
    const double up = p_avg == 0.0 ? 0.0 : upper_bound_up(m, P);
    b.fourthegy_bound = std::isfinite(up) ? p_avg * up : (p_avg == 0.0 ? 0.0 : infinite);
    return b;
}

} // namespace fadcap
