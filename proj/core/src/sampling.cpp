#include "fadcap/sampling.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "fadcap/errors.hpp"
#include "fadcap/quadrature.hpp"

namespace fadcap {
namespace {

constexpr double pi = 3.14159265358979323846264338327950288;

void check_level(int K, const char* who) {
    if (K < 0 || K > 40)
        throw domain_error(std::string(who) + ": resolution level K must lie in 0..40");
}

void check_continuous(const SpectralModel& m, const char* who) {
    if (m.domain() != TimeDomain::continuous || !m.has_density())
        throw domain_error(std::string(who) + ": continuous model with a density required");
}

// Truncation index: with S(x) <= c2/x^2 past `from`, every summand beyond N
// obeys 2^K S(2^K(w - 2 pi n)) sinc^2(w - 2 pi n) <= 4 c2 / (2^K pi^4 (2n-1)^4),
// so the two-sided tail is <= 4 c2 / (3 2^K pi^4 (2N-1)^3) < 1e-12. Compactly
// supported spectra (c2 = 0) only need the reach condition, which makes every
// neglected term exactly zero.
int aliasing_terms(const SpectralModel& m, int K) {
    double c2 = 0.0, from = 0.0;
    if (!m.quadratic_tail(c2, from))
        throw domain_error("aliased_spectrum: model carries no spectral tail certificate");
    const double scale = std::ldexp(1.0, K);
    int n = 0;
    while (scale * pi * (2.0 * n + 1.0) < from) ++n;
    if (c2 > 0.0) {
        const double pi4 = pi * pi * pi * pi;
        const double need = std::cbrt(4.0 * c2 / (3.0 * scale * pi4 * 1e-12));
        n = std::max(n, static_cast<int>(std::ceil((need + 1.0) / 2.0)));
        n = std::max(n, 1);
    }
    return n;
}

} // namespace

double sinc(double omega) {
    const double h = 0.5 * omega;
    if (std::fabs(omega) < 1e-4) {
        const double h2 = h * h;
        return 1.0 - h2 / 6.0 + h2 * h2 / 120.0;
    }
    return std::sin(h) / h;
}

double aliased_spectrum(const SpectralModel& m, int K, double omega) {
    check_continuous(m, "aliased_spectrum");
    check_level(K, "aliased_spectrum");
    if (!(omega >= -pi && omega <= pi))
        throw domain_error("aliased_spectrum: omega must lie in [-pi, pi]");
    const int N = aliasing_terms(m, K);
    const double scale = std::ldexp(1.0, K);
    double sum = 0.0;
    for (int n = -N; n <= N; ++n) {
        const double u = omega - 2.0 * pi * n;
        const double c = sinc(u);
        sum += scale * m.density_or_zero(scale * u) * c * c;
    }
    return sum;
}

double sampled_variance(const SpectralModel& m, int K) {
    check_continuous(m, "sampled_variance");
    check_level(K, "sampled_variance");
    const double inv = std::ldexp(1.0, -K);
    QuadResult q = m.integrate(
        [inv](double w, double s) {
            const double c = sinc(w * inv);
            return s * c * c;
        },
        1e-11);
    if (!q.converged) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "sampled_variance: quadrature reached %.3e only", q.error);
        throw quadrature_error(buf, q.error);
    }
    return q.value;
}

double sampled_info_rate(const SpectralModel& m, int K, PeakConstraint P) {
    check_continuous(m, "sampled_info_rate");
    check_level(K, "sampled_info_rate");
    if (std::isnan(P) || P < 0.0 || !std::isfinite(P))
        throw domain_error("sampled_info_rate: P must be finite and nonnegative");
    if (P == 0.0) return 0.0;
    const int N = aliasing_terms(m, K);
    const double scale = std::ldexp(1.0, K);
    const double inv = 1.0 / scale;
    const double B = pi * scale;

    // integrand in u = 2^K omega; the n-th aliasing term is centered at
    // u = 2 pi n 2^K and carries the unscaled spectrum shape
    auto stretched = [&](double u) {
        double acc = 0.0;
        for (int n = -N; n <= N; ++n) {
            const double x = u - 2.0 * pi * n * scale;
            const double c = sinc(x * inv);
            acc += m.density_or_zero(x) * c * c;
        }
        return std::log1p(P * acc) / (2.0 * pi);
    };

    std::vector<double> bp = {-B, 0.0, B};
    auto add = [&](double u) {
        if (u > -B && u < B) bp.push_back(u);
    };
    if (m.kind() == Kind::gauss_markov_continuous) {
        const double lam = -std::log(m.rho());
        for (double f : {1.0, 8.0, 64.0}) {
            add(f * lam);
            add(-f * lam);
        }
    } else {
        const double R = m.support_radius();
        for (int n = -N; n <= N; ++n) {
            add(2.0 * pi * n * scale + R);
            add(2.0 * pi * n * scale - R);
        }
    }
    QuadResult q = gk_adaptive(stretched, std::move(bp), 1e-10);
    if (!q.converged) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "sampled_info_rate: quadrature reached %.3e only",
                      q.error);
        throw quadrature_error(buf, q.error);
    }
    return q.value;
}

SamplingLimit cp_refinement(const SpectralModel& m, int K, PeakConstraint P) {
    if (std::isnan(P) || !(P > 0.0) || !std::isfinite(P))
        throw domain_error("cp_refinement: P must be positive and finite");
    SamplingLimit r;
    r.K = K;
    r.b_k = sampled_variance(m, K);
    r.i_k = sampled_info_rate(m, K, P);
    r.cp_kk = r.b_k - r.i_k / P;
    return r;
}

} // namespace fadcap
