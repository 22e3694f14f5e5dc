#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "fadcap/errors.hpp"
#include "fadcap/spectral_model.hpp"

using fadcap::SpectralModel;
using fadcap::TimeDomain;

namespace {

const double pi = std::acos(-1.0);

double variance(const SpectralModel& m) {
    auto r = m.integrate([](double, double s) { return s; });
    REQUIRE(r.converged);
    return r.value;
}

// Triangular spectrum on [-W, W] scaled to unit variance; its exact
// autocorrelation is 2 (1 - cos(W t)) / (W t)^2.
std::vector<std::array<double, 2>> triangle_table(double W) {
    return {{-W, 0.0}, {0.0, 2.0 * pi / W}, {W, 0.0}};
}

std::string write_temp(const char* name, const char* text) {
    std::string path = std::string("/tmp/") + name;
    std::ofstream out(path);
    out << text;
    return path;
}

} // namespace

TEST_CASE("white spectrum") {
    auto m = SpectralModel::white();
    CHECK(m.density(0.0) == 1.0);
    CHECK(m.density(-pi) == 1.0);
    CHECK_THROWS_AS((void)m.density(pi), fadcap::domain_error);
    CHECK(m.density_or_zero(10.0) == 0.0);
    CHECK(m.autocorrelation(0) == 1.0);
    CHECK(m.autocorrelation(3) == 0.0);
    CHECK_THROWS_AS((void)m.autocorrelation(0.5), fadcap::domain_error);
    CHECK(std::fabs(variance(m) - 1.0) < 1e-12);
}

TEST_CASE("discrete Gauss-Markov spectrum") {
    auto m = SpectralModel::gauss_markov(0.9, TimeDomain::discrete);
    // (1 - rho^2) / (1 - 2 rho cos w + rho^2) at w = 0 and w = pi
    CHECK(std::fabs(m.density(0.0) - 19.0) < 1e-12);
    CHECK(std::fabs(m.density(-pi) - 0.19 / 3.61) < 1e-15);
    CHECK(std::fabs(m.autocorrelation(4) - 0.6561) < 1e-15);
    CHECK(std::fabs(variance(m) - 1.0) < 1e-10);
    CHECK(m.support_radius() == pi);

    CHECK_THROWS_AS(SpectralModel::gauss_markov(1.0, TimeDomain::discrete),
                    fadcap::domain_error);
    CHECK_THROWS_AS(SpectralModel::gauss_markov(-0.1, TimeDomain::discrete),
                    fadcap::domain_error);
    CHECK(SpectralModel::gauss_markov(0.0, TimeDomain::discrete).density(1.0) == 1.0);
}

TEST_CASE("continuous Gauss-Markov spectrum") {
    auto m = SpectralModel::gauss_markov(0.9, TimeDomain::continuous);
    const double lam = -std::log(0.9);
    CHECK(std::fabs(m.density(0.0) - 2.0 / lam) < 1e-12);
    CHECK(std::fabs(m.density(0.0) - 18.982443162059806) < 1e-12);
    CHECK(std::fabs(m.autocorrelation(2.5) - std::pow(0.9, 2.5)) < 1e-15);
    CHECK(std::fabs(variance(m) - 1.0) < 1e-10);
    CHECK(m.support_radius() == fadcap::infinite);

    double c2 = 0, from = 0;
    REQUIRE(m.quadratic_tail(c2, from));
    // S(x) = 2 lam / (x^2 + lam^2) <= c2 / x^2 must hold from the cutoff on
    CHECK(m.density(2.0 * from) <= c2 / (4.0 * from * from));
}

TEST_CASE("continuous rho=0 is the memoryless limit without a density") {
    auto m = SpectralModel::gauss_markov(0.0, TimeDomain::continuous);
    CHECK(!m.has_density());
    CHECK_THROWS_AS((void)m.density(0.0), fadcap::domain_error);
    CHECK(m.autocorrelation(0.0) == 1.0);
    CHECK(m.autocorrelation(1e-9) == 0.0);
}

TEST_CASE("Clarke spectrum") {
    auto m = SpectralModel::clarke(10.0);
    const double edge = 2.0 * pi * 10.0;
    CHECK(std::fabs(m.density(0.0) - 1.0 / (pi * 10.0)) < 1e-15);
    CHECK(m.density(edge) == 0.0);
    CHECK(m.density(-2.0 * edge) == 0.0);
    CHECK(m.support_radius() == edge);
    // R(t) = J0(2 pi f_m t); the integrable edge singularity still integrates
    // to unit variance through the f = f_m sin(theta) substitution.
    CHECK(std::fabs(m.autocorrelation(0.05) - std::cyl_bessel_j(0.0, pi)) < 1e-12);
    CHECK(std::fabs(variance(m) - 1.0) < 1e-10);
    CHECK_THROWS_AS(SpectralModel::clarke(0.0), fadcap::domain_error);
}

TEST_CASE("block fading has no spectral density") {
    auto m = SpectralModel::block_fading(4.0);
    CHECK(!m.has_density());
    CHECK_THROWS_AS((void)m.density(0.0), fadcap::domain_error);
    CHECK(m.autocorrelation(0) == 1.0);
    CHECK(std::fabs(m.autocorrelation(1) - 0.75) < 1e-15);
    CHECK(m.autocorrelation(4) == 0.0);
    CHECK(m.autocorrelation(9) == 0.0);
    CHECK_THROWS_AS(SpectralModel::block_fading(0.0), fadcap::domain_error);
}

TEST_CASE("tabulated triangle spectrum matches its closed forms") {
    const double W = 0.5 * pi;
    auto m = SpectralModel::tabulated(triangle_table(W), TimeDomain::continuous);
    CHECK(std::fabs(m.density(0.0) - 4.0) < 1e-12);
    CHECK(std::fabs(m.density(0.25 * pi) - 2.0) < 1e-12);
    CHECK(m.density_or_zero(2.0) == 0.0);
    CHECK_THROWS_AS((void)m.density(2.0), fadcap::domain_error);
    CHECK(std::fabs(variance(m) - 1.0) < 1e-10);
    CHECK(m.support_radius() == W);

    // second moment of the triangle: 4 pi / (3 W)
    auto e2 = m.integrate([](double, double s) { return s * s; });
    REQUIRE(e2.converged);
    CHECK(std::fabs(e2.value - 8.0 / 3.0) < 1e-9);

    for (double t : {0.5, 1.0, 3.0}) {
        const double exact = 2.0 * (1.0 - std::cos(W * t)) / (W * t * W * t);
        CHECK(std::fabs(m.autocorrelation(t) - exact) < 1e-9);
    }

    // the same table is legal in discrete time and takes integer lags there
    auto d = SpectralModel::tabulated(triangle_table(W), TimeDomain::discrete);
    const double exact1 = 2.0 * (1.0 - std::cos(W)) / (W * W);
    CHECK(std::fabs(d.autocorrelation(1) - exact1) < 1e-9);
    CHECK_THROWS_AS((void)d.autocorrelation(0.5), fadcap::domain_error);
}

TEST_CASE("tabulated rejects malformed tables") {
    using tab = std::vector<std::array<double, 2>>;
    CHECK_THROWS_AS(SpectralModel::tabulated(tab{{0.0, 1.0}}, TimeDomain::continuous),
                    fadcap::domain_error);
    CHECK_THROWS_AS(
        SpectralModel::tabulated(tab{{0.0, 1.0}, {0.0, 2.0}, {1.0, 1.0}}, TimeDomain::continuous),
        fadcap::domain_error);
    CHECK_THROWS_AS(
        SpectralModel::tabulated(tab{{-1.0, 1.0}, {0.0, -0.5}, {1.0, 1.0}}, TimeDomain::continuous),
        fadcap::domain_error);
    // unit-variance check: trapezoid integral must be 2 pi unless renormalizing
    CHECK_THROWS_AS(SpectralModel::tabulated(tab{{-1.0, 1.0}, {1.0, 1.0}}, TimeDomain::continuous),
                    fadcap::domain_error);
    // discrete tables must fit inside [-pi, pi]
    CHECK_THROWS_AS(SpectralModel::tabulated(triangle_table(4.0), TimeDomain::discrete),
                    fadcap::domain_error);
    CHECK_NOTHROW(SpectralModel::tabulated(triangle_table(4.0), TimeDomain::continuous));
}

TEST_CASE("renormalization records the applied scale") {
    const double W = 0.5 * pi;
    auto t = triangle_table(W);
    for (auto& row : t) row[1] *= 2.0; // integral 4 pi instead of 2 pi
    CHECK_THROWS_AS(SpectralModel::tabulated(t, TimeDomain::continuous), fadcap::domain_error);
    auto m = SpectralModel::tabulated(t, TimeDomain::continuous, true);
    CHECK(std::fabs(m.applied_scale() - 0.5) < 1e-12);
    CHECK(std::fabs(m.density(0.0) - 4.0) < 1e-12);
    CHECK(std::fabs(variance(m) - 1.0) < 1e-10);
}

TEST_CASE("spectrum files accept comments, headers and either separator") {
    auto path = write_temp("fadcap_table_ok.txt",
                           "# triangular test spectrum\n"
                           "freq density\n"
                           "-1.5707963267948966, 0\n"
                           "0 4\n"
                           "\n"
                           "1.5707963267948966\t0 # edge\n");
    auto rows = fadcap::parse_spectrum_table(path);
    REQUIRE(rows.size() == 3);
    CHECK(rows[1][1] == 4.0);
    auto m = SpectralModel::tabulated_from_file(path, TimeDomain::continuous);
    CHECK(std::fabs(variance(m) - 1.0) < 1e-10);
    std::remove(path.c_str());

    CHECK_THROWS_AS(fadcap::parse_spectrum_table("/tmp/fadcap_no_such_file.txt"),
                    fadcap::error);

    auto bad = write_temp("fadcap_table_bad.txt", "0 1\n1 two\n");
    CHECK_THROWS_AS(fadcap::parse_spectrum_table(bad), fadcap::domain_error);
    std::remove(bad.c_str());
}

TEST_CASE("integrate reports its achieved error") {
    auto m = SpectralModel::gauss_markov(0.9, TimeDomain::discrete);
    auto r = m.integrate([](double, double s) { return std::log1p(s); }, 1e-11);
    CHECK(r.converged);
    CHECK(r.error <= 1e-11);
    CHECK(r.evals > 0);
}
