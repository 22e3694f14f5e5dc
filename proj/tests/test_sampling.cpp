#include <array>
#include <cmath>
#include <vector>

#include <doctest.h>

#include "fadcap/capacity.hpp"
#include "fadcap/errors.hpp"
#include "fadcap/sampling.hpp"
#include "fadcap/spectral_model.hpp"

using namespace fadcap;

namespace {

const double pi = std::acos(-1.0);

SpectralModel gm9c() { return SpectralModel::gauss_markov(0.9, TimeDomain::continuous); }

SpectralModel triangle() {
    const double W = 0.5 * pi;
    return SpectralModel::tabulated({{-W, 0.0}, {0.0, 2.0 * pi / W}, {W, 0.0}},
                                    TimeDomain::continuous);
}

} // namespace

TEST_CASE("sinc kernel and its small-argument series") {
    CHECK(sinc(0.0) == 1.0);
    CHECK(std::fabs(sinc(pi) - 2.0 / pi) < 1e-15);
    CHECK(std::fabs(sinc(2.0 * pi)) < 1e-15);
    // the series and the direct quotient must agree across the switch
    for (double w : {1e-5, 9.9e-5, 1.01e-4, 5e-4}) {
        const double h = 0.5 * w;
        CHECK(std::fabs(sinc(w) - std::sin(h) / h) < 1e-15);
        CHECK(std::fabs(sinc(-w) - sinc(w)) == 0.0);
    }
}

TEST_CASE("band-limited spectra alias-free at the base level") {
    auto m = triangle();
    // support inside [-pi, pi] means the n = 0 term is the whole sum
    for (double w : {0.0, 0.3, 1.0, 1.5, 2.0, pi}) {
        const double direct = m.density_or_zero(w) * sinc(w) * sinc(w);
        CHECK(std::fabs(aliased_spectrum(m, 0, w) - direct) < 1e-12);
    }
    // dyadic stretch at K = 1: only the central alias contributes on [-pi, pi]
    const double w = 0.2;
    const double expect = 2.0 * m.density(2.0 * w) * sinc(w) * sinc(w);
    CHECK(std::fabs(aliased_spectrum(m, 1, w) - expect) < 1e-12);
}

TEST_CASE("aliased spectrum input validation") {
    CHECK_THROWS_AS(aliased_spectrum(gm9c(), -1, 0.0), domain_error);
    CHECK_THROWS_AS(aliased_spectrum(gm9c(), 0, 4.0), domain_error);
    CHECK_THROWS_AS(aliased_spectrum(SpectralModel::gauss_markov(0.9, TimeDomain::discrete), 0, 0.0),
                    domain_error);
    CHECK_THROWS_AS(aliased_spectrum(SpectralModel::block_fading(2.0, TimeDomain::continuous), 0, 0.0),
                    domain_error);
    CHECK_THROWS_AS(aliased_spectrum(SpectralModel::gauss_markov(0.0, TimeDomain::continuous), 0, 0.0),
                    domain_error);
}

TEST_CASE("sampled variance climbs to the full variance") {
    auto m = gm9c();
    double prev = 0.0;
    for (int K = 0; K <= 12; K += 3) {
        const double b = sampled_variance(m, K);
        CHECK(b <= 1.0 + 1e-12);
        CHECK(b >= prev - 1e-12);
        prev = b;
    }
    const double gap = 1.0 - sampled_variance(m, 12);
    CHECK(gap > 8.5e-6);
    CHECK(gap < 8.65e-6);
}

TEST_CASE("sampled information rate approaches the density route") {
    auto m = gm9c();
    const double P = 1.0;
    const double exact = 0.3656191755978962;
    CHECK(sampled_info_rate(m, 0, 0.0) == 0.0);
    // each level refines the last, so the rate climbs and never passes the
    // density-route value
    double prev = 0.0;
    for (int K : {0, 4, 8, 12}) {
        const double i = sampled_info_rate(m, K, P);
        CHECK(i >= prev - 1e-12);
        CHECK(i <= exact + 1e-8);
        prev = i;
    }
    // i_K keeps a first-order residual of the same size as the variance loss
    // 1 - b_K (it cancels against b_K in cp_kk, not here)
    const double gap = 1.0 - sampled_variance(m, 12);
    CHECK(exact - prev < 2.0 * gap);
    CHECK(exact - prev > 0.1 * gap);
}

TEST_CASE("capacity refinement converges from below the density value") {
    auto m = gm9c();
    const double P = 1.0;
    const double cp = 0.6343808244021038;
    auto r = cp_refinement(m, 12, P);
    CHECK(r.K == 12);
    CHECK(std::fabs(r.cp_kk - (r.b_k - r.i_k / P)) < 1e-15);
    CHECK(std::fabs(r.cp_kk - cp) < 1e-6);
    // coarse levels already land inside the acceptance window
    CHECK(std::fabs(cp_refinement(m, 4, P).cp_kk - cp) < 2e-3);
    CHECK_THROWS_AS(cp_refinement(m, 12, 0.0), domain_error);
}

TEST_CASE("refinement tracks the triangle spectrum too") {
    auto m = triangle();
    const double P = 2.0;
    auto q = information_rate_integral(m, P, 1e-11);
    REQUIRE(q.converged);
    const double cp = 1.0 - q.value / P;
    CHECK(std::fabs(cp_refinement(m, 10, P).cp_kk - cp) < 1e-4);
}

TEST_CASE("clarke spectrum gets a sampling limit as well") {
    auto m = SpectralModel::clarke(0.25); // support radius pi/2, band-limited
    const double P = 1.0;
    auto q = information_rate_integral(m, P, 1e-11);
    REQUIRE(q.converged);
    const double cp = 1.0 - q.value / P;
    CHECK(std::fabs(cp_refinement(m, 10, P).cp_kk - cp) < 1e-4);
    CHECK(sampled_variance(m, 10) <= 1.0 + 1e-12);
}
