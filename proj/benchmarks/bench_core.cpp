#include <benchmark/benchmark.h>

#include "fadcap/capacity.hpp"
#include "fadcap/sampling.hpp"
#include "fadcap/spectral_model.hpp"
#include "fadcap/toeplitz.hpp"

using namespace fadcap;

namespace {

SpectralModel gm_d() { return SpectralModel::gauss_markov(0.9, TimeDomain::discrete); }
SpectralModel gm_c() { return SpectralModel::gauss_markov(0.9, TimeDomain::continuous); }

void BM_LevinsonRate(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto g = build_gram(gm_d(), n);
    for (auto _ : state)
        benchmark::DoNotOptimize(log_det_rate(g, 1.0, LogDetMethod::levinson));
    state.SetComplexityN(n);
}
BENCHMARK(BM_LevinsonRate)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_CholeskyRate(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto g = build_gram(gm_d(), n);
    for (auto _ : state)
        benchmark::DoNotOptimize(log_det_rate(g, 1.0, LogDetMethod::cholesky));
    state.SetComplexityN(n);
}
BENCHMARK(BM_CholeskyRate)->RangeMultiplier(4)->Range(64, 1024)->Complexity();

void BM_InfoRateQuadrature(benchmark::State& state) {
    auto m = gm_c();
    for (auto _ : state)
        benchmark::DoNotOptimize(information_rate_integral(m, 1.0, 1e-10).value);
}
BENCHMARK(BM_InfoRateQuadrature);

void BM_SubsetSearch(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto m = gm_d();
    for (auto _ : state)
        benchmark::DoNotOptimize(subset_search(m, 1.0, n).min_rate);
}
BENCHMARK(BM_SubsetSearch)->DenseRange(10, 16, 2);

void BM_CpRefinement(benchmark::State& state) {
    const int K = static_cast<int>(state.range(0));
    auto m = gm_c();
    for (auto _ : state)
        benchmark::DoNotOptimize(cp_refinement(m, K, 1.0).cp_kk);
}
BENCHMARK(BM_CpRefinement)->DenseRange(2, 10, 4);

} // namespace

BENCHMARK_MAIN();
