#include <benchmark/benchmark.h>

#include <random>

#include "ldaroc/empirical.hpp"
#include "ldaroc/gauss.hpp"
#include "ldaroc/roc.hpp"
#include "ldaroc/symmat.hpp"

using namespace ldaroc;

namespace {

LdaModel model_of_dim(std::size_t n) {
    std::mt19937_64 rng(n);
    std::normal_distribution<double> z;
    std::vector<double> a(n * n);
    for (double& v : a) v = z(rng);
    std::vector<double> s(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) s[i * n + j] += a[i * n + k] * a[j * n + k];
            if (i == j) s[i * n + j] += 1.0;
        }
    Vector mu0(n, 0.0), mu1(n);
    for (double& v : mu1) v = z(rng);
    return LdaModel::from_params(mu0, mu1, SymMatrix::from_row_major(n, s));
}

void BM_NormalCdf(benchmark::State& state) {
    double x = -6.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(std_normal_cdf(x));
        x = x > 6.0 ? -6.0 : x + 1e-3;
    }
}
BENCHMARK(BM_NormalCdf);

void BM_NormalQuantile(benchmark::State& state) {
    double p = 1e-6;
    for (auto _ : state) {
        benchmark::DoNotOptimize(std_normal_quantile(p));
        p = p > 0.999 ? 1e-6 : p + 1e-4;
    }
}
BENCHMARK(BM_NormalQuantile);

void BM_Auc(benchmark::State& state) {
    const LdaModel m = model_of_dim(3);
    for (auto _ : state) benchmark::DoNotOptimize(auc(m));
}
BENCHMARK(BM_Auc);

void BM_ConfusionAt(benchmark::State& state) {
    const LdaModel m = model_of_dim(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(confusion_at(m, 0.3));
}
BENCHMARK(BM_ConfusionAt)->Arg(2)->Arg(16)->Arg(64);

void BM_Spectral(benchmark::State& state) {
    const LdaModel m = model_of_dim(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(spectral(m.sigma()));
}
BENCHMARK(BM_Spectral)->Arg(4)->Arg(16)->Arg(64);

void BM_SampleRoc(benchmark::State& state) {
    const LdaModel m = model_of_dim(3);
    for (auto _ : state) benchmark::DoNotOptimize(sample_roc(m, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_SampleRoc)->Arg(256)->Arg(10000);

void BM_McConfusion(benchmark::State& state) {
    const LdaModel m = model_of_dim(4);
    const auto threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(mc_confusion(m, 0.0, 100000, 1, threads));
}
BENCHMARK(BM_McConfusion)->Arg(1)->Arg(4)->UseRealTime();

}  // namespace
BENCHMARK_MAIN();
