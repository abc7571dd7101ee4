#include <benchmark/benchmark.h>

#include "zetaverify/bernoulli.hpp"
#include "zetaverify/contour.hpp"
#include "zetaverify/identity.hpp"
#include "zetaverify/rational_matrix.hpp"
#include "zetaverify/zeta.hpp"

namespace {

void BM_BernoulliTable(benchmark::State& state) {
    const std::size_t m = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        zv::BernoulliTable table(m);
        benchmark::DoNotOptimize(table.at(m));
    }
}
BENCHMARK(BM_BernoulliTable)->Arg(64)->Arg(128)->Arg(256);

void BM_ZetaInt(benchmark::State& state) {
    const int digits = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(zv::zeta_int(3, digits));
}
BENCHMARK(BM_ZetaInt)->Arg(30)->Arg(120)->Arg(480);

void BM_ZetaSeriesOracle(benchmark::State& state) {
    const unsigned long terms = static_cast<unsigned long>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(zv::zeta_series_oracle(2, terms));
}
BENCHMARK(BM_ZetaSeriesOracle)->Arg(1000)->Arg(10000);

void BM_VerifyIdentity(benchmark::State& state) {
    const long n = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(zv::verify_identity(n, 40));
}
BENCHMARK(BM_VerifyIdentity)->Arg(2)->Arg(4)->Arg(8);

void BM_ResidueSum(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(zv::residue_sum(7, state.range(0), 40));
}
BENCHMARK(BM_ResidueSum)->Arg(4)->Arg(16);

void BM_RectangleIntegral(benchmark::State& state) {
    for (auto _ : state) {
        auto out = zv::rectangle_integral(3, 1, 20.0, 20, 1e-8);
        benchmark::DoNotOptimize(out.value);
    }
}
BENCHMARK(BM_RectangleIntegral)->Unit(benchmark::kMillisecond);

void BM_MatrixDeterminant(benchmark::State& state) {
    zv::RationalMatrix m = zv::build_matrix(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(zv::determinant(m));
}
BENCHMARK(BM_MatrixDeterminant)->Arg(8)->Arg(16);

} // namespace

BENCHMARK_MAIN();
