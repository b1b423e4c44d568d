// Serial reference kernels against their OpenMP versions.

#include "diskspec/kernels.hpp"
#include "diskspec/sparse_ops.hpp"
#include "diskspec/transform.hpp"

#include <benchmark/benchmark.h>

#include <complex>
#include <random>

using namespace diskspec;

namespace {

std::vector<double> random_vec(std::size_t n) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> v(n);
    for (double& x : v) {
        x = u(rng);
    }
    return v;
}

Exec exec_of(const benchmark::State& state) { return state.range(1) ? Exec::Parallel : Exec::Serial; }

void BM_DenseMatvec(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = random_vec(n * n);
    const auto x = random_vec(n);
    std::vector<double> y(n);
    for (auto _ : state) {
        dense_matvec(exec_of(state), a, n, n, x, y);
        benchmark::DoNotOptimize(y.data());
    }
}

void BM_BandedApply(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const BandedMatrix a = compose({tag(OpKind::Dplus, {0, 2}), tag(OpKind::Dminus, {1, 3}), tag(OpKind::C, {2, 2}),
                                    tag(OpKind::C, {3, 2})},
                                   n);
    const auto x = random_vec(n);
    for (auto _ : state) {
        auto y = banded_apply(exec_of(state), a, x);
        benchmark::DoNotOptimize(y.data());
    }
}

void BM_TransformForward(benchmark::State& state) {
    const auto nr = static_cast<std::size_t>(state.range(0));
    const auto t = radial_transform({0, 5}, nr);
    const auto values = random_vec(nr);
    std::vector<std::complex<double>> cvalues(values.begin(), values.end());
    for (auto _ : state) {
        auto c = t->forward(cvalues, exec_of(state));
        benchmark::DoNotOptimize(c.data());
    }
}

}  // namespace

BENCHMARK(BM_DenseMatvec)->ArgsProduct({{256, 1024}, {0, 1}})->ArgNames({"n", "parallel"});
BENCHMARK(BM_BandedApply)->ArgsProduct({{4096, 65536}, {0, 1}})->ArgNames({"n", "parallel"});
BENCHMARK(BM_TransformForward)->ArgsProduct({{128, 512}, {0, 1}})->ArgNames({"nr", "parallel"});

BENCHMARK_MAIN();
