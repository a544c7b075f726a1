#include <benchmark/benchmark.h>

#include <random>

#include "addact/limits.hpp"
#include "addact/models.hpp"

using namespace addact;

namespace {

Mat random_matrix(int rows, int cols, unsigned long seed) {
    std::mt19937_64 rng(seed);
    Mat m;
    for (int r = 0; r < rows; ++r) {
        Vec v;
        for (int c = 0; c < cols; ++c)
            v.push_back(Scalar(long(rng() % 19) - 9, 1 + long(rng() % 4)));
        m.push_back(std::move(v));
    }
    return m;
}

void BM_rref(benchmark::State& state) {
    Mat m = random_matrix(int(state.range(0)), int(state.range(0)) + 2, 17);
    for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_rref)->Arg(8)->Arg(16)->Arg(32);

void BM_equation_synthesis(benchmark::State& state) {
    HPair p = quadric_pair(int(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(equation(p));
}
BENCHMARK(BM_equation_synthesis)->Arg(2)->Arg(4)->Arg(6);

void BM_generic_limit(benchmark::State& state) {
    HPair p = cubic_pair();
    for (auto _ : state) benchmark::DoNotOptimize(generic_limit(p));
}
BENCHMARK(BM_generic_limit);

void BM_decide_refutation(benchmark::State& state) {
    HPair p = counterexample_pair();
    for (auto _ : state) benchmark::DoNotOptimize(decide(p));
}
BENCHMARK(BM_decide_refutation);

void BM_decide_socle_extension(benchmark::State& state) {
    HPair p = socle_extension(quadric_pair(3), 2);
    for (auto _ : state) benchmark::DoNotOptimize(decide(p));
}
BENCHMARK(BM_decide_socle_extension);

}  // namespace

BENCHMARK_MAIN();
