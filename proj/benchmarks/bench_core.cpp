#include <benchmark/benchmark.h>

#include "dualorder/dual_ginv.hpp"
#include "dualorder/orders.hpp"
#include "dualorder/real_linalg.hpp"
#include "dualorder/synthesis.hpp"

using namespace dualorder;

namespace {

const Tolerances tol;

GenSpec bench_spec(int n, int rank_a, int rank_b) {
    GenSpec spec;
    spec.m = n;
    spec.n = n;
    spec.rank_a = rank_a;
    spec.rank_b = rank_b;
    spec.seed = 1;
    return spec;
}

void bm_pinv(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const DualMatrix x = gen_dual_with_dmpgi(bench_spec(n, n / 2, n / 2));
    for (auto _ : state) benchmark::DoNotOptimize(pinv(x.real(), tol));
}
BENCHMARK(bm_pinv)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void bm_dmpgi(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const DualMatrix x = gen_dual_with_dmpgi(bench_spec(n, n / 2, n / 2));
    for (auto _ : state) benchmark::DoNotOptimize(dmpgi(x, tol));
}
BENCHMARK(bm_dmpgi)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void bm_dmpgi_svd_route(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const DualMatrix x = gen_dual_with_dmpgi(bench_spec(n, n / 2, n / 2));
    for (auto _ : state) benchmark::DoNotOptimize(dmpgi_svd_route(x, tol));
}
BENCHMARK(bm_dmpgi_svd_route)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void bm_d_star_leq(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto [a, b] = gen_d_star_pair(bench_spec(n, n / 4 + 1, n / 2));
    for (auto _ : state) benchmark::DoNotOptimize(d_star_leq(a, b, tol));
}
BENCHMARK(bm_d_star_leq)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void bm_p_star_leq(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto [a, b] = gen_p_star_pair(bench_spec(n, n / 4 + 1, n / 2));
    for (auto _ : state) benchmark::DoNotOptimize(p_star_leq(a, b, tol));
}
BENCHMARK(bm_p_star_leq)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void bm_gen_d_star_pair(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    GenSpec spec = bench_spec(n, n / 4 + 1, n / 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gen_d_star_pair(spec));
        ++spec.seed;
    }
}
BENCHMARK(bm_gen_d_star_pair)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
