// Serial reference enumeration against the OpenMP kernel for the same builds.
#include <benchmark/benchmark.h>

#include "macdonald/formulas.hpp"
#include "macdonald/mlq.hpp"

using namespace macd;

namespace {

const Partition& shape(int k) {
    static const std::vector<Partition> shapes{{2, 2, 1, 1}, {3, 2, 2}, {3, 3, 1, 1}};
    return shapes.at(k);
}

void run_build(benchmark::State& state, Family fam, Method m) {
    const Partition& lam = shape(static_cast<int>(state.range(0)));
    BuildOptions bo;
    bo.threads = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(build(lam, 5, {fam, m}, bo));
    state.SetLabel(lam.str() + (bo.threads <= 1 ? " serial" : " omp"));
}

void BM_P_quinv_compact(benchmark::State& s) { run_build(s, Family::P, Method::quinv_compact); }
void BM_P_quinv(benchmark::State& s) { run_build(s, Family::P, Method::quinv); }
void BM_Htilde_quinv(benchmark::State& s) { run_build(s, Family::Htilde, Method::quinv); }

void BM_P_mlq(benchmark::State& state) {
    const Partition& lam = shape(static_cast<int>(state.range(0)));
    const int threads = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(build_P_mlq(lam, 5, threads));
    state.SetLabel(lam.str() + (threads <= 1 ? " serial" : " omp"));
}

// second argument: 1 runs the serial reference, 4 the parallel kernel
void args(benchmark::internal::Benchmark* b) {
    for (int k = 0; k < 3; ++k)
        for (int th : {1, 4}) b->Args({k, th});
    b->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK(BM_P_quinv_compact)->Apply(args);
BENCHMARK(BM_P_quinv)->Apply(args);
BENCHMARK(BM_Htilde_quinv)->Apply(args);
BENCHMARK(BM_P_mlq)->Apply(args);

BENCHMARK_MAIN();
