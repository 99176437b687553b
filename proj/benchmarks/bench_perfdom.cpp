#include <benchmark/benchmark.h>

#include "perfdom/band.hpp"
#include "perfdom/patterns.hpp"
#include "perfdom/solver.hpp"
#include "perfdom/verifier.hpp"
#include "perfdom/window.hpp"

namespace {

using namespace perfdom;

void BM_SolveFourRows(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_gamma_p(BoardDims(n, 4)).gamma_p);
    }
}
BENCHMARK(BM_SolveFourRows)->Arg(8)->Arg(16)->Arg(24);

void BM_SolveSquare(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_gamma_p(BoardDims(n, n)).gamma_p);
    }
}
BENCHMARK(BM_SolveSquare)->Arg(6)->Arg(7)->Arg(8);

void BM_SolveThreeRowsWide(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_gamma_p(BoardDims(n, 3)).gamma_p);
    }
}
BENCHMARK(BM_SolveThreeRowsWide)->Arg(16)->Arg(32)->Arg(64);

void BM_BruteForce(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(brute_force_gamma_p(BoardDims(n, 4)).gamma_p);
    }
}
BENCHMARK(BM_BruteForce)->Arg(4)->Arg(5)->Arg(6);

void BM_Verify(benchmark::State& state) {
    const Placement p = construct_4rows(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_perfect_dominating(p));
    }
}
BENCHMARK(BM_Verify)->Arg(14)->Arg(64);

void BM_EnumerateMinimum(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_pds(BoardDims(14, 4), 28, true).size());
    }
}
BENCHMARK(BM_EnumerateMinimum);

void BM_ClassifyBand(benchmark::State& state) {
    const int rows = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify_two_sided(rows).nontrivial);
    }
}
BENCHMARK(BM_ClassifyBand)->Arg(2)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_BoundaryStrip(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(boundary_strip_search(12).k);
    }
}
BENCHMARK(BM_BoundaryStrip);

void BM_IsolatedKnight(benchmark::State& state) {
    const int radius = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(isolated_knight_search(radius).nodes);
    }
}
BENCHMARK(BM_IsolatedKnight)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
