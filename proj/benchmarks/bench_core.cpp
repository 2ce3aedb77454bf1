#include <benchmark/benchmark.h>

#include <random>

#include "matchframe/approx.hpp"
#include "matchframe/exact.hpp"
#include "matchframe/matrix_index.hpp"
#include "matchframe/scds.hpp"
#include "matchframe/suffix.hpp"

using namespace mframe;

namespace {

Matrix random_binary(int n, int m, std::uint64_t seed) {
    Matrix out(n, m, 1);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(0, 1);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= m; ++j) out.set(i, j, static_cast<Symbol>(dist(rng)));
    return out;
}

void BM_SuffixArray(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(1);
    std::vector<Symbol> text(n);
    std::uniform_int_distribution<int> dist(0, 3);
    for (auto& c : text) c = dist(rng);
    for (auto _ : state) benchmark::DoNotOptimize(build_suffix_array(text));
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_SuffixArray)->Arg(1 << 14)->Arg(1 << 17)->Arg(1 << 20);

void BM_MatrixIndexBuild(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Matrix m = random_binary(n, n, 2);
    for (auto _ : state) benchmark::DoNotOptimize(MatrixIndex(m));
    state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_MatrixIndexBuild)->Arg(64)->Arg(256)->Arg(512);

void BM_ScdsQuery(benchmark::State& state) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> cd(1, 200), wd(1, 40);
    std::vector<VerticalAlignedPair> pairs;
    for (int i = 0; i < static_cast<int>(state.range(0)); ++i) {
        const int a1 = cd(rng), b1 = cd(rng);
        pairs.emplace_back(a1, a1 + wd(rng), b1, b1 + wd(rng));
    }
    const Scds s(pairs);
    int q = 0;
    for (auto _ : state) {
        const int i1 = 1 + (q % 150), j1 = 1 + (q * 7 % 150);
        benchmark::DoNotOptimize(
            s.max_compatible(HorizontalAlignedPair(i1, i1 + 5, j1, j1 + 30)));
        ++q;
    }
}
BENCHMARK(BM_ScdsQuery)->Arg(1 << 12)->Arg(1 << 15);

void BM_ExactMaxFrame(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Matrix m = random_binary(n, n, 4);
    for (auto _ : state) benchmark::DoNotOptimize(max_matching_frame(m));
}
BENCHMARK(BM_ExactMaxFrame)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_ApproxMaxFrame(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Matrix m = random_binary(n, n, 5);
    for (auto _ : state) benchmark::DoNotOptimize(approx_max_frame(m, 0.5));
}
BENCHMARK(BM_ApproxMaxFrame)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
