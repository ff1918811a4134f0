#include <benchmark/benchmark.h>

#include <random>

#include "edgeideal/enumerate.hpp"
#include "edgeideal/golden.hpp"
#include "edgeideal/homology.hpp"
#include "edgeideal/invariants.hpp"
#include "edgeideal/linalg.hpp"
#include "edgeideal/theorems.hpp"

using namespace edgeideal;

namespace {

IntMatrix boundary_of_six_by_six(int l) {
    return boundary_matrices(independence_complex(golden::six_by_six()), FieldSpec::rationals()).boundary(l);
}

void BM_RankRational(benchmark::State& state) {
    const auto m = boundary_of_six_by_six(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(rank_rational(m));
    state.SetLabel(std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}
BENCHMARK(BM_RankRational)->DenseRange(1, 4);

void BM_RankModP(benchmark::State& state) {
    const auto m = boundary_of_six_by_six(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(rank_mod_p(m, 2));
}
BENCHMARK(BM_RankModP)->DenseRange(1, 4);

void BM_RankRandomDense(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> entry(-5, 5);
    IntMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) m(r, c) = entry(rng);
    }
    for (auto _ : state) benchmark::DoNotOptimize(rank_rational(m));
}
BENCHMARK(BM_RankRandomDense)->RangeMultiplier(2)->Range(8, 64);

void BM_HochsterSixBySix(benchmark::State& state) {
    const auto d = independence_complex(golden::six_by_six());
    for (auto _ : state) benchmark::DoNotOptimize(hochster_betti(d, FieldSpec::rationals()));
}
BENCHMARK(BM_HochsterSixBySix)->Unit(benchmark::kMillisecond);

void BM_ClassifyFerrers(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<int> lambda;
    for (int i = 0; i < n; ++i) lambda.push_back(n - i / 2);
    const Graph g = ferrers_graph(FerrersPartition(lambda)).first;
    for (auto _ : state) benchmark::DoNotOptimize(classify(g, FieldSpec::rationals()));
}
BENCHMARK(BM_ClassifyFerrers)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

void BM_EnumerateBipartite(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_bipartite(n));
}
BENCHMARK(BM_EnumerateBipartite)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_BuildFamily(benchmark::State& state) {
    CheckOptions o;
    o.max_vertices = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(build_family(o));
}
BENCHMARK(BM_BuildFamily)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);

void BM_AllComplexes(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(all_complexes(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_AllComplexes)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_MayerVietoris(benchmark::State& state) {
    const Graph g = golden::six_by_six();
    const auto d = independence_complex(g);
    const int x6 = *d.index_of("x6"), y6 = *d.index_of("y6");
    std::vector<VertexSet> f1, f2;
    for (auto f : d.facets()) {
        if (f.contains(x6)) f1.push_back(f);
        if (f.contains(y6)) f2.push_back(f);
    }
    const SimplicialComplex d1(d.ground(), f1), d2(d.ground(), f2);
    for (auto _ : state) benchmark::DoNotOptimize(mv_check(d1, d2, FieldSpec::rationals()));
}
BENCHMARK(BM_MayerVietoris)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
