#include <benchmark/benchmark.h>

#include <random>

#include "fano/classify.hpp"
#include "fano/ewald.hpp"
#include "fano/linalg.hpp"
#include "fano/polytope.hpp"
#include "fano/tu.hpp"

using namespace fano;

namespace {

IntMatrix random_square(std::size_t n, std::uint32_t seed, int lo, int hi) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = d(rng);
    return m;
}

// The +-1 cube: dual of the octahedron, 8 vertices, 6 facets.
IntMatrix cube3() {
    IntMatrix m(8, 3);
    for (std::size_t k = 0; k < 8; ++k)
        for (std::size_t j = 0; j < 3; ++j) m.at(k, j) = (k >> j & 1) ? 1 : -1;
    return m;
}

// The octahedron conv{+-e_i}: smooth Fano in dimension 3.
IntMatrix octa3() {
    IntMatrix m(6, 3);
    for (std::size_t k = 0; k < 6; ++k) m.at(k, k / 2) = (k % 2) ? -1 : 1;
    return m;
}

void BM_Determinant5(benchmark::State& state) {
    auto m = random_square(5, 41, -9, 9);
    for (auto _ : state) benchmark::DoNotOptimize(det(m));
}
BENCHMARK(BM_Determinant5);

void BM_Rank6(benchmark::State& state) {
    auto m = random_square(6, 42, -4, 4);
    for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank6);

void BM_TotallyUnimodularR10(benchmark::State& state) {
    auto m = fixture("R10");
    for (auto _ : state) benchmark::DoNotOptimize(is_totally_unimodular(m).is_tu);
}
BENCHMARK(BM_TotallyUnimodularR10);

void BM_GhouilaHouriR10(benchmark::State& state) {
    auto m = fixture("R10");
    for (auto _ : state) benchmark::DoNotOptimize(ghouila_houri_is_tu(m));
}
BENCHMARK(BM_GhouilaHouriR10);

void BM_Facets(benchmark::State& state) {
    auto m = cube3();
    for (auto _ : state) {
        LatticePolytope p(m);
        benchmark::DoNotOptimize(p.facets().size());
    }
}
BENCHMARK(BM_Facets);

void BM_DualPolytope(benchmark::State& state) {
    LatticePolytope p(cube3());
    for (auto _ : state) benchmark::DoNotOptimize(dual_polytope(p).vertex_count());
}
BENCHMARK(BM_DualPolytope);

void BM_EwaldPoints(benchmark::State& state) {
    LatticePolytope p(octa3());
    for (auto _ : state) benchmark::DoNotOptimize(ewald_points(p).size());
}
BENCHMARK(BM_EwaldPoints);

void BM_ClassifyPolytope(benchmark::State& state) {
    CorpusEntry e;
    e.id = "bench";
    e.dim = 3;
    e.vertices = octa3();
    for (auto _ : state) benchmark::DoNotOptimize(classify_polytope(e).flags.usfp.value());
}
BENCHMARK(BM_ClassifyPolytope);

}  // namespace

BENCHMARK_MAIN();
