#include <benchmark/benchmark.h>

#include <random>

#include "sesqui/families.hpp"
#include "sesqui/hoffman.hpp"
#include "sesqui/induced.hpp"
#include "sesqui/quasiclique.hpp"
#include "sesqui/regularity.hpp"
#include "sesqui/spectral.hpp"

using namespace sesqui;

namespace {

Graph random_graph(std::size_t n, double density, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(density);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

void BM_LambdaMinRandom(benchmark::State& state) {
    const auto g = random_graph(static_cast<std::size_t>(state.range(0)), 0.5, 1);
    for (auto _ : state) benchmark::DoNotOptimize(lambda_min(g));
}
BENCHMARK(BM_LambdaMinRandom)->RangeMultiplier(2)->Range(16, 512);

void BM_LambdaMinExpansion(benchmark::State& state) {
    const auto g = expand(catalog::h_t(3).hoffman, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(lambda_min(g));
}
BENCHMARK(BM_LambdaMinExpansion)->Arg(10)->Arg(50)->Arg(200);

void BM_MaximalCliques(benchmark::State& state) {
    const auto g = random_graph(static_cast<std::size_t>(state.range(0)), 0.5, 2);
    for (auto _ : state) benchmark::DoNotOptimize(maximal_cliques(g));
}
BENCHMARK(BM_MaximalCliques)->Arg(32)->Arg(64)->Arg(128);

void BM_QuasiCliqueSystem(benchmark::State& state) {
    const auto g = expand(catalog::h_t1(2).hoffman, 30);
    for (auto _ : state) benchmark::DoNotOptimize(quasi_clique_system(g, 2, 25));
}
BENCHMARK(BM_QuasiCliqueSystem);

void BM_ContainsKTilde(benchmark::State& state) {
    const auto g = random_graph(static_cast<std::size_t>(state.range(0)), 0.3, 3);
    const auto pattern = families::k_tilde(2);
    for (auto _ : state) benchmark::DoNotOptimize(contains_induced(g, pattern));
}
BENCHMARK(BM_ContainsKTilde)->Arg(50)->Arg(200);

void BM_RegularityProfile(benchmark::State& state) {
    const auto g = random_graph(static_cast<std::size_t>(state.range(0)), 0.5, 4);
    for (auto _ : state) benchmark::DoNotOptimize(regularity_profile(g));
}
BENCHMARK(BM_RegularityProfile)->Arg(64)->Arg(256)->Arg(1024);

}  // namespace
BENCHMARK_MAIN();
