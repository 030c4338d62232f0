#include <benchmark/benchmark.h>

#include <random>

#include "mcent/eval.hpp"
#include "mcent/graph.hpp"
#include "mcent/kshell.hpp"
#include "mcent/mcentrality.hpp"
#include "mcent/sir.hpp"

using namespace mcent;

namespace {

// ring + random chords: connected, sparse, mean degree ~ 2 + 2 * chords_per_node
Graph synthetic_sparse(node_t n, double chords_per_node, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<node_t> pick(0, n - 1);
    std::vector<std::pair<node_t, node_t>> edges;
    edges.reserve(static_cast<std::size_t>(n * (1 + chords_per_node)));
    for (node_t i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    auto extra = static_cast<std::size_t>(chords_per_node * n);
    for (std::size_t k = 0; k < extra; ++k) {
        node_t u = pick(rng), v = pick(rng);
        if (u != v) edges.push_back({u, v});
    }
    return Graph(n, std::move(edges));
}

}  // namespace

static void BM_BfsPass(benchmark::State& state) {
    Graph g = synthetic_sparse(static_cast<node_t>(state.range(0)), 1.5, 42);
    for (auto _ : state) {
        auto d = bfs_distances(g, 0);
        benchmark::DoNotOptimize(d.data());
    }
}
BENCHMARK(BM_BfsPass)->Arg(1 << 16)->Arg(1 << 20);

static void BM_KcoreDecomposition(benchmark::State& state) {
    Graph g = synthetic_sparse(static_cast<node_t>(state.range(0)), 1.5, 42);
    for (auto _ : state) {
        auto c = kcore_decomposition(g);
        benchmark::DoNotOptimize(c.data());
    }
}
BENCHMARK(BM_KcoreDecomposition)->Arg(1 << 16)->Arg(1 << 20);

static void BM_DeltaD(benchmark::State& state) {
    Graph g = synthetic_sparse(static_cast<node_t>(state.range(0)), 1.5, 42);
    for (auto _ : state) {
        auto d = delta_d(g);
        benchmark::DoNotOptimize(d.data());
    }
}
BENCHMARK(BM_DeltaD)->Arg(1 << 16)->Arg(1 << 20);

static void BM_MCentralityFull(benchmark::State& state) {
    Graph g = synthetic_sparse(static_cast<node_t>(state.range(0)), 1.5, 42);
    for (auto _ : state) {
        auto mc = m_centrality(g);
        benchmark::DoNotOptimize(mc.scores.data());
    }
}
BENCHMARK(BM_MCentralityFull)->Arg(1 << 16)->Arg(1 << 20);

static void BM_NetworkEfficiency(benchmark::State& state) {
    Graph g = synthetic_sparse(static_cast<node_t>(state.range(0)), 1.5, 42);
    for (auto _ : state) {
        double eta = network_efficiency(g);
        benchmark::DoNotOptimize(eta);
    }
}
BENCHMARK(BM_NetworkEfficiency)->Arg(256)->Arg(1024);

static void BM_SirSpreadingInfluence(benchmark::State& state) {
    Graph g = synthetic_sparse(static_cast<node_t>(state.range(0)), 1.5, 42);
    SirConfig cfg{0.1, 20, 7};
    for (auto _ : state) {
        auto inf = spreading_influence(g, 0.1, cfg, 1);
        benchmark::DoNotOptimize(inf.mean_recovered.data());
    }
}
BENCHMARK(BM_SirSpreadingInfluence)->Arg(256)->Arg(1024);
