#pragma once

#include <random>
#include <set>
#include <utility>
#include <vector>

#include "mcent/graph.hpp"

namespace mcent::test {

inline Graph path(node_t n) {
    std::vector<std::pair<node_t, node_t>> e;
    for (node_t i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return Graph(n, e);
}

inline Graph cycle(node_t n) {
    std::vector<std::pair<node_t, node_t>> e;
    for (node_t i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    return Graph(n, e);
}

inline Graph star(node_t leaves) {
    std::vector<std::pair<node_t, node_t>> e;
    for (node_t i = 1; i <= leaves; ++i) e.push_back({0, i});
    return Graph(leaves + 1, e);
}

inline Graph clique(node_t n) {
    std::vector<std::pair<node_t, node_t>> e;
    for (node_t i = 0; i < n; ++i)
        for (node_t j = i + 1; j < n; ++j) e.push_back({i, j});
    return Graph(n, e);
}

/// G(n, p) with a fixed seed; may be disconnected.
inline Graph random_graph(node_t n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::pair<node_t, node_t>> e;
    for (node_t i = 0; i < n; ++i)
        for (node_t j = i + 1; j < n; ++j)
            if (coin(rng) < p) e.push_back({i, j});
    return Graph(n, e);
}

/// Relabels nodes by a random permutation; used for isomorphism invariance.
inline std::pair<Graph, std::vector<node_t>> permuted(const Graph& g, std::uint64_t seed) {
    std::vector<node_t> perm(g.node_count());
    for (node_t i = 0; i < g.node_count(); ++i) perm[i] = i;
    std::mt19937_64 rng(seed);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::pair<node_t, node_t>> e;
    for (node_t u = 0; u < g.node_count(); ++u)
        for (node_t v : g.neighbors(u))
            if (u < v) e.push_back({perm[u], perm[v]});
    return {Graph(g.node_count(), e), perm};
}

}  // namespace mcent::test
