#include "mcent/baselines.hpp"

#include <algorithm>
#include <cmath>

#include "mcent/kshell.hpp"

namespace mcent {

CentralityVector degree_centrality(const Graph& g) {
    CentralityVector cv{"degree", {}, {}};
    cv.scores.resize(g.node_count());
    for (node_t u = 0; u < g.node_count(); ++u) cv.scores[u] = g.degree(u);
    return cv;
}

CentralityVector gravity(const Graph& g, node_t radius) {
    auto core = kcore_decomposition(g);
    CentralityVector cv{"gravity", {{"radius", static_cast<double>(radius)}}, {}};
    cv.scores.assign(g.node_count(), 0.0);
    for (node_t i = 0; i < g.node_count(); ++i) {
        auto dist = bfs_distances(g, i, radius);
        double acc = 0.0;
        for (node_t j = 0; j < g.node_count(); ++j) {
            if (j == i || dist[j] == kUnreachable) continue;
            double d = dist[j];
            acc += static_cast<double>(core[i]) * static_cast<double>(core[j]) / (d * d);
        }
        cv.scores[i] = acc;
    }
    return cv;
}

CentralityVector collective_influence(const Graph& g, node_t ell) {
    CentralityVector cv{"ci", {{"ell", static_cast<double>(ell)}}, {}};
    cv.scores.assign(g.node_count(), 0.0);
    for (node_t i = 0; i < g.node_count(); ++i) {
        if (g.degree(i) == 0) continue;
        auto dist = bfs_distances(g, i, ell);
        double frontier = 0.0;
        for (node_t j = 0; j < g.node_count(); ++j)
            if (dist[j] == static_cast<std::int32_t>(ell))
                frontier += static_cast<double>(g.degree(j)) - 1.0;
        double score = (static_cast<double>(g.degree(i)) - 1.0) * frontier;
        cv.scores[i] = std::max(0.0, score);
    }
    return cv;
}

namespace {

// triangles through each node, via neighbor-set intersections on the CSR
double local_clustering(const Graph& g, node_t u) {
    node_t k = g.degree(u);
    if (k < 2) return 0.0;
    std::size_t links = 0;
    auto nu = g.neighbors(u);
    for (node_t v : nu) {
        auto nv = g.neighbors(v);
        // count common neighbors w > v to avoid double counting
        links += std::count_if(nv.begin(), nv.end(), [&](node_t w) {
            return w > v && std::binary_search(nu.begin(), nu.end(), w);
        });
    }
    return 2.0 * static_cast<double>(links) /
           (static_cast<double>(k) * (static_cast<double>(k) - 1.0));
}

std::size_t edge_triangles(const Graph& g, node_t u, node_t v) {
    auto nu = g.neighbors(u), nv = g.neighbors(v);
    std::size_t p = 0;
    auto a = nu.begin();
    auto b = nv.begin();
    while (a != nu.end() && b != nv.end()) {
        if (*a < *b) ++a;
        else if (*b < *a) ++b;
        else { ++p; ++a; ++b; }
    }
    return p;
}

}  // namespace

CentralityVector cluster_rank(const Graph& g) {
    CentralityVector cv{"clusterrank", {}, {}};
    cv.scores.assign(g.node_count(), 0.0);
    for (node_t i = 0; i < g.node_count(); ++i) {
        double acc = 0.0;
        for (node_t j : g.neighbors(i)) acc += static_cast<double>(g.degree(j)) + 1.0;
        cv.scores[i] = std::pow(10.0, -local_clustering(g, i)) * acc;
    }
    return cv;
}

CentralityVector dil(const Graph& g) {
    CentralityVector cv{"dil", {}, {}};
    cv.scores.assign(g.node_count(), 0.0);
    for (node_t i = 0; i < g.node_count(); ++i) {
        double ki = g.degree(i);
        double acc = ki;
        for (node_t j : g.neighbors(i)) {
            double kj = g.degree(j);
            if (ki + kj <= 2.0) continue;  // isolated edge
            double p = static_cast<double>(edge_triangles(g, i, j));
            double U = (ki - p - 1.0) * (kj - p - 1.0);
            double lambda = p / 2.0 + 1.0;
            acc += (U / lambda) * (ki - 1.0) / (ki + kj - 2.0);
        }
        cv.scores[i] = acc;
    }
    return cv;
}

CentralityVector personalized_pagerank(const Graph& g, double teleport_prob,
                                       PprPreference preference) {
    if (teleport_prob <= 0.0 || teleport_prob >= 1.0)
        throw graph_error("teleport probability must be in (0,1)");
    const node_t n = g.node_count();
    CentralityVector cv{"ppr",
                        {{"teleport", teleport_prob},
                         {"degree_preference", preference == PprPreference::degree ? 1.0 : 0.0}},
                        {}};
    if (n == 0) return cv;

    std::vector<double> pref(n);
    if (preference == PprPreference::degree) {
        double total = 2.0 * static_cast<double>(g.edge_count());
        if (total == 0.0) throw graph_error("degree preference undefined on edgeless graph");
        for (node_t u = 0; u < n; ++u) pref[u] = g.degree(u) / total;
    } else {
        std::fill(pref.begin(), pref.end(), 1.0 / n);
    }

    std::vector<double> pi = pref, next(n);
    const double alpha = teleport_prob;
    double residual = 1.0;
    for (int it = 0; it < 10000; ++it) {
        std::fill(next.begin(), next.end(), 0.0);
        double dangling = 0.0;
        for (node_t u = 0; u < n; ++u) {
            if (g.degree(u) == 0) {
                dangling += pi[u];  // isolated mass teleports
                continue;
            }
            double share = (1.0 - alpha) * pi[u] / g.degree(u);
            for (node_t v : g.neighbors(u)) next[v] += share;
        }
        double redistribute = alpha + (1.0 - alpha) * dangling;
        for (node_t u = 0; u < n; ++u) next[u] += redistribute * pref[u];

        residual = 0.0;
        for (node_t u = 0; u < n; ++u) residual += std::abs(next[u] - pi[u]);
        pi.swap(next);
        if (residual < 1e-10) {
            cv.scores = pi;
            return cv;
        }
    }
    throw graph_error("pagerank failed to converge, last residual = " +
                      std::to_string(residual));
}

}  // namespace mcent
