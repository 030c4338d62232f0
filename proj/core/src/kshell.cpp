#include "mcent/kshell.hpp"

#include <algorithm>

namespace mcent {

// Batagelj-Zaversnik bucket peeling: nodes sorted by current degree into
// buckets, repeatedly remove the minimum-degree node and decrement neighbors.
std::vector<node_t> kcore_decomposition(const Graph& g) {
    const node_t n = g.node_count();
    std::vector<node_t> core(n, 0);
    if (n == 0) return core;

    std::vector<node_t> deg(n);
    node_t max_deg = 0;
    for (node_t u = 0; u < n; ++u) {
        deg[u] = g.degree(u);
        max_deg = std::max(max_deg, deg[u]);
    }

    // bucket sort by degree; bin[d] = start offset of degree-d block
    std::vector<node_t> bin(max_deg + 2, 0);
    for (node_t u = 0; u < n; ++u) ++bin[deg[u] + 1];
    for (node_t d = 1; d < bin.size(); ++d) bin[d] += bin[d - 1];

    std::vector<node_t> order(n);   // nodes sorted by degree (stable: index asc)
    std::vector<node_t> pos(n);     // position of node in `order`
    {
        std::vector<node_t> cursor(bin.begin(), bin.end() - 1);
        for (node_t u = 0; u < n; ++u) {
            pos[u] = cursor[deg[u]]++;
            order[pos[u]] = u;
        }
    }

    for (node_t i = 0; i < n; ++i) {
        node_t u = order[i];
        core[u] = deg[u];
        for (node_t v : g.neighbors(u)) {
            if (deg[v] > deg[u]) {
                // swap v with the first node of its degree block, then shrink
                node_t dv = deg[v];
                node_t head = bin[dv];
                node_t w = order[head];
                if (w != v) {
                    std::swap(order[pos[v]], order[head]);
                    std::swap(pos[v], pos[w]);
                }
                ++bin[dv];
                --deg[v];
            }
        }
    }
    return core;
}

}  // namespace mcent
