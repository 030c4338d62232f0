#pragma once

#include <vector>

#include "mcent/graph.hpp"

namespace mcent {

/// Coreness K_s per node: the largest k such that the node survives in the
/// k-core (maximal subgraph with all internal degrees >= k). Bucket peeling,
/// O(n + m), fully deterministic. Isolated nodes get coreness 0.
std::vector<node_t> kcore_decomposition(const Graph& g);

}  // namespace mcent
