#pragma once

#include <optional>
#include <vector>

#include "mcent/graph.hpp"

namespace mcent {

/// Local degree-variation attribute. For each node i with neighborhood N_i,
///   d_{i,j} = |N_i| * |k_j - k_i| / sum_{j in N_i} k_j
/// and the node score is the sum of d_{i,j} over its neighbors. A node whose
/// neighbors all share its degree scores 0, as do isolated nodes.
std::vector<double> delta_d(const Graph& g);

struct EntropyWeights {
    double mu = 0.5;             // weight of the coreness attribute (w_1)
    double entropy_global = 0.0; // Shannon entropy of the normalized coreness
    double entropy_local = 0.0;  // Shannon entropy of the normalized delta-D
    bool degenerate_global = false;  // attribute summed to zero
    bool degenerate_local = false;
};

/// Entropy weighting over the two normalized attribute distributions:
/// E_i = -(1/ln n) sum_j r_ij ln r_ij (0 ln 0 := 0),
/// w_i = (1 - E_i) / (2 - sum E_i), mu = w_1.
/// A constant-zero attribute carries no ranking information: it gets weight 0
/// and the other attribute weight 1, flagged as degenerate. Requires n >= 2.
EntropyWeights entropy_weights(const std::vector<node_t>& coreness,
                               const std::vector<double>& dd);

struct MCentralityVector {
    std::vector<double> scores;  // mu * K_s + (1 - mu) * delta_D, per node
    double mu_used = 0.5;
    EntropyWeights weights;      // as computed, even when mu was overridden
    std::vector<node_t> coreness;
    std::vector<double> dd;
};

/// Combined score M_i = mu * K_{s_i} + (1 - mu) * deltaD_i. When mu_override
/// is absent, mu comes from entropy_weights.
MCentralityVector m_centrality(const Graph& g,
                               std::optional<double> mu_override = std::nullopt);

}  // namespace mcent
