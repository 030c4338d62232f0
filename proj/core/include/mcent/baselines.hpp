#pragma once

#include <map>
#include <string>
#include <vector>

#include "mcent/graph.hpp"

namespace mcent {

/// Shared result carrier: per-node scores plus the method name and the
/// parameters it ran with, for reproducible output headers.
struct CentralityVector {
    std::string method;
    std::map<std::string, double> params;
    std::vector<double> scores;
};

CentralityVector degree_centrality(const Graph& g);

/// Newtonian form over coreness masses:
///   score(i) = sum_{j != i, d(i,j) <= radius} Ks_i * Ks_j / d(i,j)^2.
CentralityVector gravity(const Graph& g, node_t radius = 3);

/// Collective influence with the frontier at exactly distance ell:
///   score(i) = (k_i - 1) * sum_{d(i,j) = ell} (k_j - 1),
/// clamped at 0 (reduced degrees make negative products meaningless).
CentralityVector collective_influence(const Graph& g, node_t ell = 3);

/// ClusterRank, undirected adaptation:
///   score(i) = 10^{-c_i} * sum_{j in N_i} (k_j + 1),
/// c_i the local clustering coefficient (0 when degree < 2).
CentralityVector cluster_rank(const Graph& g);

/// Degree-and-importance-of-lines score. For edge e=(i,j) with p triangles
/// through e: U = (k_i - p - 1)(k_j - p - 1), lambda = p/2 + 1, I = U/lambda,
/// and the contribution to i is W = I * (k_i - 1) / (k_i + k_j - 2).
/// score(i) = k_i + sum_j W(e_ij). W := 0 on an isolated edge.
CentralityVector dil(const Graph& g);

enum class PprPreference { degree, uniform };

/// Personalized PageRank: follow a uniform incident edge with probability
/// 1 - teleport_prob, else jump to the preference distribution
/// (degree-proportional favors the hubs). Power iteration to L1 residual
/// < 1e-10 (at most 10^4 sweeps); throws with the last residual otherwise.
CentralityVector personalized_pagerank(const Graph& g, double teleport_prob = 0.15,
                                       PprPreference preference = PprPreference::degree);

}  // namespace mcent
