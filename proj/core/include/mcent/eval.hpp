#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mcent/graph.hpp"

namespace mcent {

/// Descending ranking with explicit tie groups. Ranks use competition
/// ranking: tied nodes share the smallest position, the next distinct score
/// skips the consumed positions (1, 1, 3, ...).
struct RankingList {
    std::vector<node_t> order;       // nodes in descending score, ties by index
    std::vector<std::size_t> rank;   // 1-based competition rank per node
    std::vector<std::size_t> tie_group_sizes;  // n_r per tie group, in order
};

/// Scores within tie_epsilon of each other (chained along the sorted order)
/// fall into one tie group; this guards float noise from splitting true ties.
RankingList rank_nodes(const std::vector<double>& scores, double tie_epsilon = 1e-9);

/// Fraction-of-ties resolution measure:
///   M(R) = (1 - sum_r n_r (n_r - 1) / (n (n - 1)))^2  in [0, 1].
/// 1 for an all-distinct ranking, 0 when every node shares one rank.
double monotonicity(const RankingList& r);

struct KendallResult {
    double tau = 0.0;
    bool degenerate = false;  // all values tied in one list (denominator 0)
};

/// Kendall tau-b with tie corrections:
///   tau = (n_c - n_d) / sqrt((n0 - n1)(n0 - n2)).
/// A pair tied in either list is neither concordant nor discordant.
/// O(n log n) via merge-sort inversion counting.
KendallResult kendall_tau(const std::vector<double>& x, const std::vector<double>& y);

/// Average inverse shortest-path length over ordered pairs; unreachable pairs
/// contribute 0. Complete graph -> 1, edgeless -> 0. Requires n >= 2.
double network_efficiency(const Graph& g);

struct AttackStep {
    std::size_t removed_count = 0;
    std::string removed_label;   // empty for the step-0 baseline row
    std::size_t components = 0;
    double eta = 0.0;
    double nu = 0.0;             // 1 - eta / eta0
};

struct AttackReport {
    std::vector<node_t> removal_order;
    std::vector<AttackStep> steps;  // step 0 = intact graph
};

/// Cumulative node removal following `order`; after each removal records the
/// component count, the residual graph's efficiency eta (computed over the
/// surviving nodes; set original_n_normalization to keep the intact n in the
/// denominator instead) and the decline nu = 1 - eta/eta0.
AttackReport efficiency_decline(const Graph& g, const std::vector<node_t>& order,
                                std::size_t steps,
                                bool original_n_normalization = false);

struct RboParams {
    double p = 0.9;       // persistence in (0, 1)
    std::size_t depth = 0;  // evaluation depth (number of prefix levels)
};

/// Rank-biased overlap as a truncated sum:
///   RBO(X, Y, p) = (1 - p) sum_{d=1}^{depth} p^{d-1} A(X, Y, d)
/// with A the intersection-over-union of the depth-d prefixes. Note the
/// union denominator (not the classical prefix length d).
double rbo(const RankingList& x, const RankingList& y, const RboParams& params);

}  // namespace mcent
