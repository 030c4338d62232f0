#pragma once

#include <cstdint>
#include <vector>

#include "mcent/graph.hpp"

namespace mcent {

struct SirConfig {
    double beta = 0.1;             // infection probability per contact per step
    std::size_t runs = 100;        // diffusion processes per seed node
    std::uint64_t master_seed = 0;
    // gamma is fixed at 1: an infected node recovers right after its
    // infection attempts, so each node is infectious for exactly one step.
};

struct SirInfluence {
    std::vector<double> mean_recovered;  // per node, averaged over runs
    double beta = 0.0;
    std::size_t runs = 0;
};

struct BetaGrid {
    std::vector<double> fractions{0.2, 0.4, 0.6, 0.8, 1.0, 1.2, 1.4, 1.6};
};

/// Mean-field epidemic threshold. hmf: <k>/<k^2>; hmf_corrected:
/// <k>/(<k^2> - <k>). Throws when the corrected denominator is not positive
/// (near-empty graphs).
double epidemic_threshold(const Graph& g,
                          ThresholdFormula formula = ThresholdFormula::hmf_corrected);

/// One synchronous-update SIR outbreak from seed_node; returns |R| at
/// extinction. Every infected node tries each susceptible neighbor with
/// probability beta, then recovers. The RNG stream is derived from
/// (master_seed, seed_node, run_index) only, so the result is reproducible
/// bit-for-bit regardless of execution order or thread count.
std::uint32_t sir_run(const Graph& g, node_t seed_node, const SirConfig& cfg,
                      std::size_t run_index);

/// Mean of cfg.runs independent outbreaks per node. Parallel over nodes;
/// determinism comes from per-run seeding, not execution order.
SirInfluence spreading_influence(const Graph& g, double beta, const SirConfig& cfg,
                                 unsigned threads = 0);

struct SirSweepRow {
    std::string method;
    double beta_fraction = 0.0;
    double beta = 0.0;
    double tau = 0.0;
    bool degenerate = false;
};

struct MethodScores {
    std::string name;
    std::vector<double> scores;
};

/// Kendall tau between each centrality vector and the per-node SIR influence
/// at each beta = fraction * beta_th.
std::vector<SirSweepRow> sir_correlation_sweep(const Graph& g,
                                               const std::vector<MethodScores>& methods,
                                               const BetaGrid& grid, const SirConfig& cfg,
                                               double beta_th, unsigned threads = 0);

}  // namespace mcent
