#include "mcent/sir.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <thread>

#include "mcent/eval.hpp"

namespace mcent {

double epidemic_threshold(const Graph& g, ThresholdFormula formula) {
    if (g.node_count() == 0 || g.edge_count() == 0)
        throw graph_error("epidemic threshold needs a non-empty graph");
    double sum_k = 0.0, sum_k2 = 0.0;
    for (node_t u = 0; u < g.node_count(); ++u) {
        double k = g.degree(u);
        sum_k += k;
        sum_k2 += k * k;
    }
    double mk = sum_k / g.node_count();
    double mk2 = sum_k2 / g.node_count();
    if (formula == ThresholdFormula::hmf) return mk / mk2;
    if (mk2 <= mk)
        throw graph_error("corrected threshold undefined: <k^2> <= <k>");
    return mk / (mk2 - mk);
}

namespace {

// splitmix64; decorrelates the (seed, node, run) triple into a stream seed
std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t stream_seed(std::uint64_t master, node_t node, std::size_t run) {
    std::uint64_t s = mix64(master);
    s = mix64(s ^ (0x632be59bd9b4e019ULL + node));
    s = mix64(s ^ (0x9e6c63d0876a9a47ULL + run));
    return s;
}

}  // namespace

std::uint32_t sir_run(const Graph& g, node_t seed_node, const SirConfig& cfg,
                      std::size_t run_index) {
    if (seed_node >= g.node_count()) throw graph_error("sir seed node out of range");
    std::mt19937_64 rng(stream_seed(cfg.master_seed, seed_node, run_index));
    std::uniform_real_distribution<double> coin(0.0, 1.0);

    enum : std::uint8_t { S, I, R };
    std::vector<std::uint8_t> state(g.node_count(), S);
    std::vector<node_t> infected{seed_node}, next;
    state[seed_node] = I;
    std::uint32_t recovered = 0;

    while (!infected.empty()) {
        next.clear();
        // infections resolve before recovery, so gamma = 1 still spreads
        for (node_t u : infected) {
            for (node_t v : g.neighbors(u)) {
                if (state[v] == S && coin(rng) < cfg.beta) {
                    state[v] = I;
                    next.push_back(v);
                }
            }
        }
        for (node_t u : infected) {
            state[u] = R;
            ++recovered;
        }
        infected.swap(next);
    }
    return recovered;
}

namespace {

void parallel_over(std::size_t count, unsigned threads,
                   const std::function<void(std::size_t, std::size_t)>& block) {
    unsigned hw = threads ? threads : std::thread::hardware_concurrency();
    if (hw <= 1 || count < 2) {
        block(0, count);
        return;
    }
    hw = std::min<std::size_t>(hw, count);
    std::vector<std::thread> pool;
    std::size_t chunk = (count + hw - 1) / hw;
    for (unsigned t = 0; t < hw; ++t) {
        std::size_t lo = t * chunk, hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back(block, lo, hi);
    }
    for (auto& th : pool) th.join();
}

}  // namespace

SirInfluence spreading_influence(const Graph& g, double beta, const SirConfig& cfg,
                                 unsigned threads) {
    SirConfig local = cfg;
    local.beta = beta;
    SirInfluence result;
    result.beta = beta;
    result.runs = cfg.runs;
    result.mean_recovered.assign(g.node_count(), 0.0);

    parallel_over(g.node_count(), threads, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t u = lo; u < hi; ++u) {
            double acc = 0.0;
            for (std::size_t r = 0; r < local.runs; ++r)
                acc += sir_run(g, static_cast<node_t>(u), local, r);
            result.mean_recovered[u] = acc / static_cast<double>(local.runs);
        }
    });
    return result;
}

std::vector<SirSweepRow> sir_correlation_sweep(const Graph& g,
                                               const std::vector<MethodScores>& methods,
                                               const BetaGrid& grid, const SirConfig& cfg,
                                               double beta_th, unsigned threads) {
    std::vector<SirSweepRow> rows;
    for (double frac : grid.fractions) {
        double beta = frac * beta_th;
        SirInfluence inf = spreading_influence(g, beta, cfg, threads);
        for (const auto& m : methods) {
            auto kt = kendall_tau(m.scores, inf.mean_recovered);
            rows.push_back({m.name, frac, beta, kt.tau, kt.degenerate});
        }
    }
    return rows;
}

}  // namespace mcent
