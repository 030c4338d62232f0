#include "mcent/mcentrality.hpp"

#include <cmath>

#include "mcent/kshell.hpp"

namespace mcent {

std::vector<double> delta_d(const Graph& g) {
    const node_t n = g.node_count();
    std::vector<double> out(n, 0.0);
    for (node_t i = 0; i < n; ++i) {
        auto nbrs = g.neighbors(i);
        if (nbrs.empty()) continue;
        double ki = g.degree(i);
        double neighbor_degree_sum = 0.0;
        for (node_t j : nbrs) neighbor_degree_sum += g.degree(j);
        double acc = 0.0;
        for (node_t j : nbrs) acc += std::abs(g.degree(j) - ki);
        out[i] = static_cast<double>(nbrs.size()) * acc / neighbor_degree_sum;
    }
    return out;
}

namespace {

// entropy of the normalized vector, already divided by ln(n); 0 ln 0 := 0
template <typename T>
double normalized_entropy(const std::vector<T>& v, double total, std::size_t n) {
    double e = 0.0;
    for (const T& x : v) {
        double r = static_cast<double>(x) / total;
        if (r > 0.0) e -= r * std::log(r);
    }
    return e / std::log(static_cast<double>(n));
}

}  // namespace

EntropyWeights entropy_weights(const std::vector<node_t>& coreness,
                               const std::vector<double>& dd) {
    if (coreness.size() != dd.size())
        throw graph_error("attribute vectors differ in length");
    const std::size_t n = coreness.size();
    if (n < 2) throw graph_error("entropy weighting needs n >= 2 (ln n = 0 otherwise)");

    EntropyWeights w;
    double sum_ks = 0.0, sum_dd = 0.0;
    for (auto k : coreness) sum_ks += k;
    for (auto d : dd) sum_dd += d;
    w.degenerate_global = sum_ks <= 0.0;
    w.degenerate_local = sum_dd <= 0.0;

    if (w.degenerate_global && w.degenerate_local) {
        w.mu = 0.5;  // edgeless graph: neither attribute ranks anything
        return w;
    }
    if (w.degenerate_local) {
        w.mu = 1.0;
        w.entropy_global = normalized_entropy(coreness, sum_ks, n);
        return w;
    }
    if (w.degenerate_global) {
        w.mu = 0.0;
        w.entropy_local = normalized_entropy(dd, sum_dd, n);
        return w;
    }

    w.entropy_global = normalized_entropy(coreness, sum_ks, n);
    w.entropy_local = normalized_entropy(dd, sum_dd, n);
    w.mu = (1.0 - w.entropy_global) / (2.0 - w.entropy_global - w.entropy_local);
    return w;
}

MCentralityVector m_centrality(const Graph& g, std::optional<double> mu_override) {
    if (mu_override && (*mu_override < 0.0 || *mu_override > 1.0))
        throw graph_error("mu must lie in [0, 1]");

    MCentralityVector result;
    result.coreness = kcore_decomposition(g);
    result.dd = delta_d(g);
    result.weights = entropy_weights(result.coreness, result.dd);
    result.mu_used = mu_override.value_or(result.weights.mu);

    const double mu = result.mu_used;
    result.scores.resize(g.node_count());
    for (node_t i = 0; i < g.node_count(); ++i)
        result.scores[i] = mu * result.coreness[i] + (1.0 - mu) * result.dd[i];
    return result;
}

}  // namespace mcent
