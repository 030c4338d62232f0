#include "mcent/eval.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

namespace mcent {

RankingList rank_nodes(const std::vector<double>& scores, double tie_epsilon) {
    RankingList r;
    const std::size_t n = scores.size();
    r.order.resize(n);
    std::iota(r.order.begin(), r.order.end(), node_t{0});
    std::sort(r.order.begin(), r.order.end(), [&](node_t a, node_t b) {
        if (scores[a] != scores[b]) return scores[a] > scores[b];
        return a < b;
    });

    r.rank.assign(n, 0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        // chain ties: consecutive sorted scores within epsilon share a group
        while (j + 1 < n &&
               scores[r.order[j]] - scores[r.order[j + 1]] <= tie_epsilon)
            ++j;
        for (std::size_t k = i; k <= j; ++k) r.rank[r.order[k]] = i + 1;
        r.tie_group_sizes.push_back(j - i + 1);
        i = j + 1;
    }
    return r;
}

double monotonicity(const RankingList& r) {
    const std::size_t n = r.rank.size();
    if (n < 2) throw graph_error("monotonicity needs n >= 2");
    double tied = 0.0;
    for (std::size_t nr : r.tie_group_sizes)
        tied += static_cast<double>(nr) * (static_cast<double>(nr) - 1.0);
    double f = 1.0 - tied / (static_cast<double>(n) * (static_cast<double>(n) - 1.0));
    return f * f;
}

namespace {

// counts inversions by pairs while merge-sorting ys
std::uint64_t merge_count(std::vector<double>& v, std::vector<double>& tmp,
                          std::size_t lo, std::size_t hi) {
    if (hi - lo < 2) return 0;
    std::size_t mid = (lo + hi) / 2;
    std::uint64_t cnt = merge_count(v, tmp, lo, mid) + merge_count(v, tmp, mid, hi);
    std::size_t a = lo, b = mid, o = lo;
    while (a < mid && b < hi) {
        if (v[b] < v[a]) {
            cnt += mid - a;
            tmp[o++] = v[b++];
        } else {
            tmp[o++] = v[a++];
        }
    }
    while (a < mid) tmp[o++] = v[a++];
    while (b < hi) tmp[o++] = v[b++];
    std::copy(tmp.begin() + lo, tmp.begin() + hi, v.begin() + lo);
    return cnt;
}

double tie_pair_sum(const std::vector<double>& sorted_vals) {
    double s = 0.0;
    std::size_t i = 0;
    while (i < sorted_vals.size()) {
        std::size_t j = i;
        while (j + 1 < sorted_vals.size() && sorted_vals[j + 1] == sorted_vals[i]) ++j;
        double t = static_cast<double>(j - i + 1);
        s += t * (t - 1.0) / 2.0;
        i = j + 1;
    }
    return s;
}

}  // namespace

KendallResult kendall_tau(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw graph_error("kendall_tau: length mismatch");
    const std::size_t n = x.size();
    if (n < 2) throw graph_error("kendall_tau needs n >= 2");

    // sort by x asc, y asc as tiebreak
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (x[a] != x[b]) return x[a] < x[b];
        return y[a] < y[b];
    });

    const double n0 = static_cast<double>(n) * (n - 1) / 2.0;

    std::vector<double> xs(n), ys(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = x[idx[i]];
        ys[i] = y[idx[i]];
    }
    double n1 = tie_pair_sum(xs);
    std::vector<double> ys_sorted = ys;
    std::sort(ys_sorted.begin(), ys_sorted.end());
    double n2 = tie_pair_sum(ys_sorted);

    // pairs tied in both x and y
    double n3 = 0.0;
    {
        std::size_t i = 0;
        while (i < n) {
            std::size_t j = i;
            while (j + 1 < n && xs[j + 1] == xs[i]) ++j;
            std::vector<double> block(ys.begin() + i, ys.begin() + j + 1);
            std::sort(block.begin(), block.end());
            n3 += tie_pair_sum(block);
            i = j + 1;
        }
    }

    // discordant pairs = inversions of y in x-order, not counting x-ties
    std::vector<double> ycopy = ys, tmp(n);
    double swaps = static_cast<double>(merge_count(ycopy, tmp, 0, n));
    // within equal-x blocks ys were sorted ascending, so ties in x produced
    // no inversions; `swaps` counts pairs with x strictly increasing and y
    // strictly decreasing, i.e. the discordant pairs.
    double nd = swaps;
    double nc = n0 - n1 - n2 + n3 - nd;

    KendallResult r;
    double denom = std::sqrt((n0 - n1) * (n0 - n2));
    if (denom <= 0.0) {
        r.degenerate = true;
        r.tau = 0.0;
        return r;
    }
    r.tau = (nc - nd) / denom;
    return r;
}

double network_efficiency(const Graph& g) {
    const node_t n = g.node_count();
    if (n < 2) throw graph_error("efficiency needs n >= 2");
    double sum = 0.0;
    for (node_t s = 0; s < n; ++s) {
        auto dist = bfs_distances(g, s);
        for (node_t t = 0; t < n; ++t)
            if (t != s && dist[t] != kUnreachable) sum += 1.0 / dist[t];
    }
    return sum / (static_cast<double>(n) * (static_cast<double>(n) - 1.0));
}

AttackReport efficiency_decline(const Graph& g, const std::vector<node_t>& order,
                                std::size_t steps, bool original_n_normalization) {
    if (order.size() < steps) throw graph_error("removal order shorter than steps");
    AttackReport report;
    report.removal_order.assign(order.begin(), order.begin() + steps);

    const double n0 = g.node_count();
    auto eta_of = [&](const Graph& h) {
        if (h.node_count() < 2) return 0.0;
        double eta = network_efficiency(h);
        if (original_n_normalization) {
            double nh = h.node_count();
            eta *= (nh * (nh - 1.0)) / (n0 * (n0 - 1.0));
        }
        return eta;
    };

    double eta0 = eta_of(g);
    report.steps.push_back({0, "", connected_components(g).count, eta0, 0.0});

    NodeSet victims;
    for (std::size_t k = 0; k < steps; ++k) {
        victims.insert(order[k]);
        Graph h = remove_nodes(g, victims);
        double eta = eta_of(h);
        double nu = eta0 > 0.0 ? 1.0 - eta / eta0 : 0.0;
        report.steps.push_back({k + 1, g.label(order[k]),
                                connected_components(h).count, eta, nu});
    }
    return report;
}

double rbo(const RankingList& x, const RankingList& y, const RboParams& params) {
    if (params.p <= 0.0 || params.p >= 1.0) throw graph_error("rbo: p must be in (0,1)");
    if (params.depth == 0) throw graph_error("rbo: depth must be positive");
    const std::size_t depth = std::min({params.depth, x.order.size(), y.order.size()});

    std::unordered_set<node_t> px, py;
    double sum = 0.0, w = 1.0;  // w = p^{d-1}
    std::size_t overlap = 0;
    for (std::size_t d = 1; d <= depth; ++d) {
        node_t xa = x.order[d - 1], ya = y.order[d - 1];
        if (xa == ya) {
            ++overlap;
        } else {
            if (py.count(xa)) ++overlap;
            if (px.count(ya)) ++overlap;
        }
        px.insert(xa);
        py.insert(ya);
        double uni = static_cast<double>(2 * d - overlap);
        sum += w * static_cast<double>(overlap) / uni;
        w *= params.p;
    }
    return (1.0 - params.p) * sum;
}

}  // namespace mcent
