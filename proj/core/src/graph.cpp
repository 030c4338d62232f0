#include "mcent/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "mcent/kshell.hpp"
#include "mcent/sir.hpp"

namespace mcent {

Graph::Graph(node_t n, std::vector<std::pair<node_t, node_t>> edges,
             std::vector<std::string> labels)
    : n_(n) {
    if (labels.empty()) {
        labels_.reserve(n);
        for (node_t i = 0; i < n; ++i) labels_.push_back(std::to_string(i));
    } else {
        if (labels.size() != n) throw graph_error("label count does not match node count");
        labels_ = std::move(labels);
    }
    for (node_t i = 0; i < n_; ++i) label_index_.emplace(labels_[i], i);

    // normalize, dedup, and build CSR
    for (auto& [u, v] : edges) {
        if (u >= n_ || v >= n_) throw graph_error("edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    std::erase_if(edges, [](const auto& e) { return e.first == e.second; });

    std::vector<node_t> deg(n_, 0);
    for (const auto& [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    offsets_.assign(n_ + 1, 0);
    for (node_t i = 0; i < n_; ++i) offsets_[i + 1] = offsets_[i] + deg[i];
    adjacency_.resize(offsets_[n_]);
    std::vector<node_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (const auto& [u, v] : edges) {
        adjacency_[cursor[u]++] = v;
        adjacency_[cursor[v]++] = u;
    }
    for (node_t i = 0; i < n_; ++i)
        std::sort(adjacency_.begin() + offsets_[i], adjacency_.begin() + offsets_[i + 1]);
}

bool Graph::has_edge(node_t u, node_t v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<node_t> Graph::index_of(const std::string& label) const {
    auto it = label_index_.find(label);
    if (it == label_index_.end()) return std::nullopt;
    return it->second;
}

ParseReport parse_edge_list(std::istream& in) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, node_t> index;
    auto intern = [&](const std::string& s) {
        auto it = index.find(s);
        if (it != index.end()) return it->second;
        node_t id = static_cast<node_t>(labels.size());
        labels.push_back(s);
        index.emplace(s, id);
        return id;
    };

    std::vector<std::pair<node_t, node_t>> edges;
    std::set<std::pair<node_t, node_t>> seen;
    ParseReport report;

    std::string line;
    std::size_t line_no = 0;
    bool saw_content = false;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string a, b;
        if (!(ls >> a)) continue;  // blank line
        if (a[0] == '#' || a[0] == '%') continue;
        saw_content = true;
        if (!(ls >> b)) {
            throw graph_error("parse error at line " + std::to_string(line_no) +
                              ": expected two labels, got one token");
        }
        node_t u = intern(a), v = intern(b);
        if (u == v) {
            ++report.dropped_self_loops;
            continue;
        }
        auto key = std::minmax(u, v);
        if (!seen.insert({key.first, key.second}).second) {
            ++report.dropped_duplicates;
            continue;
        }
        edges.push_back({u, v});
    }
    if (!saw_content) throw graph_error("empty input: no edges or nodes found");

    const auto n = static_cast<node_t>(labels.size());
    report.graph = Graph(n, std::move(edges), std::move(labels));
    return report;
}

ParseReport parse_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw graph_error("cannot open edge list: " + path);
    return parse_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    for (node_t u = 0; u < g.node_count(); ++u)
        for (node_t v : g.neighbors(u))
            if (u < v) out << g.label(u) << '\t' << g.label(v) << '\n';
}

ComponentPartition connected_components(const Graph& g) {
    ComponentPartition part;
    part.component_of.assign(g.node_count(), 0);
    std::vector<bool> visited(g.node_count(), false);
    std::vector<node_t> stack;
    for (node_t s = 0; s < g.node_count(); ++s) {
        if (visited[s]) continue;
        auto comp = static_cast<node_t>(part.count++);
        visited[s] = true;
        stack.push_back(s);
        while (!stack.empty()) {
            node_t u = stack.back();
            stack.pop_back();
            part.component_of[u] = comp;
            for (node_t v : g.neighbors(u)) {
                if (!visited[v]) {
                    visited[v] = true;
                    stack.push_back(v);
                }
            }
        }
    }
    return part;
}

namespace {

Graph induced_subgraph(const Graph& g, const std::vector<bool>& keep) {
    std::vector<node_t> remap(g.node_count(), 0);
    std::vector<std::string> labels;
    node_t nn = 0;
    for (node_t u = 0; u < g.node_count(); ++u) {
        if (keep[u]) {
            remap[u] = nn++;
            labels.push_back(g.label(u));
        }
    }
    std::vector<std::pair<node_t, node_t>> edges;
    for (node_t u = 0; u < g.node_count(); ++u) {
        if (!keep[u]) continue;
        for (node_t v : g.neighbors(u))
            if (u < v && keep[v]) edges.push_back({remap[u], remap[v]});
    }
    return Graph(nn, std::move(edges), std::move(labels));
}

}  // namespace

Graph largest_connected_component(const Graph& g) {
    if (g.node_count() == 0) throw graph_error("empty graph has no components");
    auto part = connected_components(g);
    std::vector<std::size_t> size(part.count, 0);
    std::vector<node_t> first_member(part.count, g.node_count());
    for (node_t u = 0; u < g.node_count(); ++u) {
        auto c = part.component_of[u];
        ++size[c];
        first_member[c] = std::min(first_member[c], u);
    }
    std::size_t best = 0;
    for (std::size_t c = 1; c < part.count; ++c) {
        if (size[c] > size[best] ||
            (size[c] == size[best] && first_member[c] < first_member[best]))
            best = c;
    }
    std::vector<bool> keep(g.node_count(), false);
    for (node_t u = 0; u < g.node_count(); ++u)
        keep[u] = part.component_of[u] == best;
    return induced_subgraph(g, keep);
}

Graph remove_nodes(const Graph& g, const NodeSet& victims) {
    for (node_t v : victims)
        if (v >= g.node_count()) throw graph_error("victim node out of range");
    std::vector<bool> keep(g.node_count(), true);
    for (node_t v : victims) keep[v] = false;
    return induced_subgraph(g, keep);
}

std::vector<std::int32_t> bfs_distances(const Graph& g, node_t source,
                                        std::optional<node_t> max_depth) {
    if (source >= g.node_count()) throw graph_error("bfs source out of range");
    std::vector<std::int32_t> dist(g.node_count(), kUnreachable);
    std::vector<node_t> frontier{source}, next;
    dist[source] = 0;
    std::int32_t depth = 0;
    while (!frontier.empty()) {
        if (max_depth && depth >= static_cast<std::int32_t>(*max_depth)) break;
        ++depth;
        next.clear();
        for (node_t u : frontier) {
            for (node_t v : g.neighbors(u)) {
                if (dist[v] == kUnreachable) {
                    dist[v] = depth;
                    next.push_back(v);
                }
            }
        }
        frontier.swap(next);
    }
    return dist;
}

GraphStats graph_stats(const Graph& g, ThresholdFormula formula) {
    if (g.node_count() == 0) throw graph_error("stats of an empty graph");
    GraphStats s;
    s.n = g.node_count();
    s.m = g.edge_count();
    double sum_k = 0.0, sum_k2 = 0.0;
    for (node_t u = 0; u < s.n; ++u) {
        double k = g.degree(u);
        sum_k += k;
        sum_k2 += k * k;
        s.max_degree = std::max(s.max_degree, g.degree(u));
    }
    s.mean_degree = sum_k / s.n;
    s.mean_degree_sq = sum_k2 / s.n;

    auto core = kcore_decomposition(g);
    s.max_coreness = core.empty() ? 0 : *std::max_element(core.begin(), core.end());

    auto part = connected_components(g);
    std::vector<std::size_t> size(part.count, 0);
    for (node_t u = 0; u < s.n; ++u) ++size[part.component_of[u]];
    s.giant_size = static_cast<node_t>(*std::max_element(size.begin(), size.end()));

    s.beta_th = epidemic_threshold(g, formula);
    return s;
}

}  // namespace mcent
