#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace mcent {

using node_t = std::uint32_t;

class graph_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Immutable simple undirected unweighted graph in CSR form.
/// Node indices are dense [0, n); original string labels are kept alongside.
class Graph {
public:
    Graph() = default;

    /// Builds from an edge list over dense indices. Self-loops and duplicate
    /// edges are dropped silently here; use parse_edge_list for counted drops.
    Graph(node_t n, std::vector<std::pair<node_t, node_t>> edges,
          std::vector<std::string> labels = {});

    node_t node_count() const { return n_; }
    std::size_t edge_count() const { return adjacency_.size() / 2; }

    node_t degree(node_t u) const { return offsets_[u + 1] - offsets_[u]; }

    std::span<const node_t> neighbors(node_t u) const {
        return {adjacency_.data() + offsets_[u], adjacency_.data() + offsets_[u + 1]};
    }

    bool has_edge(node_t u, node_t v) const;

    const std::string& label(node_t u) const { return labels_[u]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<node_t> index_of(const std::string& label) const;

private:
    node_t n_ = 0;
    std::vector<node_t> offsets_{0};
    std::vector<node_t> adjacency_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, node_t> label_index_;
};

using NodeSet = std::unordered_set<node_t>;

enum class ThresholdFormula { hmf, hmf_corrected };

/// Summary statistics as reported per network: node/edge counts, degree
/// moments, top coreness, giant component size and the epidemic threshold.
struct GraphStats {
    node_t n = 0;
    std::size_t m = 0;
    double mean_degree = 0.0;
    node_t max_degree = 0;
    double mean_degree_sq = 0.0;
    node_t max_coreness = 0;
    node_t giant_size = 0;
    double beta_th = 0.0;
};

struct ParseReport {
    Graph graph;
    std::size_t dropped_self_loops = 0;
    std::size_t dropped_duplicates = 0;
};

/// Reads a whitespace-separated edge list. Lines starting with '#' or '%'
/// are comments; the first two tokens of a line are endpoint labels and any
/// further tokens (weights etc.) are ignored. Duplicate edges and self-loops
/// are dropped and counted. Throws graph_error with a line number on a
/// one-token line, and on entirely empty input.
ParseReport parse_edge_list(std::istream& in);
ParseReport parse_edge_list_file(const std::string& path);

/// Writes "label label" lines; parse(write(g)) reproduces the node/edge sets.
void write_edge_list(const Graph& g, std::ostream& out);

struct ComponentPartition {
    std::size_t count = 0;
    std::vector<node_t> component_of;  // component id per node
};

ComponentPartition connected_components(const Graph& g);

/// Induced subgraph on the largest component (ties broken by the smallest
/// contained node index). Labels are preserved. Throws on an empty graph.
Graph largest_connected_component(const Graph& g);

/// Induced subgraph on the complement of `victims`. Surviving nodes keep
/// their labels; survivors isolated by the removal are retained.
Graph remove_nodes(const Graph& g, const NodeSet& victims);

constexpr std::int32_t kUnreachable = -1;

/// Hop distances from `source`; kUnreachable marks nodes beyond max_depth or
/// not reachable at all.
std::vector<std::int32_t> bfs_distances(const Graph& g, node_t source,
                                        std::optional<node_t> max_depth = std::nullopt);

GraphStats graph_stats(const Graph& g,
                       ThresholdFormula formula = ThresholdFormula::hmf_corrected);

}  // namespace mcent
