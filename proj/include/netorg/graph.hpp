#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace netorg {

using NodeId = int;

// Hop count between two nodes; std::nullopt means no path exists.
using Distance = std::optional<int>;

enum class GraphErrorCode {
    SelfLoop,
    DuplicateEdge,
    UnknownNode,
    EmptyGraph,
};

class GraphError : public std::runtime_error {
public:
    GraphError(GraphErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    GraphErrorCode code() const { return code_; }

private:
    GraphErrorCode code_;
};

// Undirected simple graph. Node ids are assigned sequentially and stay
// stable across removals (removed slots are tombstoned, never reused), so
// per-node time series survive deletion experiments.
class Graph {
public:
    Graph() = default;

    NodeId add_node();
    void add_edge(NodeId u, NodeId v);
    void remove_node(NodeId v);

    bool contains(NodeId v) const;
    bool has_edge(NodeId u, NodeId v) const;
    int degree(NodeId v) const;
    const std::set<NodeId>& neighbors(NodeId v) const;

    int node_count() const { return node_count_; }
    int edge_count() const { return edge_count_; }

    // Alive node ids, ascending.
    std::vector<NodeId> nodes() const;
    // Edges as (u, v) pairs with u < v, lexicographically sorted.
    std::vector<std::pair<NodeId, NodeId>> edges() const;

    // Fraction of connected neighbor pairs; nullopt when degree <= 1.
    std::optional<double> clustering_coefficient(NodeId v) const;

    Distance shortest_path_length(NodeId u, NodeId v) const;
    Distance diameter() const;
    bool is_connected() const;
    std::vector<std::vector<NodeId>> connected_components() const;

    // BFS hop distances from src, indexed by node id; -1 marks unreachable
    // or dead slots.
    std::vector<int> bfs_distances(NodeId src) const;

private:
    void require_node(NodeId v) const;

    std::vector<std::set<NodeId>> adjacency_;
    std::vector<bool> alive_;
    int node_count_ = 0;
    int edge_count_ = 0;
};

// Edge-list text format: one "u v" pair per line, whitespace-separated,
// unordered pairs, no duplicates. Node ids 0..max_id are created on read.
void write_edge_list(const Graph& g, std::ostream& out);
Graph read_edge_list(std::istream& in);
void save_edge_list(const Graph& g, const std::filesystem::path& path);
Graph load_edge_list(const std::filesystem::path& path);

}  // namespace netorg
