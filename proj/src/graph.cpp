#include "netorg/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace netorg {

NodeId Graph::add_node() {
    adjacency_.emplace_back();
    alive_.push_back(true);
    ++node_count_;
    return static_cast<NodeId>(adjacency_.size()) - 1;
}

void Graph::require_node(NodeId v) const {
    if (v < 0 || v >= static_cast<NodeId>(alive_.size()) || !alive_[v]) {
        throw GraphError(GraphErrorCode::UnknownNode,
                         "unknown node id " + std::to_string(v));
    }
}

void Graph::add_edge(NodeId u, NodeId v) {
    if (u == v) {
        throw GraphError(GraphErrorCode::SelfLoop,
                         "self-loop on node " + std::to_string(u));
    }
    require_node(u);
    require_node(v);
    if (adjacency_[u].count(v)) {
        throw GraphError(GraphErrorCode::DuplicateEdge,
                         "edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") already present");
    }
    adjacency_[u].insert(v);
    adjacency_[v].insert(u);
    ++edge_count_;
}

void Graph::remove_node(NodeId v) {
    require_node(v);
    for (NodeId w : adjacency_[v]) {
        adjacency_[w].erase(v);
        --edge_count_;
    }
    adjacency_[v].clear();
    alive_[v] = false;
    --node_count_;
}

bool Graph::contains(NodeId v) const {
    return v >= 0 && v < static_cast<NodeId>(alive_.size()) && alive_[v];
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    require_node(u);
    require_node(v);
    return adjacency_[u].count(v) > 0;
}

int Graph::degree(NodeId v) const {
    require_node(v);
    return static_cast<int>(adjacency_[v].size());
}

const std::set<NodeId>& Graph::neighbors(NodeId v) const {
    require_node(v);
    return adjacency_[v];
}

std::vector<NodeId> Graph::nodes() const {
    std::vector<NodeId> out;
    out.reserve(node_count_);
    for (NodeId v = 0; v < static_cast<NodeId>(alive_.size()); ++v) {
        if (alive_[v]) out.push_back(v);
    }
    return out;
}

std::vector<std::pair<NodeId, NodeId>> Graph::edges() const {
    std::vector<std::pair<NodeId, NodeId>> out;
    out.reserve(edge_count_);
    for (NodeId u = 0; u < static_cast<NodeId>(alive_.size()); ++u) {
        if (!alive_[u]) continue;
        for (NodeId v : adjacency_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

std::optional<double> Graph::clustering_coefficient(NodeId v) const {
    require_node(v);
    const auto& nbrs = adjacency_[v];
    const auto k = static_cast<long long>(nbrs.size());
    if (k <= 1) return std::nullopt;
    long long links = 0;
    for (auto it = nbrs.begin(); it != nbrs.end(); ++it) {
        auto jt = it;
        for (++jt; jt != nbrs.end(); ++jt) {
            if (adjacency_[*it].count(*jt)) ++links;
        }
    }
    return static_cast<double>(links) / (static_cast<double>(k * (k - 1)) / 2.0);
}

std::vector<int> Graph::bfs_distances(NodeId src) const {
    require_node(src);
    std::vector<int> dist(alive_.size(), -1);
    std::deque<NodeId> queue;
    dist[src] = 0;
    queue.push_back(src);
    while (!queue.empty()) {
        NodeId u = queue.front();
        queue.pop_front();
        for (NodeId w : adjacency_[u]) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

Distance Graph::shortest_path_length(NodeId u, NodeId v) const {
    require_node(u);
    require_node(v);
    if (u == v) return 0;
    auto dist = bfs_distances(u);
    if (dist[v] < 0) return std::nullopt;
    return dist[v];
}

Distance Graph::diameter() const {
    if (node_count_ == 0) {
        throw GraphError(GraphErrorCode::EmptyGraph, "diameter of empty graph");
    }
    int best = 0;
    for (NodeId u = 0; u < static_cast<NodeId>(alive_.size()); ++u) {
        if (!alive_[u]) continue;
        auto dist = bfs_distances(u);
        for (NodeId v = 0; v < static_cast<NodeId>(alive_.size()); ++v) {
            if (!alive_[v]) continue;
            if (dist[v] < 0) return std::nullopt;
            best = std::max(best, dist[v]);
        }
    }
    return best;
}

bool Graph::is_connected() const {
    if (node_count_ == 0) {
        throw GraphError(GraphErrorCode::EmptyGraph, "connectivity of empty graph");
    }
    NodeId src = -1;
    for (NodeId v = 0; v < static_cast<NodeId>(alive_.size()); ++v) {
        if (alive_[v]) { src = v; break; }
    }
    auto dist = bfs_distances(src);
    int reached = 0;
    for (NodeId v = 0; v < static_cast<NodeId>(alive_.size()); ++v) {
        if (alive_[v] && dist[v] >= 0) ++reached;
    }
    return reached == node_count_;
}

std::vector<std::vector<NodeId>> Graph::connected_components() const {
    std::vector<std::vector<NodeId>> components;
    std::vector<bool> seen(alive_.size(), false);
    for (NodeId v = 0; v < static_cast<NodeId>(alive_.size()); ++v) {
        if (!alive_[v] || seen[v]) continue;
        auto dist = bfs_distances(v);
        std::vector<NodeId> comp;
        for (NodeId w = 0; w < static_cast<NodeId>(alive_.size()); ++w) {
            if (alive_[w] && dist[w] >= 0) {
                seen[w] = true;
                comp.push_back(w);
            }
        }
        components.push_back(std::move(comp));
    }
    return components;
}

void write_edge_list(const Graph& g, std::ostream& out) {
    for (const auto& [u, v] : g.edges()) {
        out << u << ' ' << v << '\n';
    }
}

Graph read_edge_list(std::istream& in) {
    std::vector<std::pair<NodeId, NodeId>> pairs;
    NodeId max_id = -1;
    NodeId u, v;
    while (in >> u >> v) {
        pairs.emplace_back(u, v);
        max_id = std::max({max_id, u, v});
    }
    Graph g;
    for (NodeId i = 0; i <= max_id; ++i) g.add_node();
    for (const auto& [a, b] : pairs) g.add_edge(a, b);
    return g;
}

void save_edge_list(const Graph& g, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    write_edge_list(g, out);
}

Graph load_edge_list(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    return read_edge_list(in);
}

}  // namespace netorg
