#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "netorg/graph.hpp"
#include "netorg/rng.hpp"

namespace netorg {

enum class NetworkKind {
    Random,           // G(n, m): repeatedly connect uniform random pairs
    NonHierarchical,  // preferential-attachment growth from a path seed
    Hierarchical,     // deterministic recursive cluster replication
};

std::string to_string(NetworkKind kind);
NetworkKind network_kind_from_string(const std::string& name);

struct GeneratorParams {
    NetworkKind kind = NetworkKind::Random;
    int n = 121;               // target node count (Random, NonHierarchical)
    long long m_edges = 1025;  // total edges (Random)
    int m_attach = 4;          // edges per new node (NonHierarchical)
    int seed_path = 5;         // size of the initial path (NonHierarchical)
    int levels = 4;            // recursion depth (Hierarchical)
    int branching = 4;         // copies per cluster (Hierarchical)
    std::uint64_t rng_seed = 0;
};

// Exactly n nodes and m_edges distinct edges; sampled pairs that collide
// with an existing edge are redrawn.
Graph generate_random(int n, long long m_edges, Rng& rng);

// One draw proportional to current degree. Requires at least one edge.
NodeId sample_by_degree(const Graph& g, Rng& rng);

// Growth from a path of seed_path nodes; every new node attaches to
// m_attach distinct existing nodes, degree-proportionally (collisions are
// redrawn against the degrees frozen at the start of the step). Final edge
// count is (seed_path - 1) + m_attach * (n - seed_path).
Graph generate_ba(int n, int m_attach, int seed_path, Rng& rng);

struct HierarchicalNetwork {
    Graph graph;
    // leaders[k] lists the leader of every level-k cluster, ascending;
    // leaders[0] is all nodes, leaders[levels] the single top leader.
    std::vector<std::vector<NodeId>> leaders;

    NodeId top_leader() const { return leaders.back().front(); }
};

// Deterministic recursive construction: a level-k cluster is `branching`
// copies of a level-(k-1) cluster; the leader of copy 0 becomes the level-k
// leader and is connected to every node of the other copies, and the
// leaders of copies 1..branching-1 are pairwise connected. Level 0 is a
// single node, so level 1 is a complete graph on `branching` nodes.
HierarchicalNetwork generate_hierarchical(int levels, int branching);

// Dispatch on params.kind, drawing from the caller's stream.
Graph generate_network(const GeneratorParams& params, Rng& rng);

// Same, seeding an internal stream from params.rng_seed.
Graph generate_network(const GeneratorParams& params);

}  // namespace netorg
