#include "netorg/generators.hpp"

#include <algorithm>
#include <stdexcept>

namespace netorg {

std::string to_string(NetworkKind kind) {
    switch (kind) {
        case NetworkKind::Random: return "random";
        case NetworkKind::NonHierarchical: return "non-hierarchical";
        case NetworkKind::Hierarchical: return "hierarchical";
    }
    return "unknown";
}

NetworkKind network_kind_from_string(const std::string& name) {
    if (name == "random") return NetworkKind::Random;
    if (name == "non-hierarchical" || name == "ba" || name == "scale-free") {
        return NetworkKind::NonHierarchical;
    }
    if (name == "hierarchical") return NetworkKind::Hierarchical;
    throw std::invalid_argument("unknown network kind: " + name);
}

Graph generate_random(int n, long long m_edges, Rng& rng) {
    if (n < 1) throw std::invalid_argument("generate_random: n must be >= 1");
    const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
    if (m_edges < 0 || m_edges > max_edges) {
        throw std::invalid_argument("generate_random: m_edges out of range");
    }
    Graph g;
    for (int i = 0; i < n; ++i) g.add_node();
    long long placed = 0;
    while (placed < m_edges) {
        NodeId u = uniform_index(rng, n);
        NodeId v = uniform_index(rng, n);
        if (u == v || g.has_edge(u, v)) continue;
        g.add_edge(u, v);
        ++placed;
    }
    return g;
}

NodeId sample_by_degree(const Graph& g, Rng& rng) {
    const long long total = 2LL * g.edge_count();
    if (total == 0) {
        throw std::invalid_argument("sample_by_degree: graph has no edges");
    }
    // Draw a threshold in [0, total) and walk the degree prefix sums.
    const auto t = static_cast<long long>(
        uniform_below(rng, static_cast<std::uint64_t>(total)));
    long long acc = 0;
    NodeId last = -1;
    for (NodeId v : g.nodes()) {
        acc += g.degree(v);
        last = v;
        if (t < acc) return v;
    }
    return last;  // not reached: prefix sums cover [0, total)
}

Graph generate_ba(int n, int m_attach, int seed_path, Rng& rng) {
    if (seed_path < 2) throw std::invalid_argument("generate_ba: seed_path must be >= 2");
    if (m_attach < 1 || m_attach > seed_path) {
        throw std::invalid_argument("generate_ba: need 1 <= m_attach <= seed_path");
    }
    if (n < seed_path) throw std::invalid_argument("generate_ba: n must be >= seed_path");

    Graph g;
    for (int i = 0; i < seed_path; ++i) g.add_node();
    for (int i = 0; i + 1 < seed_path; ++i) g.add_edge(i, i + 1);

    std::vector<long long> degree(static_cast<size_t>(n), 0);
    for (int i = 0; i < seed_path; ++i) degree[i] = g.degree(i);

    for (int step = seed_path; step < n; ++step) {
        // Degrees frozen at the start of the step; collisions redrawn.
        const long long total = 2LL * g.edge_count();
        std::vector<NodeId> targets;
        targets.reserve(m_attach);
        while (static_cast<int>(targets.size()) < m_attach) {
            const auto t = static_cast<long long>(
                uniform_below(rng, static_cast<std::uint64_t>(total)));
            long long acc = 0;
            NodeId pick = -1;
            for (NodeId v = 0; v < step; ++v) {
                acc += degree[v];
                if (t < acc) { pick = v; break; }
            }
            if (std::find(targets.begin(), targets.end(), pick) != targets.end()) {
                continue;
            }
            targets.push_back(pick);
        }
        NodeId fresh = g.add_node();
        for (NodeId v : targets) {
            g.add_edge(fresh, v);
            ++degree[v];
        }
        degree[fresh] = m_attach;
    }
    return g;
}

namespace {

long long checked_power(int base, int exponent) {
    long long value = 1;
    for (int i = 0; i < exponent; ++i) {
        value *= base;
        if (value > 1'000'000) {
            throw std::invalid_argument("generate_hierarchical: network too large");
        }
    }
    return value;
}

}  // namespace

HierarchicalNetwork generate_hierarchical(int levels, int branching) {
    if (levels < 1) throw std::invalid_argument("generate_hierarchical: levels must be >= 1");
    if (branching < 2) throw std::invalid_argument("generate_hierarchical: branching must be >= 2");
    const long long total_nodes = checked_power(branching, levels);

    HierarchicalNetwork net;
    for (long long i = 0; i < total_nodes; ++i) net.graph.add_node();

    // Clusters are contiguous id blocks; the leader of a block is its first
    // id, which makes the leader of copy 0 the leader of the merged cluster.
    for (int level = 1; level <= levels; ++level) {
        const long long block = checked_power(branching, level);
        const long long sub = block / branching;
        for (long long start = 0; start < total_nodes; start += block) {
            const NodeId leader = static_cast<NodeId>(start);
            for (long long v = start + sub; v < start + block; ++v) {
                if (!net.graph.has_edge(leader, static_cast<NodeId>(v))) {
                    net.graph.add_edge(leader, static_cast<NodeId>(v));
                }
            }
            for (int i = 1; i < branching; ++i) {
                for (int j = i + 1; j < branching; ++j) {
                    net.graph.add_edge(static_cast<NodeId>(start + i * sub),
                                       static_cast<NodeId>(start + j * sub));
                }
            }
        }
    }

    net.leaders.resize(levels + 1);
    for (int level = 0; level <= levels; ++level) {
        const long long block = checked_power(branching, level);
        for (long long start = 0; start < total_nodes; start += block) {
            net.leaders[level].push_back(static_cast<NodeId>(start));
        }
    }
    return net;
}

Graph generate_network(const GeneratorParams& params, Rng& rng) {
    switch (params.kind) {
        case NetworkKind::Random:
            return generate_random(params.n, params.m_edges, rng);
        case NetworkKind::NonHierarchical:
            return generate_ba(params.n, params.m_attach, params.seed_path, rng);
        case NetworkKind::Hierarchical:
            return generate_hierarchical(params.levels, params.branching).graph;
    }
    throw std::invalid_argument("generate_network: unknown kind");
}

Graph generate_network(const GeneratorParams& params) {
    Rng rng = make_rng(params.rng_seed);
    return generate_network(params, rng);
}

}  // namespace netorg
