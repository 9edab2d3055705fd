#include "netorg/robustness.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace netorg {

std::optional<int> RobustnessSeries::first_diameter_increase() const {
    for (const auto& s : steps) {
        if (s.lcc_diameter > initial_diameter) return s.step;
    }
    return std::nullopt;
}

std::optional<int> RobustnessSeries::first_disconnection() const {
    for (const auto& s : steps) {
        if (!s.connected) return s.step;
    }
    return std::nullopt;
}

int lcc_diameter(const Graph& g) {
    auto components = g.connected_components();
    if (components.empty()) {
        throw GraphError(GraphErrorCode::EmptyGraph, "lcc_diameter of empty graph");
    }
    const std::vector<NodeId>* largest = &components.front();
    for (const auto& comp : components) {
        if (comp.size() > largest->size()) largest = &comp;
    }
    int best = 0;
    for (NodeId v : *largest) {
        auto dist = g.bfs_distances(v);
        for (NodeId w : *largest) best = std::max(best, dist[w]);
    }
    return best;
}

namespace {

RobustnessSeries run_removals(Graph g, int steps, RemovalMode mode, Rng* rng) {
    if (steps >= g.node_count()) {
        throw std::invalid_argument("robustness: steps must be < node_count");
    }
    RobustnessSeries series;
    series.mode = mode;
    series.initial_diameter = lcc_diameter(g);
    series.initially_connected = g.is_connected();
    series.steps.reserve(steps);

    for (int step = 1; step <= steps; ++step) {
        auto alive = g.nodes();
        NodeId victim;
        if (mode == RemovalMode::Failure) {
            victim = alive[uniform_index(*rng, static_cast<int>(alive.size()))];
        } else {
            victim = alive.front();
            int best_degree = g.degree(victim);
            for (NodeId v : alive) {
                if (g.degree(v) > best_degree) {
                    victim = v;
                    best_degree = g.degree(v);
                }
            }
        }
        g.remove_node(victim);

        RobustnessStep record;
        record.step = step;
        record.removed = victim;
        record.lcc_diameter = lcc_diameter(g);
        record.connected = g.is_connected();
        auto components = g.connected_components();
        size_t largest = 0;
        for (const auto& comp : components) largest = std::max(largest, comp.size());
        record.lcc_size = static_cast<int>(largest);
        series.steps.push_back(record);
    }
    return series;
}

}  // namespace

RobustnessSeries run_failure(Graph g, int steps, Rng& rng) {
    return run_removals(std::move(g), steps, RemovalMode::Failure, &rng);
}

RobustnessSeries run_attack(Graph g, int steps) {
    return run_removals(std::move(g), steps, RemovalMode::Attack, nullptr);
}

void write_robustness_csv(std::ostream& out, const RobustnessSeries& series) {
    out << "step,removed_node,lcc_diameter,connected\n";
    for (const auto& s : series.steps) {
        out << s.step << ',' << s.removed << ',' << s.lcc_diameter << ','
            << (s.connected ? 1 : 0) << '\n';
    }
}

}  // namespace netorg
