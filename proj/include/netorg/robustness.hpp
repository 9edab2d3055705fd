#pragma once

#include <iosfwd>
#include <vector>

#include "netorg/graph.hpp"
#include "netorg/rng.hpp"

namespace netorg {

enum class RemovalMode { Failure, Attack };

struct RobustnessStep {
    int step = 0;           // 1-based
    NodeId removed = -1;
    int lcc_diameter = 0;   // diameter of the largest connected component
    bool connected = false;
    int lcc_size = 0;
};

struct RobustnessSeries {
    RemovalMode mode = RemovalMode::Failure;
    int initial_diameter = 0;  // LCC diameter before any removal
    bool initially_connected = true;
    std::vector<RobustnessStep> steps;

    // First step whose LCC diameter exceeds the initial one, or nullopt.
    std::optional<int> first_diameter_increase() const;
    // First step recorded as disconnected, or nullopt.
    std::optional<int> first_disconnection() const;
};

// Diameter of the largest connected component (ties broken by lowest
// contained id); 0 when the component is a single node.
int lcc_diameter(const Graph& g);

// Remove `steps` uniformly random surviving nodes, recording the largest
// component's diameter and connectivity after each removal. The graph is
// taken by value: runs never mutate the caller's copy.
RobustnessSeries run_failure(Graph g, int steps, Rng& rng);

// Remove the surviving node of maximum current degree each step (ties go
// to the lowest id), recomputing degrees after every removal.
RobustnessSeries run_attack(Graph g, int steps);

void write_robustness_csv(std::ostream& out, const RobustnessSeries& series);

}  // namespace netorg
