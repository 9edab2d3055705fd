#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "netorg/graph.hpp"
#include "netorg/rng.hpp"
#include "netorg/stats.hpp"

namespace netorg {

// Scalar state in [0,1] per node, indexed by node id. Entries of removed
// slots are unused.
using ColorState = std::vector<double>;

// Agreement fitness blows up as a node matches its neighbors; the squared
// neighbor difference is floored at this value to keep it finite.
inline constexpr double kFitnessEpsilon = 1e-12;

// Long horizons push dense networks below double-precision resolution:
// on G(121,1025) the color spread hits the rounding floor (~1e-16) near
// t=120, after which per-node observables are noise. 20 steps keeps every
// network's spread far above the floor while the cluster-level color
// differences are still developing.
inline constexpr int kDefaultFrictionSteps = 20;

// I.i.d. uniform [0,1) colors for every alive node.
ColorState init_colors(const Graph& g, Rng& rng);

// Synchronous update: every node moves halfway toward the mean of its
// neighbors' previous colors. Isolated nodes keep their color. Each new
// color is a convex combination of previous ones, so [min,max] can only
// shrink (the neighbor mean is clamped against float drift past the
// neighbors' own range).
ColorState step_colors(const Graph& g, const ColorState& colors);

// sqrt(k / sum of squared color differences to the k neighbors); the less
// disagreement, the higher. Degree >= 1 required.
double friction_fitness(const Graph& g, const ColorState& colors, NodeId i);

// Mean absolute color difference to every other node. Needs >= 2 nodes.
double colordifference(const Graph& g, const ColorState& colors, NodeId i);

struct FrictionRecord {
    std::vector<NodeId> nodes;
    std::vector<int> degrees;
    std::vector<std::optional<double>> clusterings;  // empty when degree <= 1
    std::vector<std::optional<double>> fitness;      // empty for isolated nodes
    std::vector<double> colordiff;
    ColorState final_colors;

    std::optional<OlsFit> fitness_vs_degree;
    std::optional<OlsFit> fitness_vs_clustering;
    std::optional<OlsFit> colordiff_vs_degree;
    std::optional<OlsFit> colordiff_vs_clustering;

    MeanStd fitness_stats;    // over nodes with defined fitness
    MeanStd colordiff_stats;  // over all nodes
    bool connected = true;    // input connectivity; disconnected runs are flagged

    // Checked after every update step during the run.
    bool colors_in_range = true;        // all colors within [0,1]
    bool spread_non_increasing = true;  // max-min never grew
};

// Random init, t_steps synchronous updates, then per-node observables,
// the four regressions, and the summary statistics.
FrictionRecord run_friction(const Graph& g, int t_steps, Rng& rng);

void write_friction_csv(std::ostream& out, const FrictionRecord& record);
void write_friction_summary_row(std::ostream& out, int replicate,
                                const FrictionRecord& record);
void write_friction_summary_header(std::ostream& out);

}  // namespace netorg
