#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "netorg/graph.hpp"
#include "netorg/rng.hpp"
#include "netorg/stats.hpp"

namespace netorg {

enum class SynergyMode { Propagation, NonPropagation };

// Binary vector over the product space.
using ProductBits = std::vector<std::uint8_t>;

struct ProductSpace {
    int n_products = 0;
    std::vector<int> production;  // bijection: product k turns into production[k]
};

struct AgentVectors {
    ProductBits need;     // exactly m ones, preserved by swap mutation
    ProductBits food;     // products actually acquired this round
    ProductBits garbage;  // food relabeled through the production permutation
};

struct SynergyParams {
    SynergyMode mode = SynergyMode::Propagation;
    int t_steps = 30;
    // 10 products with 5 needs saturates the product space fast enough that
    // the mean-fitness trace plateaus within 30 rounds on 121-node networks;
    // with 20 products it is still climbing >10% per 10 rounds at t=30.
    int n_products = 10;
    int m_ones = 5;
    int n_mutants = 10;
};

struct SynergyState {
    ProductSpace space;
    std::vector<AgentVectors> agents;  // indexed by node id; dead slots unused
};

// Uniform random m-subset needs, food = need, garbage derived from food,
// and one shared random permutation.
SynergyState init_synergy(const Graph& g, int n_products, int m_ones, Rng& rng);

// Propagation: need(k)=1 and some neighbor's garbage(k)=1 (garbages must be
// the previous round's values). Non-propagation: food = need.
ProductBits compute_food(const Graph& g, NodeId i, const ProductBits& need,
                         const std::vector<AgentVectors>& agents, SynergyMode mode);

// garbage[production[k]] = food[k].
ProductBits compute_garbage(const ProductSpace& space, const ProductBits& food);

// Sum over neighbors j and products k with need(k)=1 of garbage_j(k);
// every neighbor contributes separately, duplicates counted.
int synergy_fitness(const Graph& g, NodeId i, const ProductBits& need,
                    const std::vector<AgentVectors>& agents);

// n_mutants candidate needs, each the current need with two distinct
// uniformly chosen positions swapped, scored against the agents' current
// garbage; returns the first best mutant if it strictly beats the current
// need, otherwise the unchanged need.
ProductBits mutate_select(const Graph& g, NodeId i, const ProductBits& need,
                          const std::vector<AgentVectors>& agents, Rng& rng,
                          int n_mutants = 10);

struct SynergyRecord {
    std::vector<NodeId> nodes;
    std::vector<int> degrees;
    std::vector<std::optional<double>> clusterings;

    std::vector<double> mean_fitness_per_step;     // index 0 = round 1
    std::vector<std::vector<int>> fitness_per_step;  // [round][node index]
    std::vector<int> fitness_initial;
    std::vector<int> fitness_final;
    std::vector<int> dfitness;      // final - initial
    std::vector<int> need_hamming;  // Hamming(initial need, final need)

    std::optional<OlsFit> dfitness_vs_degree;
    std::optional<OlsFit> dfitness_vs_clustering;
    std::optional<OlsFit> need_change_vs_degree;
    std::optional<OlsFit> need_change_vs_clustering;
    MeanStd dfitness_stats;

    // Checked after every round during the run: swap mutation must keep
    // every need vector at exactly m ones.
    bool need_count_preserved = true;
};

// Synchronous rounds: foods from the previous round's garbage (round 1
// uses food = need), then garbages, then fitnesses, then every agent
// mutates against the round's frozen garbage.
SynergyRecord run_synergy(const Graph& g, const SynergyParams& params, Rng& rng);

// Same rounds from a caller-prepared state (e.g. a fixed permutation).
SynergyRecord run_synergy_from(const Graph& g, const SynergyParams& params,
                               SynergyState state, Rng& rng);

void write_synergy_trace_csv(std::ostream& out, const SynergyRecord& record);
void write_synergy_final_csv(std::ostream& out, const SynergyRecord& record);
void write_synergy_summary_header(std::ostream& out);
void write_synergy_summary_row(std::ostream& out, int replicate,
                               const SynergyRecord& record);

}  // namespace netorg
