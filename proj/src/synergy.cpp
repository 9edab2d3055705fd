#include "netorg/synergy.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "netorg/csv.hpp"

namespace netorg {

namespace {

// Neighbor garbage totals per product; fitness and mutant deltas read off it.
std::vector<int> garbage_supply(const Graph& g, NodeId i,
                                const std::vector<AgentVectors>& agents,
                                int n_products) {
    std::vector<int> supply(n_products, 0);
    for (NodeId j : g.neighbors(i)) {
        const ProductBits& garbage = agents[j].garbage;
        for (int k = 0; k < n_products; ++k) supply[k] += garbage[k];
    }
    return supply;
}

int fitness_from_supply(const ProductBits& need, const std::vector<int>& supply) {
    int fit = 0;
    for (size_t k = 0; k < need.size(); ++k) {
        if (need[k]) fit += supply[k];
    }
    return fit;
}

std::optional<OlsFit> try_fit(const std::vector<double>& x,
                              const std::vector<double>& y) {
    if (x.size() < 3) return std::nullopt;
    const double first = x.front();
    if (std::all_of(x.begin(), x.end(), [&](double v) { return v == first; })) {
        return std::nullopt;
    }
    return ols_fit(x, y);
}

}  // namespace

SynergyState init_synergy(const Graph& g, int n_products, int m_ones, Rng& rng) {
    if (n_products < 1) throw std::invalid_argument("init_synergy: n_products must be >= 1");
    if (m_ones < 0 || m_ones > n_products) {
        throw std::invalid_argument("init_synergy: need 0 <= m_ones <= n_products");
    }

    SynergyState state;
    state.space.n_products = n_products;
    state.space.production.resize(n_products);
    std::iota(state.space.production.begin(), state.space.production.end(), 0);
    // Fisher-Yates with our own draws, for cross-platform reproducibility.
    for (int k = n_products - 1; k > 0; --k) {
        const int j = uniform_index(rng, k + 1);
        std::swap(state.space.production[k], state.space.production[j]);
    }

    auto alive = g.nodes();
    const NodeId slots = alive.empty() ? 0 : alive.back() + 1;
    state.agents.resize(slots);
    for (NodeId v : alive) {
        AgentVectors& agent = state.agents[v];
        agent.need.assign(n_products, 0);
        // Partial Fisher-Yates: uniform m-subset of product positions.
        std::vector<int> positions(n_products);
        std::iota(positions.begin(), positions.end(), 0);
        for (int t = 0; t < m_ones; ++t) {
            const int j = t + uniform_index(rng, n_products - t);
            std::swap(positions[t], positions[j]);
            agent.need[positions[t]] = 1;
        }
        agent.food = agent.need;
        agent.garbage = compute_garbage(state.space, agent.food);
    }
    return state;
}

ProductBits compute_food(const Graph& g, NodeId i, const ProductBits& need,
                         const std::vector<AgentVectors>& agents, SynergyMode mode) {
    if (mode == SynergyMode::NonPropagation) return need;
    ProductBits food(need.size(), 0);
    for (size_t k = 0; k < need.size(); ++k) {
        if (!need[k]) continue;
        for (NodeId j : g.neighbors(i)) {
            if (agents[j].garbage[k]) {
                food[k] = 1;
                break;
            }
        }
    }
    return food;
}

ProductBits compute_garbage(const ProductSpace& space, const ProductBits& food) {
    ProductBits garbage(food.size(), 0);
    for (size_t k = 0; k < food.size(); ++k) {
        garbage[space.production[k]] = food[k];
    }
    return garbage;
}

int synergy_fitness(const Graph& g, NodeId i, const ProductBits& need,
                    const std::vector<AgentVectors>& agents) {
    const auto supply =
        garbage_supply(g, i, agents, static_cast<int>(need.size()));
    return fitness_from_supply(need, supply);
}

ProductBits mutate_select(const Graph& g, NodeId i, const ProductBits& need,
                          const std::vector<AgentVectors>& agents, Rng& rng,
                          int n_mutants) {
    const int n = static_cast<int>(need.size());
    if (n < 2) throw std::invalid_argument("mutate_select: need at least 2 products");

    const auto supply = garbage_supply(g, i, agents, n);
    const int current = fitness_from_supply(need, supply);

    int best_fitness = current;
    int best_a = -1, best_b = -1;
    for (int t = 0; t < n_mutants; ++t) {
        int a = uniform_index(rng, n);
        int b = uniform_index(rng, n - 1);
        if (b >= a) ++b;
        // Swapping equal bits is a no-op mutant; it still uses up a slot.
        if (need[a] == need[b]) continue;
        const int one = need[a] ? a : b;   // position losing its 1
        const int zero = need[a] ? b : a;  // position gaining it
        const int mutant_fitness = current - supply[one] + supply[zero];
        if (mutant_fitness > best_fitness) {
            best_fitness = mutant_fitness;
            best_a = a;
            best_b = b;
        }
    }
    ProductBits result = need;
    if (best_a >= 0) std::swap(result[best_a], result[best_b]);
    return result;
}

SynergyRecord run_synergy(const Graph& g, const SynergyParams& params, Rng& rng) {
    if (params.n_products < 2) {
        throw std::invalid_argument("run_synergy: n_products must be >= 2");
    }
    return run_synergy_from(
        g, params, init_synergy(g, params.n_products, params.m_ones, rng), rng);
}

SynergyRecord run_synergy_from(const Graph& g, const SynergyParams& params,
                               SynergyState state, Rng& rng) {
    if (params.t_steps < 1) throw std::invalid_argument("run_synergy: t_steps must be >= 1");

    const auto alive = g.nodes();
    std::vector<ProductBits> initial_needs(alive.size());
    std::vector<int> initial_ones(alive.size(), 0);
    for (size_t i = 0; i < alive.size(); ++i) {
        initial_needs[i] = state.agents[alive[i]].need;
        for (auto bit : initial_needs[i]) initial_ones[i] += bit;
    }

    SynergyRecord record;
    record.nodes = alive;
    for (NodeId v : alive) {
        record.degrees.push_back(g.degree(v));
        record.clusterings.push_back(g.clustering_coefficient(v));
    }

    for (int round = 1; round <= params.t_steps; ++round) {
        // Foods for the round; round 1 starts from the needs themselves.
        for (NodeId v : alive) {
            AgentVectors& agent = state.agents[v];
            if (round == 1) {
                agent.food = agent.need;
            } else {
                agent.food = compute_food(g, v, agent.need, state.agents, params.mode);
            }
        }
        // Garbages next, all from this round's foods.
        std::vector<ProductBits> fresh(alive.size());
        for (size_t i = 0; i < alive.size(); ++i) {
            fresh[i] = compute_garbage(state.space, state.agents[alive[i]].food);
        }
        for (size_t i = 0; i < alive.size(); ++i) {
            state.agents[alive[i]].garbage = std::move(fresh[i]);
        }
        // Fitness against the round's garbage, recorded before mutation.
        std::vector<int> fitness_now(alive.size());
        double mean = 0.0;
        for (size_t i = 0; i < alive.size(); ++i) {
            fitness_now[i] =
                synergy_fitness(g, alive[i], state.agents[alive[i]].need, state.agents);
            mean += fitness_now[i];
        }
        mean /= alive.empty() ? 1.0 : static_cast<double>(alive.size());
        record.fitness_per_step.push_back(fitness_now);
        record.mean_fitness_per_step.push_back(mean);
        // Mutations last, every agent against the same frozen garbage.
        for (size_t i = 0; i < alive.size(); ++i) {
            const NodeId v = alive[i];
            state.agents[v].need = mutate_select(g, v, state.agents[v].need,
                                                 state.agents, rng, params.n_mutants);
            int ones = 0;
            for (auto bit : state.agents[v].need) ones += bit;
            if (ones != initial_ones[i]) record.need_count_preserved = false;
        }
    }

    record.fitness_initial = record.fitness_per_step.front();
    record.fitness_final = record.fitness_per_step.back();
    for (size_t i = 0; i < alive.size(); ++i) {
        record.dfitness.push_back(record.fitness_final[i] - record.fitness_initial[i]);
        int hamming = 0;
        const ProductBits& now = state.agents[alive[i]].need;
        for (size_t k = 0; k < now.size(); ++k) {
            if (now[k] != initial_needs[i][k]) ++hamming;
        }
        record.need_hamming.push_back(hamming);
    }

    std::vector<double> dfit(record.dfitness.begin(), record.dfitness.end());
    std::vector<double> hamming(record.need_hamming.begin(), record.need_hamming.end());
    std::vector<double> deg_all, dfit_deg, cc_x, dfit_cc, hamming_cc;
    for (size_t i = 0; i < alive.size(); ++i) {
        deg_all.push_back(record.degrees[i]);
        if (record.clusterings[i]) {
            cc_x.push_back(*record.clusterings[i]);
            dfit_cc.push_back(dfit[i]);
            hamming_cc.push_back(hamming[i]);
        }
    }
    record.dfitness_vs_degree = try_fit(deg_all, dfit);
    record.dfitness_vs_clustering = try_fit(cc_x, dfit_cc);
    record.need_change_vs_degree = try_fit(deg_all, hamming);
    record.need_change_vs_clustering = try_fit(cc_x, hamming_cc);
    if (!dfit.empty()) record.dfitness_stats = mean_std(dfit);
    return record;
}

void write_synergy_trace_csv(std::ostream& out, const SynergyRecord& record) {
    out << "step,mean_fitness\n";
    for (size_t t = 0; t < record.mean_fitness_per_step.size(); ++t) {
        out << (t + 1) << ',' << csv_double(record.mean_fitness_per_step[t]) << '\n';
    }
}

void write_synergy_final_csv(std::ostream& out, const SynergyRecord& record) {
    out << "node,degree,clustering,fitness_initial,fitness_final,dfitness,need_hamming\n";
    for (size_t i = 0; i < record.nodes.size(); ++i) {
        out << record.nodes[i] << ',' << record.degrees[i] << ','
            << csv_double(record.clusterings[i]) << ',' << record.fitness_initial[i]
            << ',' << record.fitness_final[i] << ',' << record.dfitness[i] << ','
            << record.need_hamming[i] << '\n';
    }
}

namespace {

void write_fit_fields(std::ostream& out, const std::optional<OlsFit>& fit) {
    if (fit) {
        out << ',' << csv_double(fit->slope) << ',' << csv_double(fit->ci95_lo)
            << ',' << csv_double(fit->ci95_hi);
    } else {
        out << ",nan,nan,nan";
    }
}

}  // namespace

void write_synergy_summary_header(std::ostream& out) {
    out << "replicate,dfitness_mean,dfitness_std"
        << ",dfitness_vs_degree_slope,dfitness_vs_degree_lo,dfitness_vs_degree_hi"
        << ",dfitness_vs_cc_slope,dfitness_vs_cc_lo,dfitness_vs_cc_hi"
        << ",need_vs_degree_slope,need_vs_degree_lo,need_vs_degree_hi"
        << ",need_vs_cc_slope,need_vs_cc_lo,need_vs_cc_hi\n";
}

void write_synergy_summary_row(std::ostream& out, int replicate,
                               const SynergyRecord& record) {
    out << replicate << ',' << csv_double(record.dfitness_stats.mean) << ','
        << csv_double(record.dfitness_stats.stddev);
    write_fit_fields(out, record.dfitness_vs_degree);
    write_fit_fields(out, record.dfitness_vs_clustering);
    write_fit_fields(out, record.need_change_vs_degree);
    write_fit_fields(out, record.need_change_vs_clustering);
    out << '\n';
}

}  // namespace netorg
