// netorg: generate the three network classes, measure them, and run the
// robustness / alignment / synergy experiments with reproducible seeds.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "netorg/experiment.hpp"
#include "netorg/metrics.hpp"

using namespace netorg;
namespace fs = std::filesystem;

namespace {

struct NetworkFlags {
    std::string kind = "random";
    int n = 121;
    long long m_edges = 1025;
    int m_attach = 4;
    int seed_path = 5;
    int levels = 4;
    int branching = 4;
};

void add_network_options(CLI::App* cmd, NetworkFlags& flags) {
    cmd->add_option("--kind", flags.kind,
                    "network class: random, non-hierarchical (ba), hierarchical");
    cmd->add_option("--n", flags.n, "node count (random / non-hierarchical)");
    cmd->add_option("--m-edges", flags.m_edges, "edge count (random)");
    cmd->add_option("--m-attach", flags.m_attach, "edges per new node (non-hierarchical)");
    cmd->add_option("--seed-path", flags.seed_path, "seed path length (non-hierarchical)");
    cmd->add_option("--levels", flags.levels, "recursion depth (hierarchical)");
    cmd->add_option("--branching", flags.branching, "copies per cluster (hierarchical)");
}

void apply_network_flags(const CLI::App* cmd, const NetworkFlags& flags,
                         GeneratorParams& params) {
    if (cmd->count("--kind")) params.kind = network_kind_from_string(flags.kind);
    if (cmd->count("--n")) params.n = flags.n;
    if (cmd->count("--m-edges")) params.m_edges = flags.m_edges;
    if (cmd->count("--m-attach")) params.m_attach = flags.m_attach;
    if (cmd->count("--seed-path")) params.seed_path = flags.seed_path;
    if (cmd->count("--levels")) params.levels = flags.levels;
    if (cmd->count("--branching")) params.branching = flags.branching;
}

struct CommonFlags {
    std::string config_path;
    std::string input_graph;
    std::string out_dir;
    std::uint64_t seed = 0;
    int replicates = 1;
    int workers = 0;
};

void add_common_options(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--config", flags.config_path,
                    "JSON config or manifest; flags override its values");
    cmd->add_option("--in", flags.input_graph, "edge-list file instead of generating");
    cmd->add_option("--out", flags.out_dir, "output directory");
    cmd->add_option("--seed", flags.seed, "base seed; replicate r uses seed+r");
    cmd->add_option("--replicates", flags.replicates, "independent replicates");
    cmd->add_option("--workers", flags.workers, "parallel replicate workers (0 = auto)");
}

ExperimentConfig build_config(const CLI::App* cmd, const CommonFlags& common,
                              const NetworkFlags& network, ExperimentType type) {
    ExperimentConfig cfg;
    if (!common.config_path.empty()) cfg = load_config(common.config_path);
    cfg.experiment = type;
    apply_network_flags(cmd, network, cfg.network);
    if (cmd->count("--in")) cfg.input_graph = common.input_graph;
    if (cmd->count("--out")) cfg.output_dir = common.out_dir;
    if (cmd->count("--seed")) cfg.base_seed = common.seed;
    if (cmd->count("--replicates")) cfg.replicates = common.replicates;
    if (cmd->count("--workers")) cfg.workers = common.workers;
    return cfg;
}

void write_single_graph_metrics(const Graph& g, const fs::path& out_dir) {
    fs::create_directories(out_dir);
    {
        std::ofstream out(out_dir / "degree_histogram.csv");
        write_degree_histogram_csv(out, degree_histogram(g));
    }
    {
        std::ofstream out(out_dir / "clustering_by_degree.csv");
        write_clustering_by_degree_csv(out, clustering_by_degree(g));
    }
    {
        std::vector<std::pair<std::string, OlsFit>> fits;
        try {
            fits.emplace_back("clustering_vs_degree_loglog", clustering_scaling_fit(g));
        } catch (const std::invalid_argument&) {
        }
        try {
            auto hist = degree_histogram(g);
            std::vector<double> ks, freqs;
            for (const auto& [degree, count] : hist.counts) {
                if (degree > 0 && count > 0) {
                    ks.push_back(degree);
                    freqs.push_back(hist.frequency(degree));
                }
            }
            fits.emplace_back("degree_frequency_loglog", loglog_slope(ks, freqs));
        } catch (const std::invalid_argument&) {
        }
        std::ofstream out(out_dir / "fits.csv");
        write_fits_csv(out, fits);
    }
    auto diameter = g.diameter();
    std::cout << "nodes " << g.node_count() << ", edges " << g.edge_count()
              << ", connected " << (g.is_connected() ? "yes" : "no") << ", diameter "
              << (diameter ? std::to_string(*diameter) : std::string("unreachable"))
              << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"network organization simulation toolkit"};
    app.require_subcommand(1);

    // generate
    auto* generate = app.add_subcommand("generate", "generate a network as an edge list");
    NetworkFlags gen_net;
    std::string gen_out = "graph.txt";
    std::uint64_t gen_seed = 0;
    add_network_options(generate, gen_net);
    generate->add_option("--out", gen_out, "edge-list output file");
    generate->add_option("--seed", gen_seed, "generator seed");

    // metrics
    auto* metrics = app.add_subcommand(
        "metrics", "degree histogram, clustering and fits for one graph or an ensemble");
    NetworkFlags met_net;
    CommonFlags met_common;
    add_network_options(metrics, met_net);
    add_common_options(metrics, met_common);

    // robustness
    auto* robustness = app.add_subcommand("robustness", "failure and attack experiments");
    NetworkFlags rob_net;
    CommonFlags rob_common;
    std::string rob_mode = "failure";
    int rob_steps = 100;
    add_network_options(robustness, rob_net);
    add_common_options(robustness, rob_common);
    robustness->add_option("--mode", rob_mode, "failure or attack");
    robustness->add_option("--steps", rob_steps, "nodes to remove");

    // friction
    auto* friction = app.add_subcommand("friction", "color alignment dynamics");
    NetworkFlags fr_net;
    CommonFlags fr_common;
    int fr_steps = kDefaultFrictionSteps;
    add_network_options(friction, fr_net);
    add_common_options(friction, fr_common);
    friction->add_option("--t-steps", fr_steps, "update steps");

    // synergy
    auto* synergy = app.add_subcommand("synergy", "need/food/garbage product dynamics");
    NetworkFlags sy_net;
    CommonFlags sy_common;
    std::string sy_mode = "propagation";
    SynergyParams sy_defaults;
    int sy_steps = sy_defaults.t_steps;
    int sy_products = sy_defaults.n_products;
    int sy_ones = sy_defaults.m_ones;
    add_network_options(synergy, sy_net);
    add_common_options(synergy, sy_common);
    synergy->add_option("--mode", sy_mode, "propagation or non-propagation");
    synergy->add_option("--t-steps", sy_steps, "rounds");
    synergy->add_option("--n-products", sy_products, "product space size");
    synergy->add_option("--m-ones", sy_ones, "needs per agent");

    // paper-suite
    auto* suite = app.add_subcommand(
        "paper-suite", "canonical reproduction runs plus a graded report");
    PaperSuiteOptions suite_options;
    std::string suite_out = suite_options.output_dir.string();
    suite->add_option("--seed", suite_options.base_seed, "base seed");
    suite->add_option("--replicates", suite_options.replicates, "replicates per ensemble");
    suite->add_option("--out", suite_out, "output directory");
    suite->add_option("--workers", suite_options.workers, "parallel workers (0 = auto)");
    suite->add_option("--friction-steps", suite_options.friction_t_steps,
                      "alignment steps per run");
    suite->add_option("--synergy-steps", suite_options.synergy_t_steps,
                      "synergy rounds per run");

    CLI11_PARSE(app, argc, argv);

    try {
        if (generate->parsed()) {
            GeneratorParams params;
            params.kind = network_kind_from_string(gen_net.kind);
            params.n = gen_net.n;
            params.m_edges = gen_net.m_edges;
            params.m_attach = gen_net.m_attach;
            params.seed_path = gen_net.seed_path;
            params.levels = gen_net.levels;
            params.branching = gen_net.branching;
            params.rng_seed = gen_seed;
            Graph g = generate_network(params);
            save_edge_list(g, gen_out);
            std::cout << "wrote " << g.node_count() << " nodes / " << g.edge_count()
                      << " edges to " << gen_out << '\n';
        } else if (metrics->parsed()) {
            const bool single =
                metrics->count("--in") && metrics->count("--replicates") == 0;
            if (single) {
                Graph g = load_edge_list(met_common.input_graph);
                write_single_graph_metrics(
                    g, metrics->count("--out") ? fs::path(met_common.out_dir)
                                               : fs::path("."));
            } else {
                auto cfg = build_config(metrics, met_common, met_net,
                                        ExperimentType::Structure);
                run_experiment(cfg);
                std::cout << "structure ensemble written to " << cfg.output_dir << '\n';
            }
        } else if (robustness->parsed()) {
            auto cfg = build_config(robustness, rob_common, rob_net,
                                    ExperimentType::Robustness);
            if (robustness->count("--mode")) {
                if (rob_mode == "failure") {
                    cfg.robustness_mode = RemovalMode::Failure;
                } else if (rob_mode == "attack") {
                    cfg.robustness_mode = RemovalMode::Attack;
                } else {
                    throw std::invalid_argument("unknown robustness mode: " + rob_mode);
                }
            }
            if (robustness->count("--steps")) cfg.robustness_steps = rob_steps;
            run_experiment(cfg);
            std::cout << "robustness series written to " << cfg.output_dir << '\n';
        } else if (friction->parsed()) {
            auto cfg = build_config(friction, fr_common, fr_net, ExperimentType::Friction);
            if (friction->count("--t-steps")) cfg.friction_t_steps = fr_steps;
            run_experiment(cfg);
            std::cout << "friction records written to " << cfg.output_dir << '\n';
        } else if (synergy->parsed()) {
            auto cfg = build_config(synergy, sy_common, sy_net, ExperimentType::Synergy);
            if (synergy->count("--mode")) {
                if (sy_mode == "propagation") {
                    cfg.synergy.mode = SynergyMode::Propagation;
                } else if (sy_mode == "non-propagation") {
                    cfg.synergy.mode = SynergyMode::NonPropagation;
                } else {
                    throw std::invalid_argument("unknown synergy mode: " + sy_mode);
                }
            }
            if (synergy->count("--t-steps")) cfg.synergy.t_steps = sy_steps;
            if (synergy->count("--n-products")) cfg.synergy.n_products = sy_products;
            if (synergy->count("--m-ones")) cfg.synergy.m_ones = sy_ones;
            run_experiment(cfg);
            std::cout << "synergy records written to " << cfg.output_dir << '\n';
        } else if (suite->parsed()) {
            suite_options.output_dir = suite_out;
            auto report = paper_suite(suite_options);
            write_report(std::cout, report);
            return report.all_passed() ? 0 : 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
