#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "netorg/experiment.hpp"
#include "netorg/metrics.hpp"

namespace py = pybind11;
using namespace netorg;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Hierarchical / scale-free / random network simulations: structure, "
              "robustness, and agent coordination dynamics";
    m.attr("__version__") = kVersion;

    py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);

    py::class_<Rng>(m, "Rng", "Deterministic random stream; pass one seed per run")
        .def(py::init([](std::uint64_t seed) { return make_rng(seed); }), py::arg("seed"));

    py::class_<Graph>(m, "Graph")
        .def(py::init<>())
        .def("add_node", &Graph::add_node)
        .def("add_edge", &Graph::add_edge, py::arg("u"), py::arg("v"))
        .def("remove_node", &Graph::remove_node, py::arg("v"))
        .def("contains", &Graph::contains, py::arg("v"))
        .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
        .def("degree", &Graph::degree, py::arg("v"))
        .def("neighbors",
             [](const Graph& g, NodeId v) {
                 const auto& nbrs = g.neighbors(v);
                 return std::vector<NodeId>(nbrs.begin(), nbrs.end());
             },
             py::arg("v"))
        .def_property_readonly("node_count", &Graph::node_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("nodes", &Graph::nodes)
        .def("edges", &Graph::edges)
        .def("clustering_coefficient", &Graph::clustering_coefficient, py::arg("v"))
        .def("shortest_path_length", &Graph::shortest_path_length, py::arg("u"),
             py::arg("v"))
        .def("diameter", &Graph::diameter)
        .def("is_connected", &Graph::is_connected)
        .def("connected_components", &Graph::connected_components)
        .def("__repr__", [](const Graph& g) {
            std::ostringstream os;
            os << "Graph(" << g.node_count() << " nodes, " << g.edge_count() << " edges)";
            return os.str();
        });

    m.def("save_edge_list",
          [](const Graph& g, const std::string& path) { save_edge_list(g, path); },
          py::arg("graph"), py::arg("path"));
    m.def("load_edge_list",
          [](const std::string& path) { return load_edge_list(path); }, py::arg("path"));

    // generators
    m.def("generate_random", &generate_random, py::arg("n"), py::arg("m_edges"),
          py::arg("rng"));
    m.def("generate_ba", &generate_ba, py::arg("n"), py::arg("m_attach"),
          py::arg("seed_path"), py::arg("rng"));
    m.def("sample_by_degree", &sample_by_degree, py::arg("graph"), py::arg("rng"));

    py::class_<HierarchicalNetwork>(m, "HierarchicalNetwork")
        .def_readonly("graph", &HierarchicalNetwork::graph)
        .def_readonly("leaders", &HierarchicalNetwork::leaders)
        .def_property_readonly("top_leader", &HierarchicalNetwork::top_leader);
    m.def("generate_hierarchical", &generate_hierarchical, py::arg("levels"),
          py::arg("branching") = 4);

    // stats and metrics
    py::class_<OlsFit>(m, "OlsFit")
        .def_readonly("slope", &OlsFit::slope)
        .def_readonly("intercept", &OlsFit::intercept)
        .def_readonly("ci95_lo", &OlsFit::ci95_lo)
        .def_readonly("ci95_hi", &OlsFit::ci95_hi)
        .def_readonly("n_points", &OlsFit::n_points)
        .def("__repr__", [](const OlsFit& f) {
            std::ostringstream os;
            os << "OlsFit(slope=" << f.slope << ", ci95=[" << f.ci95_lo << ", "
               << f.ci95_hi << "], n=" << f.n_points << ")";
            return os.str();
        });

    m.def("ols_fit",
          [](const std::vector<double>& x, const std::vector<double>& y) {
              return ols_fit(x, y);
          },
          py::arg("x"), py::arg("y"));
    m.def("loglog_slope",
          [](const std::vector<double>& x, const std::vector<double>& y) {
              return loglog_slope(x, y);
          },
          py::arg("x"), py::arg("y"));
    m.def("mean_std",
          [](const std::vector<double>& xs) {
              auto ms = mean_std(xs);
              return std::make_pair(ms.mean, ms.stddev);
          },
          py::arg("xs"), "Returns (mean, sample_std); std is None for fewer than 2 values");
    m.def("median",
          [](const std::vector<double>& xs) { return median(xs); }, py::arg("xs"));
    m.def("t_quantile_975", &t_quantile_975, py::arg("dof"));

    m.def("degree_histogram",
          [](const Graph& g) { return degree_histogram(g).counts; }, py::arg("graph"));
    m.def("clustering_by_degree", &clustering_by_degree, py::arg("graph"));
    m.def("clustering_scaling_fit", &clustering_scaling_fit, py::arg("graph"));

    // robustness
    py::enum_<RemovalMode>(m, "RemovalMode")
        .value("Failure", RemovalMode::Failure)
        .value("Attack", RemovalMode::Attack);

    py::class_<RobustnessStep>(m, "RobustnessStep")
        .def_readonly("step", &RobustnessStep::step)
        .def_readonly("removed", &RobustnessStep::removed)
        .def_readonly("lcc_diameter", &RobustnessStep::lcc_diameter)
        .def_readonly("connected", &RobustnessStep::connected)
        .def_readonly("lcc_size", &RobustnessStep::lcc_size);

    py::class_<RobustnessSeries>(m, "RobustnessSeries")
        .def_readonly("mode", &RobustnessSeries::mode)
        .def_readonly("initial_diameter", &RobustnessSeries::initial_diameter)
        .def_readonly("steps", &RobustnessSeries::steps)
        .def("first_diameter_increase", &RobustnessSeries::first_diameter_increase)
        .def("first_disconnection", &RobustnessSeries::first_disconnection);

    m.def("run_failure",
          [](const Graph& g, int steps, Rng& rng) { return run_failure(g, steps, rng); },
          py::arg("graph"), py::arg("steps"), py::arg("rng"));
    m.def("run_attack",
          [](const Graph& g, int steps) { return run_attack(g, steps); },
          py::arg("graph"), py::arg("steps"));

    // friction dynamics
    m.def("init_colors", &init_colors, py::arg("graph"), py::arg("rng"));
    m.def("step_colors", &step_colors, py::arg("graph"), py::arg("colors"));
    m.def("friction_fitness", &friction_fitness, py::arg("graph"), py::arg("colors"),
          py::arg("node"));
    m.def("colordifference", &colordifference, py::arg("graph"), py::arg("colors"),
          py::arg("node"));

    py::class_<FrictionRecord>(m, "FrictionRecord")
        .def_readonly("nodes", &FrictionRecord::nodes)
        .def_readonly("degrees", &FrictionRecord::degrees)
        .def_readonly("clusterings", &FrictionRecord::clusterings)
        .def_readonly("fitness", &FrictionRecord::fitness)
        .def_readonly("colordiff", &FrictionRecord::colordiff)
        .def_readonly("final_colors", &FrictionRecord::final_colors)
        .def_readonly("fitness_vs_degree", &FrictionRecord::fitness_vs_degree)
        .def_readonly("fitness_vs_clustering", &FrictionRecord::fitness_vs_clustering)
        .def_readonly("colordiff_vs_degree", &FrictionRecord::colordiff_vs_degree)
        .def_readonly("colordiff_vs_clustering", &FrictionRecord::colordiff_vs_clustering)
        .def_property_readonly("fitness_mean",
                               [](const FrictionRecord& r) { return r.fitness_stats.mean; })
        .def_property_readonly(
            "fitness_std", [](const FrictionRecord& r) { return r.fitness_stats.stddev; })
        .def_property_readonly(
            "colordiff_mean", [](const FrictionRecord& r) { return r.colordiff_stats.mean; })
        .def_property_readonly(
            "colordiff_std",
            [](const FrictionRecord& r) { return r.colordiff_stats.stddev; })
        .def_readonly("connected", &FrictionRecord::connected)
        .def_readonly("colors_in_range", &FrictionRecord::colors_in_range)
        .def_readonly("spread_non_increasing", &FrictionRecord::spread_non_increasing);

    m.def("run_friction", &run_friction, py::arg("graph"), py::arg("t_steps"),
          py::arg("rng"));
    m.attr("DEFAULT_FRICTION_STEPS") = kDefaultFrictionSteps;

    // synergy dynamics
    py::enum_<SynergyMode>(m, "SynergyMode")
        .value("Propagation", SynergyMode::Propagation)
        .value("NonPropagation", SynergyMode::NonPropagation);

    py::class_<ProductSpace>(m, "ProductSpace")
        .def_readonly("n_products", &ProductSpace::n_products)
        .def_readwrite("production", &ProductSpace::production);

    py::class_<AgentVectors>(m, "AgentVectors")
        .def_readwrite("need", &AgentVectors::need)
        .def_readwrite("food", &AgentVectors::food)
        .def_readwrite("garbage", &AgentVectors::garbage);

    py::class_<SynergyParams>(m, "SynergyParams")
        .def(py::init<>())
        .def_readwrite("mode", &SynergyParams::mode)
        .def_readwrite("t_steps", &SynergyParams::t_steps)
        .def_readwrite("n_products", &SynergyParams::n_products)
        .def_readwrite("m_ones", &SynergyParams::m_ones)
        .def_readwrite("n_mutants", &SynergyParams::n_mutants);

    py::class_<SynergyState>(m, "SynergyState")
        .def_readwrite("space", &SynergyState::space)
        .def_readwrite("agents", &SynergyState::agents);

    py::class_<SynergyRecord>(m, "SynergyRecord")
        .def_readonly("nodes", &SynergyRecord::nodes)
        .def_readonly("degrees", &SynergyRecord::degrees)
        .def_readonly("clusterings", &SynergyRecord::clusterings)
        .def_readonly("mean_fitness_per_step", &SynergyRecord::mean_fitness_per_step)
        .def_readonly("fitness_per_step", &SynergyRecord::fitness_per_step)
        .def_readonly("fitness_initial", &SynergyRecord::fitness_initial)
        .def_readonly("fitness_final", &SynergyRecord::fitness_final)
        .def_readonly("dfitness", &SynergyRecord::dfitness)
        .def_readonly("need_hamming", &SynergyRecord::need_hamming)
        .def_readonly("dfitness_vs_degree", &SynergyRecord::dfitness_vs_degree)
        .def_readonly("dfitness_vs_clustering", &SynergyRecord::dfitness_vs_clustering)
        .def_readonly("need_change_vs_degree", &SynergyRecord::need_change_vs_degree)
        .def_readonly("need_change_vs_clustering",
                      &SynergyRecord::need_change_vs_clustering)
        .def_property_readonly(
            "dfitness_mean", [](const SynergyRecord& r) { return r.dfitness_stats.mean; })
        .def_property_readonly(
            "dfitness_std", [](const SynergyRecord& r) { return r.dfitness_stats.stddev; })
        .def_readonly("need_count_preserved", &SynergyRecord::need_count_preserved);

    m.def("init_synergy", &init_synergy, py::arg("graph"), py::arg("n_products"),
          py::arg("m_ones"), py::arg("rng"));
    m.def("compute_food", &compute_food, py::arg("graph"), py::arg("node"),
          py::arg("need"), py::arg("agents"), py::arg("mode"));
    m.def("compute_garbage", &compute_garbage, py::arg("space"), py::arg("food"));
    m.def("synergy_fitness", &synergy_fitness, py::arg("graph"), py::arg("node"),
          py::arg("need"), py::arg("agents"));
    m.def("mutate_select", &mutate_select, py::arg("graph"), py::arg("node"),
          py::arg("need"), py::arg("agents"), py::arg("rng"), py::arg("n_mutants") = 10);
    m.def("run_synergy", &run_synergy, py::arg("graph"), py::arg("params"), py::arg("rng"));
    m.def("run_synergy_from", &run_synergy_from, py::arg("graph"), py::arg("params"),
          py::arg("state"), py::arg("rng"));

    // experiment harness
    m.def("run_experiment",
          [](const std::string& config_json) {
              auto cfg = config_from_json(nlohmann::json::parse(config_json));
              auto output = run_experiment(cfg);
              std::vector<std::string> files;
              files.reserve(output.files.size());
              for (const auto& p : output.files) files.push_back(p.string());
              return files;
          },
          py::arg("config_json"),
          "Run an experiment from a JSON config string; returns written file paths");
    m.def("load_config_json",
          [](const std::string& path) { return config_to_json(load_config(path)).dump(2); },
          py::arg("path"), "Load a config or manifest file and return its JSON text");
    m.def("paper_suite",
          [](const std::string& out_dir, int replicates, std::uint64_t seed, int workers) {
              PaperSuiteOptions options;
              options.output_dir = out_dir;
              options.replicates = replicates;
              options.base_seed = seed;
              options.workers = workers;
              auto report = paper_suite(options);
              std::ostringstream os;
              write_report(os, report);
              return std::make_pair(report.all_passed(), os.str());
          },
          py::arg("out_dir"), py::arg("replicates") = 20, py::arg("seed") = 1,
          py::arg("workers") = 0,
          "Run the canonical reproduction suite; returns (all_passed, report_text)");
}
