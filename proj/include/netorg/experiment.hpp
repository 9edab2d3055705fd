#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "netorg/friction.hpp"
#include "netorg/generators.hpp"
#include "netorg/robustness.hpp"
#include "netorg/synergy.hpp"

namespace netorg {

inline constexpr const char* kVersion = "0.1.0";

enum class ExperimentType { Structure, Robustness, Friction, Synergy };

std::string to_string(ExperimentType type);

struct ExperimentConfig {
    GeneratorParams network;
    // When set, replicates load this edge-list file instead of generating.
    std::filesystem::path input_graph;
    ExperimentType experiment = ExperimentType::Structure;

    RemovalMode robustness_mode = RemovalMode::Failure;
    int robustness_steps = 100;

    int friction_t_steps = kDefaultFrictionSteps;

    SynergyParams synergy;

    int replicates = 1;
    std::uint64_t base_seed = 0;  // replicate r draws from seed base_seed + r
    std::filesystem::path output_dir = "out";
    int workers = 0;  // 0 = hardware concurrency
};

nlohmann::json config_to_json(const ExperimentConfig& cfg);
ExperimentConfig config_from_json(const nlohmann::json& j);

// Accepts either a raw config or a manifest written by run_experiment.
ExperimentConfig load_config(const std::filesystem::path& path);

struct ExperimentOutput {
    std::vector<std::filesystem::path> files;
    // Filled according to the experiment type; one entry per replicate.
    std::vector<Graph> graphs;  // Structure keeps the generated graphs
    std::vector<RobustnessSeries> robustness;
    std::vector<FrictionRecord> friction;
    std::vector<SynergyRecord> synergy;
};

// Runs every replicate (concurrently up to cfg.workers), writing one CSV
// per replicate, an ensemble summary.csv and a manifest.json that
// reproduces the run byte-for-byte.
ExperimentOutput run_experiment(const ExperimentConfig& cfg);

struct PaperSuiteOptions {
    int replicates = 20;
    std::uint64_t base_seed = 1;
    std::filesystem::path output_dir = "paper-suite-out";
    int friction_t_steps = kDefaultFrictionSteps;
    int synergy_t_steps = 30;
    int synergy_n_products = 10;
    int synergy_m_ones = 5;
    int failure_steps = 100;
    int attack_steps = 50;
    int workers = 0;
};

enum class CriterionStatus { Pass, Fail, Insufficient, External };

struct CriterionResult {
    std::string id;
    std::string description;
    CriterionStatus status = CriterionStatus::Fail;
    std::string measured;

    bool passed() const { return status == CriterionStatus::Pass; }
};

struct PaperSuiteReport {
    std::vector<CriterionResult> criteria;
    double elapsed_seconds = 0.0;
    int replicates = 0;
    std::uint64_t base_seed = 0;

    // Pass/Insufficient/External all count as non-failing.
    bool all_passed() const;
};

// Runs the canonical reproduction configs (three network classes crossed
// with structure, failure, attack, friction and both synergy modes) and
// writes report.txt grading every acceptance property it can measure.
PaperSuiteReport paper_suite(const PaperSuiteOptions& options);

void write_report(std::ostream& out, const PaperSuiteReport& report);

}  // namespace netorg
