#include "netorg/friction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "netorg/csv.hpp"

namespace netorg {

ColorState init_colors(const Graph& g, Rng& rng) {
    ColorState colors;
    auto alive = g.nodes();
    const NodeId slots = alive.empty() ? 0 : alive.back() + 1;
    colors.assign(slots, 0.0);
    for (NodeId v : alive) colors[v] = uniform_unit(rng);
    return colors;
}

ColorState step_colors(const Graph& g, const ColorState& colors) {
    ColorState next = colors;
    for (NodeId v : g.nodes()) {
        const auto& nbrs = g.neighbors(v);
        if (nbrs.empty()) continue;
        double sum = 0.0;
        double lo = std::numeric_limits<double>::infinity(), hi = -lo;
        for (NodeId w : nbrs) {
            sum += colors[w];
            lo = std::min(lo, colors[w]);
            hi = std::max(hi, colors[w]);
        }
        double mean = sum / static_cast<double>(nbrs.size());
        mean = std::clamp(mean, lo, hi);  // the exact mean lies in [lo,hi]
        next[v] = 0.5 * (colors[v] + mean);
    }
    return next;
}

double friction_fitness(const Graph& g, const ColorState& colors, NodeId i) {
    const auto& nbrs = g.neighbors(i);
    if (nbrs.empty()) {
        throw std::invalid_argument("friction_fitness: isolated node");
    }
    double sum_sq = 0.0;
    for (NodeId w : nbrs) {
        const double d = colors[i] - colors[w];
        sum_sq += d * d;
    }
    sum_sq = std::max(sum_sq, kFitnessEpsilon);
    return std::sqrt(static_cast<double>(nbrs.size()) / sum_sq);
}

double colordifference(const Graph& g, const ColorState& colors, NodeId i) {
    if (g.node_count() < 2) {
        throw std::invalid_argument("colordifference: needs at least 2 nodes");
    }
    if (!g.contains(i)) {
        throw GraphError(GraphErrorCode::UnknownNode, "colordifference: unknown node");
    }
    double sum = 0.0;
    for (NodeId w : g.nodes()) {
        if (w != i) sum += std::abs(colors[i] - colors[w]);
    }
    return sum / static_cast<double>(g.node_count() - 1);
}

namespace {

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

namespace {

std::pair<double, double> color_spread(const Graph& g, const ColorState& colors) {
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (NodeId v : g.nodes()) {
        lo = std::min(lo, colors[v]);
        hi = std::max(hi, colors[v]);
    }
    return {lo, hi};
}

}  // namespace

FrictionRecord run_friction(const Graph& g, int t_steps, Rng& rng) {
    if (t_steps < 0) throw std::invalid_argument("run_friction: negative t_steps");

    FrictionRecord record;
    ColorState colors = init_colors(g, rng);
    auto [lo, hi] = color_spread(g, colors);
    for (int t = 0; t < t_steps; ++t) {
        colors = step_colors(g, colors);
        auto [new_lo, new_hi] = color_spread(g, colors);
        if (new_lo < 0.0 || new_hi > 1.0) record.colors_in_range = false;
        if (new_hi - new_lo > hi - lo) record.spread_non_increasing = false;
        lo = new_lo;
        hi = new_hi;
    }

    record.connected = g.node_count() >= 1 && g.is_connected();
    record.nodes = g.nodes();
    record.final_colors = colors;

    for (NodeId v : record.nodes) {
        record.degrees.push_back(g.degree(v));
        record.clusterings.push_back(g.clustering_coefficient(v));
        if (g.degree(v) >= 1) {
            record.fitness.push_back(friction_fitness(g, colors, v));
        } else {
            record.fitness.push_back(std::nullopt);
        }
        record.colordiff.push_back(colordifference(g, colors, v));
    }

    std::vector<double> fit_x_deg, fit_y, cd_x_deg, cd_y;
    std::vector<double> fit_x_cc, fit_y_cc, cd_x_cc, cd_y_cc;
    std::vector<double> fitness_values;
    for (size_t i = 0; i < record.nodes.size(); ++i) {
        const double degree = record.degrees[i];
        cd_x_deg.push_back(degree);
        cd_y.push_back(record.colordiff[i]);
        if (record.fitness[i]) {
            fitness_values.push_back(*record.fitness[i]);
            fit_x_deg.push_back(degree);
            fit_y.push_back(*record.fitness[i]);
        }
        if (record.clusterings[i]) {
            cd_x_cc.push_back(*record.clusterings[i]);
            cd_y_cc.push_back(record.colordiff[i]);
            if (record.fitness[i]) {
                fit_x_cc.push_back(*record.clusterings[i]);
                fit_y_cc.push_back(*record.fitness[i]);
            }
        }
    }
    record.fitness_vs_degree = try_fit(fit_x_deg, fit_y);
    record.fitness_vs_clustering = try_fit(fit_x_cc, fit_y_cc);
    record.colordiff_vs_degree = try_fit(cd_x_deg, cd_y);
    record.colordiff_vs_clustering = try_fit(cd_x_cc, cd_y_cc);
    if (!fitness_values.empty()) record.fitness_stats = mean_std(fitness_values);
    if (!record.colordiff.empty()) record.colordiff_stats = mean_std(record.colordiff);
    return record;
}

void write_friction_csv(std::ostream& out, const FrictionRecord& record) {
    out << "node,degree,clustering,fitness,colordiff\n";
    for (size_t i = 0; i < record.nodes.size(); ++i) {
        out << record.nodes[i] << ',' << record.degrees[i] << ','
            << csv_double(record.clusterings[i]) << ','
            << csv_double(record.fitness[i]) << ','
            << csv_double(record.colordiff[i]) << '\n';
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

void write_friction_summary_header(std::ostream& out) {
    out << "replicate,fitness_mean,fitness_std,colordiff_mean,colordiff_std"
        << ",fitness_vs_degree_slope,fitness_vs_degree_lo,fitness_vs_degree_hi"
        << ",fitness_vs_cc_slope,fitness_vs_cc_lo,fitness_vs_cc_hi"
        << ",colordiff_vs_degree_slope,colordiff_vs_degree_lo,colordiff_vs_degree_hi"
        << ",colordiff_vs_cc_slope,colordiff_vs_cc_lo,colordiff_vs_cc_hi\n";
}

void write_friction_summary_row(std::ostream& out, int replicate,
                                const FrictionRecord& record) {
    out << replicate << ',' << csv_double(record.fitness_stats.mean) << ','
        << csv_double(record.fitness_stats.stddev) << ','
        << csv_double(record.colordiff_stats.mean) << ','
        << csv_double(record.colordiff_stats.stddev);
    write_fit_fields(out, record.fitness_vs_degree);
    write_fit_fields(out, record.fitness_vs_clustering);
    write_fit_fields(out, record.colordiff_vs_degree);
    write_fit_fields(out, record.colordiff_vs_clustering);
    out << '\n';
}

}  // namespace netorg
