#include "netorg/metrics.hpp"

#include <ostream>

#include "netorg/csv.hpp"

namespace netorg {

double DegreeHistogram::frequency(int degree) const {
    auto it = counts.find(degree);
    if (it == counts.end() || total == 0) return 0.0;
    return static_cast<double>(it->second) / static_cast<double>(total);
}

DegreeHistogram degree_histogram(const Graph& g) {
    if (g.node_count() == 0) {
        throw GraphError(GraphErrorCode::EmptyGraph, "degree_histogram of empty graph");
    }
    DegreeHistogram hist;
    for (NodeId v : g.nodes()) {
        ++hist.counts[g.degree(v)];
        ++hist.total;
    }
    return hist;
}

std::map<int, double> clustering_by_degree(const Graph& g) {
    std::map<int, double> sums;
    std::map<int, int> counts;
    for (NodeId v : g.nodes()) {
        auto cc = g.clustering_coefficient(v);
        if (!cc) continue;
        sums[g.degree(v)] += *cc;
        ++counts[g.degree(v)];
    }
    if (sums.empty()) {
        throw std::invalid_argument("clustering_by_degree: no node with degree >= 2");
    }
    std::map<int, double> means;
    for (const auto& [degree, sum] : sums) {
        means[degree] = sum / counts[degree];
    }
    return means;
}

OlsFit clustering_scaling_fit(const Graph& g) {
    std::vector<double> ks, cs;
    for (const auto& [degree, mean_cc] : clustering_by_degree(g)) {
        if (mean_cc <= 0.0) continue;  // log of zero-clustering degrees undefined
        ks.push_back(static_cast<double>(degree));
        cs.push_back(mean_cc);
    }
    return loglog_slope(ks, cs);
}

void write_degree_histogram_csv(std::ostream& out, const DegreeHistogram& hist) {
    out << "degree,count\n";
    for (const auto& [degree, count] : hist.counts) {
        out << degree << ',' << count << '\n';
    }
}

void write_clustering_by_degree_csv(std::ostream& out,
                                    const std::map<int, double>& by_degree) {
    out << "degree,mean_cc\n";
    for (const auto& [degree, mean_cc] : by_degree) {
        out << degree << ',' << csv_double(mean_cc) << '\n';
    }
}

void write_fits_csv(std::ostream& out,
                    const std::vector<std::pair<std::string, OlsFit>>& fits) {
    out << "fit,slope,ci_lo,ci_hi,intercept,n\n";
    for (const auto& [name, fit] : fits) {
        out << name << ',' << csv_double(fit.slope) << ',' << csv_double(fit.ci95_lo)
            << ',' << csv_double(fit.ci95_hi) << ',' << csv_double(fit.intercept)
            << ',' << fit.n_points << '\n';
    }
}

}  // namespace netorg
