#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "netorg/graph.hpp"
#include "netorg/stats.hpp"

namespace netorg {

struct DegreeHistogram {
    std::map<int, int> counts;  // degree -> node count
    int total = 0;

    double frequency(int degree) const;
};

DegreeHistogram degree_histogram(const Graph& g);

// Mean clustering coefficient per degree; nodes with undefined clustering
// (degree <= 1) are excluded, so only degrees >= 2 appear.
std::map<int, double> clustering_by_degree(const Graph& g);

// Log-log OLS of the C(k)-vs-k points (one point per observed degree).
OlsFit clustering_scaling_fit(const Graph& g);

void write_degree_histogram_csv(std::ostream& out, const DegreeHistogram& hist);
void write_clustering_by_degree_csv(std::ostream& out,
                                    const std::map<int, double>& by_degree);
void write_fits_csv(std::ostream& out,
                    const std::vector<std::pair<std::string, OlsFit>>& fits);

}  // namespace netorg
