#include <doctest.h>

#include <sstream>

#include "netorg/generators.hpp"
#include "netorg/metrics.hpp"
#include "unit/test_support.hpp"

using namespace netorg;
using namespace netorg::testing;

TEST_CASE("degree histogram") {
    auto k4_hist = degree_histogram(make_complete(4));
    CHECK(k4_hist.counts == std::map<int, int>{{3, 4}});
    CHECK(k4_hist.total == 4);
    CHECK(k4_hist.frequency(3) == 1.0);

    auto star_hist = degree_histogram(make_star(4));
    CHECK(star_hist.counts == std::map<int, int>{{1, 4}, {4, 1}});

    auto level2 = generate_hierarchical(2, 4);
    auto hist = degree_histogram(level2.graph);
    CHECK(hist.counts.rbegin()->first == 15);  // top leader reaches every node
    CHECK(hist.total == level2.graph.node_count());

    Graph empty;
    CHECK_THROWS_AS(degree_histogram(empty), GraphError);
}

TEST_CASE("histogram totals match node count on generated graphs") {
    Rng rng = make_rng(21);
    auto g = generate_random(60, 140, rng);
    auto hist = degree_histogram(g);
    int total = 0;
    double freq = 0.0;
    for (const auto& [degree, count] : hist.counts) {
        total += count;
        freq += hist.frequency(degree);
    }
    CHECK(total == g.node_count());
    CHECK(freq == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("clustering by degree") {
    auto k4 = clustering_by_degree(make_complete(4));
    CHECK(k4 == std::map<int, double>{{3, 1.0}});

    auto path = clustering_by_degree(make_path(4));
    CHECK(path == std::map<int, double>{{2, 0.0}});

    auto star = clustering_by_degree(make_star(3));
    CHECK(star == std::map<int, double>{{3, 0.0}});  // leaves are excluded

    // No node of degree >= 2 anywhere.
    CHECK_THROWS_AS(clustering_by_degree(make_path(2)), std::invalid_argument);
}

TEST_CASE("leader clustering falls as leader degree rises in the recursive network") {
    auto net = generate_hierarchical(3, 4);
    const Graph& g = net.graph;
    // Leaders one per level, none of them the top leader's own positions.
    const NodeId level1 = net.leaders[1][1];
    const NodeId level2 = net.leaders[2][1];
    const NodeId level3 = net.leaders[3][0];
    const int k1 = g.degree(level1);
    const int k2 = g.degree(level2);
    const int k3 = g.degree(level3);
    CHECK(k1 < k2);
    CHECK(k2 < k3);
    auto by_degree = clustering_by_degree(g);
    CHECK(by_degree.at(k1) > by_degree.at(k2));
    CHECK(by_degree.at(k2) > by_degree.at(k3));
}

TEST_CASE("clustering scaling fit on the recursive network") {
    auto net = generate_hierarchical(4, 4);
    OlsFit fit = clustering_scaling_fit(net.graph);
    CHECK(fit.slope < -0.65);
    CHECK(fit.slope > -1.35);
}

TEST_CASE("metric csv writers") {
    auto hist = degree_histogram(make_star(4));
    std::stringstream hist_csv;
    write_degree_histogram_csv(hist_csv, hist);
    CHECK(hist_csv.str() == "degree,count\n1,4\n4,1\n");

    std::stringstream cc_csv;
    write_clustering_by_degree_csv(cc_csv, clustering_by_degree(make_complete(4)));
    CHECK(cc_csv.str() == "degree,mean_cc\n3,1\n");

    std::stringstream fits_csv;
    write_fits_csv(fits_csv, {{"demo", OlsFit{-1.0, 0.5, -1.25, -0.75, 9}}});
    CHECK(fits_csv.str() ==
          "fit,slope,ci_lo,ci_hi,intercept,n\ndemo,-1,-1.25,-0.75,0.5,9\n");
}
