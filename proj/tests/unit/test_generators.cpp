#include <doctest.h>

#include <cmath>
#include <set>

#include "netorg/generators.hpp"
#include "netorg/metrics.hpp"
#include "unit/test_support.hpp"

using namespace netorg;
using namespace netorg::testing;

TEST_CASE("generate_random produces the exact edge count") {
    Rng rng = make_rng(1);
    auto saturated = generate_random(4, 6, rng);
    CHECK(saturated.node_count() == 4);
    CHECK(saturated.edge_count() == 6);  // only K4 fits
    for (NodeId v : saturated.nodes()) CHECK(saturated.degree(v) == 3);

    auto paper_scale = generate_random(121, 1025, rng);
    CHECK(paper_scale.node_count() == 121);
    CHECK(paper_scale.edge_count() == 1025);

    auto isolated = generate_random(10, 0, rng);
    CHECK(isolated.node_count() == 10);
    CHECK(isolated.edge_count() == 0);

    CHECK_THROWS_AS(generate_random(4, 7, rng), std::invalid_argument);
}

TEST_CASE("generate_random is deterministic per seed") {
    Rng a = make_rng(77), b = make_rng(77), c = make_rng(78);
    auto first = generate_random(40, 100, a);
    auto second = generate_random(40, 100, b);
    auto third = generate_random(40, 100, c);
    CHECK(first.edges() == second.edges());
    CHECK(first.edges() != third.edges());
}

TEST_CASE("generate_ba sizes and seed path") {
    Rng rng = make_rng(5);
    auto just_seed = generate_ba(5, 3, 5, rng);
    CHECK(just_seed.node_count() == 5);
    CHECK(just_seed.edge_count() == 4);
    CHECK(just_seed.degree(0) == 1);
    CHECK(just_seed.degree(2) == 2);

    auto paper_scale = generate_ba(121, 4, 5, rng);
    CHECK(paper_scale.node_count() == 121);
    CHECK(paper_scale.edge_count() == 4 + 4 * 116);

    CHECK_THROWS_AS(generate_ba(10, 4, 3, rng), std::invalid_argument);
    CHECK_THROWS_AS(generate_ba(10, 0, 5, rng), std::invalid_argument);
    CHECK_THROWS_AS(generate_ba(3, 2, 5, rng), std::invalid_argument);
}

TEST_CASE("generate_ba with single attachment grows a tree") {
    Rng rng = make_rng(9);
    auto tree = generate_ba(6, 1, 2, rng);
    CHECK(tree.node_count() == 6);
    CHECK(tree.edge_count() == 5);
    CHECK(tree.is_connected());  // n-1 edges and connected: acyclic
}

TEST_CASE("generate_ba edge formula and connectivity across parameters") {
    Rng rng = make_rng(123);
    for (int m = 1; m <= 5; ++m) {
        for (int n : {10, 37, 121}) {
            auto g = generate_ba(n, m, 5, rng);
            CHECK(g.edge_count() == 4 + static_cast<long long>(m) * (n - 5));
            CHECK(g.is_connected());
        }
    }
}

TEST_CASE("sample_by_degree matches attachment probabilities within 3 se") {
    const auto fixed = generate_hierarchical(2, 4).graph;
    Rng rng = make_rng(2024);
    const int draws = 2000;
    std::map<NodeId, int> hits;
    for (int i = 0; i < draws; ++i) ++hits[sample_by_degree(fixed, rng)];
    const double total_degree = 2.0 * fixed.edge_count();
    for (NodeId v : fixed.nodes()) {
        const double p = fixed.degree(v) / total_degree;
        const double se = std::sqrt(p * (1.0 - p) / draws);
        const double freq = hits[v] / static_cast<double>(draws);
        CHECK(std::abs(freq - p) <= 3.0 * se);
    }

    Graph edgeless;
    edgeless.add_node();
    CHECK_THROWS_AS(sample_by_degree(edgeless, rng), std::invalid_argument);
}

TEST_CASE("generate_hierarchical sizes follow the replication recursion") {
    auto level1 = generate_hierarchical(1, 4);
    CHECK(level1.graph.node_count() == 4);
    CHECK(level1.graph.edge_count() == 6);
    for (NodeId v : level1.graph.nodes()) CHECK(*level1.graph.clustering_coefficient(v) == 1.0);

    auto level2 = generate_hierarchical(2, 4);
    CHECK(level2.graph.node_count() == 16);
    CHECK(level2.graph.edge_count() == 39);

    auto level4 = generate_hierarchical(4, 4);
    CHECK(level4.graph.node_count() == 256);
    CHECK(level4.graph.edge_count() == 1023);
    CHECK(level4.graph.degree(level4.top_leader()) == 255);

    CHECK_THROWS_AS(generate_hierarchical(0, 4), std::invalid_argument);
    CHECK_THROWS_AS(generate_hierarchical(2, 1), std::invalid_argument);
}

TEST_CASE("generate_hierarchical is deterministic and shallow") {
    auto a = generate_hierarchical(3, 4);
    auto b = generate_hierarchical(3, 4);
    CHECK(a.graph.edges() == b.graph.edges());

    CHECK(*generate_hierarchical(1, 4).graph.diameter() == 1);  // complete graph
    for (int levels = 2; levels <= 4; ++levels) {
        CHECK(*generate_hierarchical(levels, 4).graph.diameter() == 2);
    }
}

TEST_CASE("generate_hierarchical exposes cluster leaders per level") {
    auto net = generate_hierarchical(3, 4);
    REQUIRE(net.leaders.size() == 4);
    CHECK(net.leaders[0].size() == 64);
    CHECK(net.leaders[1].size() == 16);
    CHECK(net.leaders[2].size() == 4);
    CHECK(net.leaders[3].size() == 1);
    CHECK(net.top_leader() == 0);
    // A level-k leader reaches every node of its own cluster directly.
    const NodeId second_l2 = net.leaders[2][1];
    for (NodeId v = second_l2 + 1; v < second_l2 + 16; ++v) {
        CHECK(net.graph.has_edge(second_l2, v));
    }
}

TEST_CASE("degree distributions: growth and replication skew right, uniform does not") {
    for (std::uint64_t seed : {101u, 202u, 303u}) {
        Rng rng = make_rng(seed);
        auto ba = generate_ba(121, 4, 5, rng);
        auto uniform_pairs = generate_random(121, 1025, rng);

        auto degrees = [](const Graph& g) {
            std::vector<double> out;
            for (NodeId v : g.nodes()) out.push_back(g.degree(v));
            return out;
        };
        auto ba_deg = degrees(ba);
        auto rnd_deg = degrees(uniform_pairs);
        const double ba_max = *std::max_element(ba_deg.begin(), ba_deg.end());
        const double rnd_max = *std::max_element(rnd_deg.begin(), rnd_deg.end());
        CHECK(ba_max > 3.0 * median(ba_deg));
        CHECK(rnd_max < 2.5 * median(rnd_deg));
    }
    auto hier = generate_hierarchical(4, 4).graph;
    std::vector<double> hier_deg;
    for (NodeId v : hier.nodes()) hier_deg.push_back(hier.degree(v));
    CHECK(*std::max_element(hier_deg.begin(), hier_deg.end()) > 3.0 * median(hier_deg));
}

TEST_CASE("generate_network dispatches on kind") {
    GeneratorParams params;
    params.kind = NetworkKind::Hierarchical;
    params.levels = 2;
    params.branching = 4;
    CHECK(generate_network(params).node_count() == 16);

    params.kind = NetworkKind::Random;
    params.n = 10;
    params.m_edges = 9;
    params.rng_seed = 3;
    auto a = generate_network(params);
    auto b = generate_network(params);
    CHECK(a.edges() == b.edges());

    CHECK(network_kind_from_string("random") == NetworkKind::Random);
    CHECK(network_kind_from_string("ba") == NetworkKind::NonHierarchical);
    CHECK(network_kind_from_string(to_string(NetworkKind::Hierarchical)) ==
          NetworkKind::Hierarchical);
    CHECK_THROWS_AS(network_kind_from_string("pentagon"), std::invalid_argument);
}
