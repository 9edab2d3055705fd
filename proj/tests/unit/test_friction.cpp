#include <doctest.h>

#include <cmath>

#include "netorg/friction.hpp"
#include "netorg/generators.hpp"
#include "unit/test_support.hpp"

using namespace netorg;
using namespace netorg::testing;

TEST_CASE("init_colors is uniform, reproducible and in range") {
    Graph single;
    single.add_node();
    Rng rng = make_rng(3);
    auto lone = init_colors(single, rng);
    CHECK(lone[0] >= 0.0);
    CHECK(lone[0] < 1.0);

    Rng a = make_rng(42), b = make_rng(42);
    Graph g = generate_hierarchical(2, 4).graph;
    CHECK(init_colors(g, a) == init_colors(g, b));

    Rng big_rng = make_rng(8);
    auto big = generate_random(121, 1025, big_rng);
    auto colors = init_colors(big, big_rng);
    double mean = 0.0;
    for (NodeId v : big.nodes()) mean += colors[v];
    mean /= big.node_count();
    CHECK(mean == doctest::Approx(0.5).epsilon(0.1));
}

TEST_CASE("step_colors moves both endpoints of an edge to the midpoint") {
    Graph g;
    g.add_node();
    g.add_node();
    g.add_edge(0, 1);
    ColorState colors{0.0, 1.0};
    auto next = step_colors(g, colors);
    CHECK(next[0] == 0.5);
    CHECK(next[1] == 0.5);
}

TEST_CASE("uniform color state is a fixed point") {
    auto g = make_complete(5);
    ColorState colors(5, 0.37);
    CHECK(step_colors(g, colors) == colors);
}

TEST_CASE("step_colors on a three-node path") {
    auto g = make_path(3);
    ColorState colors{0.0, 0.5, 1.0};
    auto next = step_colors(g, colors);
    CHECK(next[0] == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(next[1] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(next[2] == doctest::Approx(0.75).epsilon(1e-15));
}

TEST_CASE("step_colors matches the per-neighbor update formula") {
    Rng rng = make_rng(606);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_graph(rng, 30);
        ColorState colors = init_colors(g, rng);
        ColorState stepped = step_colors(g, colors);
        for (NodeId v : g.nodes()) {
            const auto& nbrs = g.neighbors(v);
            if (nbrs.empty()) {
                CHECK(stepped[v] == colors[v]);
                continue;
            }
            double shift = 0.0;
            for (NodeId w : nbrs) shift += colors[w] - colors[v];
            const double expected = colors[v] + shift / (2.0 * nbrs.size());
            CHECK(stepped[v] == doctest::Approx(expected).epsilon(1e-12));
        }
    }
}

TEST_CASE("color range and spread never grow") {
    Rng rng = make_rng(909);
    Graph g = generate_ba(60, 3, 5, rng);
    ColorState colors = init_colors(g, rng);
    double lo = 1.0, hi = 0.0;
    for (NodeId v : g.nodes()) {
        lo = std::min(lo, colors[v]);
        hi = std::max(hi, colors[v]);
    }
    for (int t = 0; t < 120; ++t) {
        colors = step_colors(g, colors);
        double new_lo = 1.0, new_hi = 0.0;
        for (NodeId v : g.nodes()) {
            new_lo = std::min(new_lo, colors[v]);
            new_hi = std::max(new_hi, colors[v]);
        }
        CHECK(new_lo >= lo);
        CHECK(new_hi <= hi);
        lo = new_lo;
        hi = new_hi;
    }
}

TEST_CASE("friction fitness formula") {
    Graph pair;
    pair.add_node();
    pair.add_node();
    pair.add_edge(0, 1);
    ColorState colors{0.25, 0.75};
    CHECK(friction_fitness(pair, colors, 0) == doctest::Approx(2.0).epsilon(1e-12));

    auto star = make_star(4);
    ColorState star_colors{0.5, 0.0, 0.0, 1.0, 1.0};
    CHECK(friction_fitness(star, star_colors, 0) == doctest::Approx(2.0).epsilon(1e-12));

    ColorState agreed{0.4, 0.4, 0.4, 0.4, 0.4};
    const double capped = friction_fitness(star, agreed, 0);
    CHECK(capped == doctest::Approx(std::sqrt(4.0 / kFitnessEpsilon)));
    CHECK(std::isfinite(capped));

    Graph isolated;
    isolated.add_node();
    CHECK_THROWS_AS(friction_fitness(isolated, ColorState{0.5}, 0),
                    std::invalid_argument);
}

TEST_CASE("colordifference") {
    auto g = make_path(3);
    ColorState flat{0.2, 0.2, 0.2};
    CHECK(colordifference(g, flat, 1) == 0.0);

    Graph pair;
    pair.add_node();
    pair.add_node();
    ColorState extremes{0.0, 1.0};
    CHECK(colordifference(pair, extremes, 0) == 1.0);
    CHECK(colordifference(pair, extremes, 1) == 1.0);

    ColorState ramp{0.0, 0.5, 1.0};
    CHECK(colordifference(g, ramp, 1) == doctest::Approx(0.5).epsilon(1e-15));

    Graph single;
    single.add_node();
    CHECK_THROWS_AS(colordifference(single, ColorState{0.1}, 0),
                    std::invalid_argument);
}

TEST_CASE("run_friction with zero steps reports the initial state") {
    Rng seed_rng = make_rng(31);
    Graph g = generate_random(20, 60, seed_rng);
    Rng run_a = make_rng(500), run_b = make_rng(500);
    auto record = run_friction(g, 0, run_a);
    auto expected_colors = init_colors(g, run_b);
    CHECK(record.final_colors == expected_colors);
    CHECK(record.nodes.size() == 20);
    CHECK(record.colors_in_range);
    CHECK(record.spread_non_increasing);
}

TEST_CASE("run_friction fills observables, fits and flags") {
    Rng rng = make_rng(77);
    Graph g = generate_ba(50, 3, 5, rng);
    auto record = run_friction(g, 40, rng);
    CHECK(record.connected);
    CHECK(record.colors_in_range);
    CHECK(record.spread_non_increasing);
    REQUIRE(record.fitness_vs_degree.has_value());
    REQUIRE(record.colordiff_vs_degree.has_value());
    REQUIRE(record.colordiff_vs_clustering.has_value());
    CHECK(record.fitness_stats.mean > 0.0);
    CHECK(record.colordiff_stats.mean >= 0.0);
    for (size_t i = 0; i < record.nodes.size(); ++i) {
        CHECK(record.fitness[i].has_value());
        CHECK(record.colordiff[i] >= 0.0);
        CHECK(record.colordiff[i] <= 1.0);
    }
}

TEST_CASE("at paper scale the leaders fit worst and differ least") {
    Rng rng = make_rng(2468);
    Graph g = generate_hierarchical(4, 4).graph;
    auto record = run_friction(g, kDefaultFrictionSteps, rng);
    REQUIRE(record.fitness_vs_degree.has_value());
    CHECK(record.fitness_vs_degree->slope < 0.0);
    REQUIRE(record.colordiff_vs_degree.has_value());
    CHECK(record.colordiff_vs_degree->slope < 0.0);
}

TEST_CASE("isolated nodes keep their color and stay out of fitness stats") {
    Graph g;
    g.add_node();
    g.add_node();
    g.add_node();
    g.add_edge(0, 1);  // node 2 isolated
    Rng rng = make_rng(12);
    auto record = run_friction(g, 25, rng);
    CHECK_FALSE(record.connected);
    CHECK_FALSE(record.fitness[2].has_value());
    CHECK(record.fitness[0].has_value());

    ColorState colors{0.1, 0.9, 0.42};
    auto stepped = step_colors(g, colors);
    CHECK(stepped[2] == 0.42);
}
