#include <doctest.h>

#include <algorithm>
#include <map>
#include <sstream>

#include "netorg/graph.hpp"
#include "unit/test_support.hpp"

using namespace netorg;
using namespace netorg::testing;

TEST_CASE("add_node assigns sequential ids") {
    Graph g;
    CHECK(g.add_node() == 0);
    CHECK(g.node_count() == 1);
    CHECK(g.add_node() == 1);
    CHECK(g.add_node() == 2);
    CHECK(g.add_node() == 3);

    Graph big;
    for (int i = 0; i < 120; ++i) big.add_node();
    const int edges_before = big.edge_count();
    CHECK(big.add_node() == 120);
    CHECK(big.edge_count() == edges_before);
}

TEST_CASE("add_edge updates symmetric adjacency and rejects bad input") {
    Graph g;
    g.add_node();
    g.add_node();
    g.add_edge(0, 1);
    CHECK(g.edge_count() == 1);
    CHECK(g.degree(0) == 1);
    CHECK(g.degree(1) == 1);
    CHECK(g.has_edge(1, 0));

    CHECK_THROWS_WITH_AS(g.add_edge(0, 0), doctest::Contains("self-loop"), GraphError);
    CHECK_THROWS_AS(g.add_edge(0, 1), GraphError);
    CHECK_THROWS_AS(g.add_edge(0, 7), GraphError);

    try {
        g.add_edge(0, 1);
    } catch (const GraphError& e) {
        CHECK(e.code() == GraphErrorCode::DuplicateEdge);
    }
    try {
        g.add_edge(0, 9);
    } catch (const GraphError& e) {
        CHECK(e.code() == GraphErrorCode::UnknownNode);
    }
}

TEST_CASE("degree") {
    auto star = make_star(4);
    CHECK(star.degree(0) == 4);
    Graph g;
    g.add_node();
    CHECK(g.degree(0) == 0);
    auto k4 = make_complete(4);
    for (NodeId v : k4.nodes()) CHECK(k4.degree(v) == 3);
}

TEST_CASE("clustering coefficient") {
    auto k4 = make_complete(4);
    for (NodeId v : k4.nodes()) CHECK(*k4.clustering_coefficient(v) == 1.0);

    auto star = make_star(3);
    CHECK(*star.clustering_coefficient(0) == 0.0);
    CHECK_FALSE(star.clustering_coefficient(1).has_value());  // degree 1
}

TEST_CASE("shortest path length") {
    auto path = make_path(4);
    CHECK(*path.shortest_path_length(2, 2) == 0);
    CHECK(*path.shortest_path_length(0, 3) == 3);

    Graph two;
    two.add_node();
    two.add_node();
    CHECK_FALSE(two.shortest_path_length(0, 1).has_value());
}

TEST_CASE("diameter") {
    CHECK(*make_complete(4).diameter() == 1);
    CHECK(*make_path(5).diameter() == 4);

    Graph disjoint;
    for (int i = 0; i < 4; ++i) disjoint.add_node();
    disjoint.add_edge(0, 1);
    disjoint.add_edge(2, 3);
    CHECK_FALSE(disjoint.diameter().has_value());

    Graph empty;
    CHECK_THROWS_AS(empty.diameter(), GraphError);
}

TEST_CASE("is_connected") {
    CHECK(make_complete(4).is_connected());

    auto k4 = make_complete(4);
    k4.add_node();
    CHECK_FALSE(k4.is_connected());

    Graph single;
    single.add_node();
    CHECK(single.is_connected());
}

TEST_CASE("remove_node keeps ids stable and preserves symmetry") {
    auto star = make_star(4);
    star.remove_node(0);
    CHECK(star.edge_count() == 0);
    CHECK(star.node_count() == 4);
    for (NodeId v : star.nodes()) CHECK(star.degree(v) == 0);
    CHECK_FALSE(star.contains(0));
    CHECK(star.nodes() == std::vector<NodeId>{1, 2, 3, 4});

    auto k4 = make_complete(4);
    k4.remove_node(2);
    CHECK(k4.node_count() == 3);
    CHECK(k4.edge_count() == 3);
    CHECK(*k4.diameter() == 1);

    Graph g;
    g.add_node();
    g.add_node();
    g.add_edge(0, 1);
    g.add_node();
    g.remove_node(2);
    CHECK(g.edge_count() == 1);
}

TEST_CASE("random operation sequences keep adjacency symmetric and edge count exact") {
    Rng rng = make_rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g;
        g.add_node();
        for (int op = 0; op < 200; ++op) {
            const int roll = uniform_index(rng, 10);
            auto alive = g.nodes();
            if (roll < 3 || alive.size() < 2) {
                g.add_node();
            } else if (roll < 8) {
                NodeId u = alive[uniform_index(rng, static_cast<int>(alive.size()))];
                NodeId v = alive[uniform_index(rng, static_cast<int>(alive.size()))];
                if (u != v && !g.has_edge(u, v)) g.add_edge(u, v);
            } else if (!alive.empty()) {
                g.remove_node(alive[uniform_index(rng, static_cast<int>(alive.size()))]);
            }
        }
        long long degree_sum = 0;
        for (NodeId v : g.nodes()) {
            degree_sum += g.degree(v);
            for (NodeId w : g.neighbors(v)) {
                CHECK(g.neighbors(w).count(v) == 1);
            }
        }
        CHECK(degree_sum == 2LL * g.edge_count());
    }
}

TEST_CASE("diameter and metrics agree with brute-force oracles on random graphs") {
    Rng rng = make_rng(4242);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_graph(rng, 50);
        CHECK(g.diameter() == oracle_diameter(g));
        for (NodeId v : g.nodes()) {
            CHECK(g.degree(v) == oracle_degree(g, v));
            CHECK(g.clustering_coefficient(v) == oracle_clustering(g, v));
        }
    }
}

TEST_CASE("clustering coefficient is invariant under node relabeling") {
    Rng rng = make_rng(7);
    Graph g = random_graph(rng, 30);
    auto ids = g.nodes();
    std::vector<NodeId> perm = ids;
    for (size_t i = perm.size(); i > 1; --i) {
        std::swap(perm[i - 1], perm[uniform_index(rng, static_cast<int>(i))]);
    }
    std::map<NodeId, NodeId> relabel;
    for (size_t i = 0; i < ids.size(); ++i) relabel[ids[i]] = perm[i];

    Graph h;
    for (size_t i = 0; i < ids.size(); ++i) h.add_node();
    for (const auto& [u, v] : g.edges()) h.add_edge(relabel[u], relabel[v]);

    for (NodeId v : ids) {
        CHECK(g.clustering_coefficient(v) == h.clustering_coefficient(relabel[v]));
    }
}

TEST_CASE("edge list round trip") {
    Rng rng = make_rng(11);
    Graph g = random_graph(rng, 25);
    std::stringstream buffer;
    write_edge_list(g, buffer);
    Graph back = read_edge_list(buffer);
    CHECK(back.edge_count() == g.edge_count());
    CHECK(back.edges() == g.edges());
}
