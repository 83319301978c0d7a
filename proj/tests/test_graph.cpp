#include <catch2/catch_amalgamated.hpp>

#include "support/oracles.hpp"
#include "twbound/graph.hpp"

using twbound::Edge;
using twbound::Graph;

TEST_CASE("edges are normalized and sorted") {
    const Graph g(4, {{2, 1}, {3, 0}, {0, 1}});
    REQUIRE(g.n() == 4);
    REQUIRE(g.m() == 3);
    REQUIRE(g.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}});
    REQUIRE(g.has_edge(1, 2));
    REQUIRE(g.has_edge(2, 1));
    REQUIRE_FALSE(g.has_edge(0, 2));
}

TEST_CASE("invalid edges are rejected") {
    REQUIRE_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    REQUIRE_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    REQUIRE_THROWS_AS(Graph(3, {{-1, 2}}), std::invalid_argument);
    REQUIRE_THROWS_AS(Graph(3, {{0, 1}, {0, 1}}), std::invalid_argument);
    REQUIRE_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    REQUIRE_THROWS_AS(Graph(-1, {}), std::invalid_argument);
}

TEST_CASE("neighbor lists and degrees") {
    const Graph g(5, {{0, 1}, {0, 2}, {0, 3}, {2, 3}});
    REQUIRE(g.neighbors(0) == std::vector<int>{1, 2, 3});
    REQUIRE(g.neighbors(4).empty());
    REQUIRE(g.degree(0) == 3);
    REQUIRE(g.degree(4) == 0);
    REQUIRE(g.max_degree() == 3);
}

TEST_CASE("completeness check") {
    REQUIRE(Graph(1, {}).is_complete());
    REQUIRE(Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}).is_complete());
    REQUIRE_FALSE(Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}).is_complete());
    REQUIRE_FALSE(Graph(2, {}).is_complete());
}

TEST_CASE("components match the union-find oracle") {
    // two triangles plus an isolated vertex
    const Graph g(7, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    const auto ids = twbound::component_ids(g);
    REQUIRE(ids[0] == ids[1]);
    REQUIRE(ids[1] == ids[2]);
    REQUIRE(ids[3] == ids[4]);
    REQUIRE(ids[0] != ids[3]);
    REQUIRE(ids[6] != ids[0]);
    const auto s = twbound::stats(g);
    REQUIRE(s.component_count == 3);
    REQUIRE(s.component_count == oracle::union_find_components(g));
    REQUIRE(s.n == 7);
    REQUIRE(s.m == 6);
    REQUIRE(s.max_degree == 2);
}

TEST_CASE("component count agrees with the oracle across the corpus") {
    for (const auto& [name, g] : oracle::family_corpus(9)) {
        INFO(name);
        REQUIRE(twbound::stats(g).component_count == oracle::union_find_components(g));
    }
    for (const auto& [name, g] : oracle::gnp_corpus(25, 3, 12)) {
        INFO(name);
        REQUIRE(twbound::stats(g).component_count == oracle::union_find_components(g));
    }
}

TEST_CASE("graph equality") {
    const Graph a(3, {{0, 1}, {1, 2}});
    const Graph b(3, {{2, 1}, {1, 0}});
    const Graph c(3, {{0, 1}});
    REQUIRE(a == b);
    REQUIRE_FALSE(a == c);
}
