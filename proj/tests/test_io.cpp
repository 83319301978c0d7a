#include <catch2/catch_amalgamated.hpp>

#include "twbound/certificates.hpp"
#include "twbound/exact_treewidth.hpp"
#include "twbound/families.hpp"
#include "twbound/graph_io.hpp"
#include "twbound/json_io.hpp"
#include "twbound/td_io.hpp"

using namespace twbound;

TEST_CASE("pace .gr parsing") {
    const std::string text =
        "c a comment\n"
        "p tw 4 3\n"
        "1 2\n"
        "c another comment\n"
        "2 3\n"
        "4 1\n";
    const Graph g = parse_pace_gr(text);
    REQUIRE(g.n() == 4);
    REQUIRE(g.m() == 3);
    REQUIRE(g.has_edge(0, 1));
    REQUIRE(g.has_edge(1, 2));
    REQUIRE(g.has_edge(0, 3));
}

TEST_CASE("pace .gr rejects malformed input") {
    REQUIRE_THROWS_AS(parse_pace_gr("p cep 3 1\n1 2\n"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_pace_gr("p tw 3\n"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_pace_gr("p tw 3 2\n1 2\n"), std::invalid_argument);      // count short
    REQUIRE_THROWS_AS(parse_pace_gr("p tw 3 1\n1 2\n2 3\n"), std::invalid_argument);  // count long
    REQUIRE_THROWS_AS(parse_pace_gr("p tw 3 1\n1 4\n"), std::invalid_argument);       // range
    REQUIRE_THROWS_AS(parse_pace_gr("p tw 3 1\np tw 3 1\n1 2\n"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_pace_gr("1 2\np tw 3 1\n"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_pace_gr(""), std::invalid_argument);
}

TEST_CASE("pace .gr round trip") {
    const Graph g = grid_graph(3, 4);
    const Graph back = parse_pace_gr(to_pace_gr(g));
    REQUIRE(back == g);
    REQUIRE(looks_like_pace_gr(to_pace_gr(g)));
}

TEST_CASE("edge list parsing") {
    const Graph g = parse_edge_list("# comment\n0 1\n1 2\n\n2 3\n");
    REQUIRE(g.n() == 4);
    REQUIRE(g.m() == 3);
    const Graph h = parse_edge_list("5\n0 1\n");  // leading vertex-count line
    REQUIRE(h.n() == 5);
    REQUIRE(h.m() == 1);
    REQUIRE_FALSE(looks_like_pace_gr("0 1\n1 2\n"));
    const Graph back = parse_edge_list(to_edge_list(gnp(9, 0.4, 4)));
    REQUIRE(back == gnp(9, 0.4, 4));
}

TEST_CASE("pace .td round trip") {
    const Graph g = grid_graph(3, 3);
    const auto td = exact_tw(g).decomposition;
    const std::string text = to_pace_td(td);
    const auto back = parse_pace_td(text);
    REQUIRE(back.n == td.n);
    REQUIRE(back.width() == td.width());
    REQUIRE(validate_td(g, back).valid());
    REQUIRE(to_pace_td(back) == text);
}

TEST_CASE("pace .td rejects malformed input") {
    REQUIRE_THROWS_AS(parse_pace_td(""), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_pace_td("s td x 2 3\n"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_pace_td("s td 1 2 3\nb 2 1 2\n"), std::invalid_argument);  // bag id
    REQUIRE_THROWS_AS(parse_pace_td("s td 1 2 3\nb 1 1 4\n"), std::invalid_argument);  // vertex
    REQUIRE_THROWS_AS(parse_pace_td("s td 2 2 3\nb 1 1\nb 2 2 3\n3 1\n"), std::invalid_argument);
}

TEST_CASE("bounds report serializes to the documented schema") {
    const auto report = bounds_report(complete_bipartite(3, 5));
    const auto j = bounds_json(report);
    REQUIRE(j["graph"]["n"] == 8);
    REQUIRE(j["graph"]["m"] == 15);
    REQUIRE(j["graph"]["max_degree"] == 5);
    REQUIRE(j["spectrum"]["lambda2"].get<double>() == Catch::Approx(3.0).margin(1e-8));
    REQUIRE(j["spectrum"]["lambda_max"].get<double>() == Catch::Approx(8.0).margin(1e-8));
    REQUIRE(j["bounds"].size() == 4);
    REQUIRE(j["bounds"]["thm1"].get<double>() == Catch::Approx(2.0).margin(1e-8));
    REQUIRE(j["best_integer_lower_bound"] == 2);

    // N/A bounds serialize as null
    const auto edgeless = bounds_json(bounds_report(Graph(3, {})));
    REQUIRE(edgeless["bounds"]["cs03"].is_null());
    REQUIRE(edgeless["bounds"]["thm2"].is_null());
    REQUIRE(edgeless["best_integer_lower_bound"] == 0);
}

TEST_CASE("spectrum serializes with eigenvalues and tolerance") {
    const auto j = spectrum_json(eigenvalues(complete(4)));
    REQUIRE(j["eigenvalues"].size() == 4);
    REQUIRE(j["lambda2"].get<double>() == Catch::Approx(4.0).margin(1e-8));
    REQUIRE(j["lambda_max"].get<double>() == Catch::Approx(4.0).margin(1e-8));
    REQUIRE(j["tolerance"].get<double>() == 1e-8);
    const auto single = spectrum_json(eigenvalues(Graph(1, {})));
    REQUIRE(single["lambda2"].is_null());
}

TEST_CASE("exact result serialization carries a full witness") {
    const Graph g = cycle_graph(5);
    const auto result = exact_tw(g);
    const auto j = exact_json(g, result);
    REQUIRE(j["width"] == 2);
    REQUIRE(j["elimination_order"].size() == 5);
    REQUIRE(j["decomposition"]["bags"].size() == result.decomposition.bags.size());
}

TEST_CASE("certificate json can be re-checked from its own graph") {
    const Graph g = grid_graph(2, 4);
    const auto spectrum = eigenvalues(g);
    const auto td = exact_tw(g).decomposition;
    const auto partition = three_partition(g, balanced_separator(g, td));
    const auto t1 = verify_theorem1_chain(g, spectrum, partition);
    const auto t2 = verify_theorem2_chain(g, spectrum, partition);
    const auto j = certificate_json(g, td, t1, t2);

    REQUIRE(j["theorem1"]["pass"] == true);
    REQUIRE(j["theorem2"]["pass"] == true);

    // rebuild the graph and the partition from the json alone and re-verify
    std::vector<Edge> edges;
    for (const auto& e : j["graph"]["edges"]) edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    const Graph back(j["graph"]["n"].get<int>(), edges);
    REQUIRE(back == g);
    BalancedPartition p;
    p.S = j["partition"]["S"].get<std::vector<int>>();
    p.U1 = j["partition"]["U1"].get<std::vector<int>>();
    p.U2 = j["partition"]["U2"].get<std::vector<int>>();
    p.U3 = j["partition"]["U3"].get<std::vector<int>>();
    REQUIRE(verify_theorem1_chain(back, p).pass());
    REQUIRE(verify_theorem2_chain(back, p).pass);
}

TEST_CASE("json output is byte-stable") {
    const Graph g = gnp(10, 0.4, 11);
    REQUIRE(bounds_json(bounds_report(g)).dump() == bounds_json(bounds_report(g)).dump());
    const auto td = exact_tw(g).decomposition;
    REQUIRE(decomposition_json(td).dump() == decomposition_json(td).dump());
}
