#include <random>
#include <sstream>

#include "doctest.h"
#include "limpack/families.hpp"
#include "limpack/graph_io.hpp"
#include "support.hpp"

using namespace limpack;
using limpack::testing::disjoint_union;
using limpack::testing::labeled;

TEST_CASE("build_graph") {
    auto p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(p4 == path_graph(4));
    CHECK(p4.size() == 3);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0}}), GraphError);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {0, 1}}), GraphError);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), GraphError);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), GraphError);
}

TEST_CASE("neighborhoods") {
    auto p4 = path_graph(4);
    CHECK(p4.neighbors(1).members() == std::vector<Vertex>{0, 2});
    CHECK(p4.closed_neighborhood(1).members() == std::vector<Vertex>{0, 1, 2});
    auto k4 = complete_graph(4);
    for (Vertex v = 0; v < 4; ++v) CHECK(k4.neighbors(v).size() == 3);
    CHECK(fig1_graph().neighbors(0).members() == std::vector<Vertex>{1, 2, 3, 4});
}

TEST_CASE("degree_sequence") {
    CHECK(degree_sequence(complete_graph(4)) == std::vector<std::size_t>{3, 3, 3, 3});
    CHECK(degree_sequence(path_graph(4)) == std::vector<std::size_t>{1, 1, 2, 2});
    CHECK(degree_sequence(fig1_graph()) == std::vector<std::size_t>{1, 1, 1, 1, 2, 2, 2, 4});
}

TEST_CASE("remove_isolated") {
    auto r = remove_isolated(complete_graph(2).with_isolated(1));
    CHECK(r.graph == complete_graph(2));
    CHECK(r.removed == 1);
    auto p = remove_isolated(path_graph(4));
    CHECK(p.graph == path_graph(4));
    CHECK(p.removed == 0);
    auto e = remove_isolated(empty_graph(3));
    CHECK(e.graph.order() == 0);
    CHECK(e.removed == 3);
}

TEST_CASE("diameter") {
    CHECK(diameter(complete_graph(5)) == 1);
    CHECK(diameter(path_graph(4)) == 3);
    CHECK_FALSE(diameter(complete_graph(2).with_isolated(1)).has_value());
}

TEST_CASE("delta_prime") {
    CHECK(delta_prime(star_graph(5)) == 5);
    CHECK(delta_prime(path_graph(4)) == 2);
    CHECK(delta_prime(realization_tree(3, 6)) == 3);
    CHECK_THROWS_AS(delta_prime(cycle_graph(4)), PreconditionError);
}

TEST_CASE("graph-core invariants over exhaustive_labeled(5)") {
    for (const auto& g : labeled(5)) {
        std::size_t lo = g.order(), hi = 0;
        for (Vertex v = 0; v < g.order(); ++v) {
            CHECK(g.closed_neighborhood(v).size() == g.neighbors(v).size() + 1);
            lo = std::min(lo, g.degree(v));
            hi = std::max(hi, g.degree(v));
        }
        const auto seq = degree_sequence(g);
        CHECK(seq.back() == g.max_degree());
        CHECK(seq.front() == g.min_degree());
        CHECK(hi == g.max_degree());
        CHECK(lo == g.min_degree());

        CHECK(Graph::from_edges(g.order(), g.edges()) == g);

        auto once = remove_isolated(g);
        auto twice = remove_isolated(once.graph);
        CHECK(twice.graph == once.graph);
        CHECK(twice.removed == 0);

        const bool complete = g.size() == g.order() * (g.order() - 1) / 2;
        CHECK((diameter(g) == std::optional<std::size_t>{1}) == (complete && g.order() >= 2));
    }
}

TEST_CASE("graph6 hand decodes") {
    auto d = parse_graph6("D?{");
    CHECK(d.order() == 5);
    CHECK(d.edges() == std::vector<Edge>{{0, 4}, {1, 4}, {2, 4}, {3, 4}});
    CHECK(emit_graph6(d) == "D?{");
    CHECK(parse_graph6("A_") == complete_graph(2));
    CHECK(parse_graph6("@") == complete_graph(1));
    CHECK(parse_graph6("?").order() == 0);
    CHECK(parse_graph6(">>graph6<<A_\n") == complete_graph(2));
}

TEST_CASE("graph6 errors") {
    CHECK_THROWS_AS(parse_graph6(""), FormatError);
    CHECK_THROWS_AS(parse_graph6("D?"), FormatError);
    CHECK_THROWS_AS(parse_graph6("D?{?"), FormatError);
    CHECK_THROWS_AS(parse_graph6("A "), FormatError);
    CHECK_THROWS_AS(parse_graph6("A\x7f"), FormatError);
    // n = 2 has one bit; the other five must be zero.
    CHECK_THROWS_AS(parse_graph6("Aa"), FormatError);
}

TEST_CASE("graph6 extended size form") {
    auto big = path_graph(70);
    auto text = emit_graph6(big);
    CHECK(text.substr(0, 4) == std::string{'~', 63, 64, 63 + 6});
    CHECK(parse_graph6(text) == big);
}

TEST_CASE("graph6 round trip on exhaustive_labeled(5)") {
    for (const auto& g : labeled(5)) {
        auto text = emit_graph6(g);
        CHECK(parse_graph6(text) == g);
        CHECK(emit_graph6(parse_graph6(text)) == text);
    }
}

TEST_CASE("graph6 round trip on a random 1000-line stream") {
    std::mt19937_64 rng(11);
    std::ostringstream stream;
    std::vector<Graph> graphs;
    for (int i = 0; i < 1000; ++i) {
        const std::size_t n = rng() % 20;
        std::vector<Edge> edges;
        for (Vertex v = 1; v < n; ++v)
            for (Vertex u = 0; u < v; ++u)
                if (rng() % 3 == 0) edges.emplace_back(u, v);
        graphs.push_back(Graph::from_edges(n, edges));
        stream << emit_graph6(graphs.back()) << '\n';
    }
    std::istringstream in(stream.str());
    auto back = read_graph6_stream(in);
    REQUIRE(back.size() == graphs.size());
    std::ostringstream again;
    for (std::size_t i = 0; i < back.size(); ++i) {
        CHECK(back[i] == graphs[i]);
        again << emit_graph6(back[i]) << '\n';
    }
    CHECK(again.str() == stream.str());
}

TEST_CASE("edge lists") {
    auto p4 = parse_edge_list("0 1\n1 2\n2 3");
    CHECK(p4 == path_graph(4));
    CHECK(parse_edge_list(emit_edge_list(p4)) == p4);
    CHECK_THROWS_AS(parse_edge_list("0 1\n4 4\n"), GraphError);
    CHECK_THROWS_AS(parse_edge_list("0 x\n"), FormatError);
    CHECK_THROWS_AS(parse_edge_list("0 1 2\n"), FormatError);

    auto commented = parse_edge_list("# a comment\n\n0 2  # trailing\n");
    CHECK(commented.order() == 3);
    CHECK(commented.size() == 1);

    auto padded = disjoint_union(path_graph(2), empty_graph(2));
    CHECK(parse_edge_list(emit_edge_list(padded)) == padded);
}
