#include "doctest.h"
#include "limpack/families.hpp"
#include "limpack/products.hpp"
#include "limpack/solvers.hpp"
#include "support.hpp"

using namespace limpack;
using limpack::testing::isomorphic;
using limpack::testing::labeled;

TEST_CASE("standard families") {
    const std::size_t four[] = {4};
    auto k4 = standard(StandardFamily::complete, four);
    CHECK(degree_sequence(k4) == std::vector<std::size_t>{3, 3, 3, 3});
    CHECK_THROWS_AS(cycle_graph(2), GraphError);
    CHECK(isomorphic(complete_bipartite(2, 2), cycle_graph(4)));
    CHECK(parse_standard_family("complete_bipartite") == StandardFamily::complete_bipartite);
    CHECK_FALSE(parse_standard_family("petersen").has_value());
    const std::size_t one[] = {3};
    CHECK_THROWS(standard(StandardFamily::complete_bipartite, one));
}

TEST_CASE("double_star") {
    CHECK(isomorphic(double_star(1, 1), path_graph(4)));
    auto st = double_star(2, 2);
    CHECK(st.order() == 6);
    CHECK(degree_sequence(st) == std::vector<std::size_t>{1, 1, 1, 1, 3, 3});
    auto split = st.without_edge({0, 1});
    CHECK(isomorphic(split, testing::disjoint_union(star_graph(2), star_graph(2))));
}

TEST_CASE("fig1_graph") {
    auto g = fig1_graph();
    CHECK(g.order() == 8);
    CHECK(g.size() == 7);
    CHECK(g.max_degree() == 4);
    CHECK(g.degree(0) == 4);
    CHECK(is_k_total_limited_packing(g, VertexSet(8, {0, 2, 4, 5, 6, 7}), 2));
}

TEST_CASE("omega_membership examples") {
    auto fig = omega_membership(fig1_graph());
    REQUIRE(fig.status == OmegaResult::Status::member);
    CHECK(fig.certificate->a == VertexSet(8, {0, 1, 2, 3, 4}));
    CHECK(is_omega_certificate(fig1_graph(), *fig.certificate));
    // The reference B is one of six valid choices for A = N[v1]; the search reports the lex-least.
    OmegaCertificate reference{VertexSet(8, {0, 1, 2, 3, 4}), VertexSet(8, {0, 2, 4, 5, 6, 7}), 0};
    CHECK(is_omega_certificate(fig1_graph(), reference));

    auto p4 = omega_membership(path_graph(4));
    REQUIRE(p4.status == OmegaResult::Status::member);
    CHECK(is_omega_certificate(path_graph(4), *p4.certificate));
    CHECK(p4.certificate->b == VertexSet::full(4));

    CHECK(omega_membership(complete_graph(5)).status == OmegaResult::Status::not_member);
    CHECK(omega_membership(path_graph(20)).status == OmegaResult::Status::cap_exceeded);
}

TEST_CASE("omega certificates re-check independently") {
    for (std::size_t n = 1; n <= 5; ++n)
        for (const auto& g : labeled(n)) {
            auto r = omega_membership(g);
            if (r.certificate) CHECK(is_omega_certificate(g, *r.certificate));
        }
}

TEST_CASE("diameter2_gadget") {
    auto c3 = diameter2_gadget(3);
    CHECK(c3.order() == 6);
    CHECK(diameter(c3) == 2);
    CHECK(max_limited_packing(c3, 2, true).value == 3);

    auto c4 = diameter2_gadget(4);
    CHECK(c4.order() == 10);
    VertexSet v2(10);
    for (Vertex v = 4; v < 10; ++v) v2.insert(v);
    auto clique = c4.induced(v2);
    CHECK(clique.size() == 15);

    for (std::size_t c = 3; c <= 6; ++c) {
        auto g = diameter2_gadget(c);
        CHECK(diameter(g) == 2);
        CHECK(g.max_degree() == c * (c - 1) / 2 + 1);
    }
}

TEST_CASE("realization_tree") {
    auto spider = realization_tree(3, 6);
    CHECK(spider.order() == 9);
    CHECK(open_packing_number(spider).value == 3);
    CHECK(max_limited_packing(spider, 2, true).value == 6);

    auto small = realization_tree(3, 4);
    CHECK(small.order() == 6);
    CHECK(open_packing_number(small).value == 3);
    // The x = 1 case lands in Ω, so L2t reaches n + 2 - Δ = 5 rather than 4.
    CHECK(max_limited_packing(small, 2, true).value == 5);

    CHECK_THROWS(realization_tree(3, 8));
    CHECK_THROWS(realization_tree(3, 3));
    CHECK_THROWS(realization_tree(2, 4));

    for (std::size_t a = 3; a <= 4; ++a)
        for (std::size_t b = a + 1; b <= 2 * a; ++b) {
            auto t = realization_tree(a, b);
            CHECK(is_tree(t));
            CHECK(t.size() == t.order() - 1);
            CHECK(open_packing_number(t).value == a);
            CHECK(max_limited_packing(t, 2, true).value == (b == a + 1 ? a + 2 : b));
        }
}

TEST_CASE("cartesian_sharpness_factor") {
    CHECK(isomorphic(cartesian_sharpness_factor(complete_graph(2)), path_graph(4)));
    auto cat = cartesian_sharpness_factor(path_graph(3));
    CHECK(cat.order() == 6);
    CHECK(packing_number(cat).value == 3);
    CHECK(isomorphic(cartesian_sharpness_factor(complete_graph(1)), complete_graph(2)));
}

TEST_CASE("corona_chi_family") {
    auto [g22, h22] = corona_chi_family(2, 2);
    CHECK(isomorphic(g22, cycle_graph(4)));
    CHECK(h22 == empty_graph(3));
    auto [g11, h11] = corona_chi_family(1, 1);
    CHECK(g11 == complete_graph(2));
    CHECK(h11 == empty_graph(1));
    auto [g30, h30] = corona_chi_family(3, 0);
    CHECK(isomorphic(g30, complete_bipartite(3, 3)));
    CHECK(h30 == empty_graph(2));
}
