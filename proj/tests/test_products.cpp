#include "doctest.h"
#include "limpack/families.hpp"
#include "limpack/products.hpp"
#include "support.hpp"

using namespace limpack;
using limpack::testing::disjoint_union;
using limpack::testing::isomorphic;

namespace {

std::vector<Graph> small_factors() {
    return {path_graph(1), path_graph(2), path_graph(3), path_graph(4), cycle_graph(3), cycle_graph(4),
            star_graph(3), complete_graph(4), complete_graph(2).with_isolated(1)};
}

} // namespace

TEST_CASE("cartesian") {
    CHECK(isomorphic(cartesian_product(path_graph(2), path_graph(2)).graph(), cycle_graph(4)));
    auto prism = cartesian_product(complete_graph(2), complete_graph(3)).graph();
    CHECK(prism.order() == 6);
    CHECK(prism.size() == 9);
    auto p = cartesian_product(path_graph(4), complete_graph(3));
    for (Vertex g = 0; g < 4; ++g) CHECK(p.graph().induced(layer(p, LayerAxis::h_layer, g)) == complete_graph(3));
}

TEST_CASE("direct") {
    CHECK(isomorphic(direct_product(path_graph(2), path_graph(2)).graph(),
                     disjoint_union(complete_graph(2), complete_graph(2))));
    auto p4 = path_graph(4);
    CHECK(isomorphic(direct_product(p4, complete_graph(2)).graph(), disjoint_union(p4, p4)));
    CHECK(direct_product(complete_graph(1), cycle_graph(5)).graph() == empty_graph(5));
}

TEST_CASE("rooted") {
    CHECK(isomorphic(rooted_product(complete_graph(2), complete_graph(2), 0).graph(), path_graph(4)));
    CHECK(isomorphic(rooted_product(path_graph(3), complete_graph(2), 0).graph(), corona_product(path_graph(3), complete_graph(1)).graph()));

    auto p = rooted_product(complete_graph(2), path_graph(3), 1);
    CHECK(p.graph().order() == 6);
    std::size_t between = 0;
    for (auto [u, v] : p.graph().edges())
        if (p.coord(u).g != p.coord(v).g) ++between;
    CHECK(between == 1);
    CHECK_THROWS_AS(rooted_product(complete_graph(2), path_graph(3), 3), std::out_of_range);
}

TEST_CASE("corona") {
    CHECK(isomorphic(corona_product(complete_graph(2), complete_graph(1)).graph(), path_graph(4)));
    auto [g, h] = corona_chi_family(2, 2);
    auto c = corona_product(g, h);
    CHECK(c.graph().order() == 16);
    for (Vertex v = 0; v < 4; ++v) CHECK(c.graph().degree(v) == 5);
    CHECK_THROWS_AS(layer(c, LayerAxis::g_layer, 0), std::invalid_argument);
}

TEST_CASE("layers") {
    auto cp = cartesian_product(path_graph(4), complete_graph(3));
    auto h0 = layer(cp, LayerAxis::h_layer, 0);
    CHECK(h0.size() == 3);
    CHECK(cp.graph().induced(h0) == complete_graph(3));

    auto dp = direct_product(path_graph(4), complete_graph(3));
    for (Vertex h = 0; h < 3; ++h) {
        auto gl = layer(dp, LayerAxis::g_layer, h);
        CHECK(gl.size() == 4);
        CHECK(dp.graph().induced(gl).size() == 0);
    }

    auto rp = rooted_product(complete_graph(2), path_graph(3), 0);
    CHECK(rp.graph().induced(layer(rp, LayerAxis::h_layer, 1)) == path_graph(3));
    CHECK_THROWS_AS(layer(rp, LayerAxis::h_layer, 2), std::out_of_range);
}

TEST_CASE("degree laws") {
    const auto factors = small_factors();
    for (const auto& g : factors)
        for (const auto& h : factors) {
            auto cp = cartesian_product(g, h);
            auto dp = direct_product(g, h);
            for (Vertex a = 0; a < g.order(); ++a)
                for (Vertex b = 0; b < h.order(); ++b) {
                    CHECK(cp.graph().degree(cp.vertex(a, b)) == g.degree(a) + h.degree(b));
                    CHECK(dp.graph().degree(dp.vertex(a, b)) == g.degree(a) * h.degree(b));
                    CHECK(cp.coord(cp.vertex(a, b)).g == a);
                    CHECK(cp.coord(cp.vertex(a, b)).h == b);
                }
            for (Vertex root = 0; root < h.order(); ++root) {
                auto rp = rooted_product(g, h, root);
                for (Vertex a = 0; a < g.order(); ++a)
                    for (Vertex b = 0; b < h.order(); ++b) {
                        const auto expect = b == root ? g.degree(a) + h.degree(b) : h.degree(b);
                        CHECK(rp.graph().degree(rp.vertex(a, b)) == expect);
                    }
            }
            auto co = corona_product(g, h);
            for (Vertex a = 0; a < g.order(); ++a) CHECK(co.graph().degree(co.vertex(a, std::nullopt)) == g.degree(a) + h.order());
        }
}

TEST_CASE("products are reproducible") {
    auto a = cartesian_product(cycle_graph(4), star_graph(3));
    auto b = cartesian_product(cycle_graph(4), star_graph(3));
    CHECK(a.graph() == b.graph());
    for (Vertex v = 0; v < a.graph().order(); ++v) {
        CHECK(a.coord(v).g == b.coord(v).g);
        CHECK(a.coord(v).h == b.coord(v).h);
    }
    CHECK_THROWS_AS(cartesian_product(Graph::from_edges(0, {}), path_graph(2)), GraphError);
}
