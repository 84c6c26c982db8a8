#include "doctest.h"
#include "limpack/families.hpp"
#include "limpack/solvers.hpp"
#include "support.hpp"

using namespace limpack;
using limpack::testing::labeled;

TEST_CASE("packing predicates") {
    CHECK(is_k_limited_packing(cycle_graph(5), VertexSet(5, {0, 1, 3}), 2));
    CHECK_FALSE(is_k_limited_packing(path_graph(4), VertexSet::full(4), 2));
    CHECK(is_k_limited_packing(complete_graph(3), VertexSet(3), 1));

    CHECK(is_k_total_limited_packing(fig1_graph(), VertexSet(8, {0, 2, 4, 5, 6, 7}), 2));
    auto k4 = complete_graph(4);
    for (Vertex skip = 0; skip < 4; ++skip) {
        VertexSet s = VertexSet::full(4);
        s.erase(skip);
        CHECK_FALSE(is_k_total_limited_packing(k4, s, 2));
    }
    CHECK(is_k_total_limited_packing(k4, VertexSet(4), 2));
    CHECK_THROWS_AS(is_k_limited_packing(k4, VertexSet(4), 0), std::invalid_argument);
}

TEST_CASE("max_limited_packing examples") {
    CHECK(max_limited_packing(complete_graph(6), 2, true).value == 2);
    CHECK(max_limited_packing(cycle_graph(5), 2, true).value == 5);
    CHECK(max_limited_packing(complete_bipartite(3, 4), 2, false).value == 2);
    CHECK(max_limited_packing(cycle_graph(5), 2, false).value == 3);
    CHECK_THROWS_AS(max_limited_packing(path_graph(70), 2, false), CapExceeded);
}

TEST_CASE("node budget") {
    SearchLimits tight{5};
    CHECK_THROWS_AS(max_limited_packing(cartesian_sharpness_factor(cycle_graph(8)), 2, true, tight), CapExceeded);
}

TEST_CASE("min_dominating examples") {
    CHECK(min_dominating(star_graph(5), true).value == 2);
    CHECK(min_dominating(complete_graph(5), false).value == 1);
    auto p4 = min_dominating(path_graph(4), true);
    CHECK(p4.value == 2);
    CHECK(p4.witness == VertexSet(4, {1, 2}));
    CHECK_THROWS_AS(min_dominating(complete_graph(2).with_isolated(1), true), PreconditionError);
}

TEST_CASE("enumerate_optimal_sets examples") {
    auto p3 = enumerate_optimal_sets(path_graph(3), Invariant::total_limited_packing, 2);
    REQUIRE(p3.size() == 1);
    CHECK(p3.front() == VertexSet::full(3));

    auto c4 = enumerate_optimal_sets(cycle_graph(4), Invariant::limited_packing, 2);
    CHECK(c4.size() == 6);
    for (const auto& s : c4) CHECK(s.size() == 2);

    auto k4 = enumerate_optimal_sets(complete_graph(4), Invariant::domination, 0);
    CHECK(k4.size() == 4);
    for (const auto& s : k4) CHECK(s.size() == 1);

    CHECK(std::is_sorted(c4.begin(), c4.end()));
    CHECK_THROWS_AS(enumerate_optimal_sets(path_graph(25), Invariant::limited_packing, 2), CapExceeded);
}

TEST_CASE("brute_force_oracle examples") {
    CHECK(brute_force_oracle(cycle_graph(5), Invariant::limited_packing, 2) == 3);
    CHECK(brute_force_oracle(complete_graph(2), Invariant::total_limited_packing, 1) == 2);
    CHECK(brute_force_oracle(empty_graph(3), Invariant::limited_packing, 1) == 3);
    CHECK_THROWS_AS(brute_force_oracle(path_graph(3), Invariant::limited_packing, 0), std::invalid_argument);
}

TEST_CASE("oracle equivalence on labeled graphs up to 5 vertices") {
    for (std::size_t n = 0; n <= 5; ++n)
        for (const auto& g : labeled(n))
            for (std::size_t k = 1; k <= 3; ++k)
                for (bool total : {false, true}) {
                    const auto inv = total ? Invariant::total_limited_packing : Invariant::limited_packing;
                    CHECK(max_limited_packing(g, k, total).value == brute_force_oracle(g, inv, k));
                }
}

TEST_CASE("solver properties on labeled 5- and 6-vertex graphs") {
    for (std::size_t n : {5, 6})
        for (std::size_t i = 0; i < labeled(n).size(); i += n == 6 ? 13 : 1) {
            const auto& g = labeled(n)[i];
            const auto delta = g.max_degree();
            for (std::size_t k = 1; k <= 3; ++k) {
                auto lk = max_limited_packing(g, k, false);
                auto lkt = max_limited_packing(g, k, true);
                CHECK(is_k_limited_packing(g, lk.witness, k));
                CHECK(is_k_total_limited_packing(g, lkt.witness, k));
                CHECK(lk.witness.size() == lk.value);
                CHECK(lkt.witness.size() == lkt.value);
                CHECK(lk.value <= lkt.value);
                CHECK(lkt.value <= n);
                CHECK(lk.value <= max_limited_packing(g, k + 1, false).value);
                CHECK(lkt.value <= max_limited_packing(g, k + 1, true).value);
                CHECK(std::min(k, g.order()) <= lkt.value);
                if (k >= delta) CHECK(lkt.value == n);
            }
            CHECK(packing_number(g).value == max_limited_packing(g, 1, false).value);
            CHECK(open_packing_number(g).value == max_limited_packing(g, 1, true).value);

            auto dom = min_dominating(g, false);
            CHECK(is_dominating(g, dom.witness));
            CHECK(dom.witness.size() == dom.value);
            if (g.min_degree() >= 1) {
                auto tdom = min_dominating(g, true);
                CHECK(is_total_dominating(g, tdom.witness));
                CHECK(tdom.witness.size() == tdom.value);
            }
        }
}

TEST_CASE("domination matches the oracle up to 5 vertices") {
    for (std::size_t n = 1; n <= 5; ++n)
        for (const auto& g : labeled(n)) {
            CHECK(min_dominating(g, false).value == brute_force_oracle(g, Invariant::domination, 0));
            if (g.min_degree() >= 1)
                CHECK(min_dominating(g, true).value == brute_force_oracle(g, Invariant::total_domination, 0));
        }
}

TEST_CASE("witnesses are lexicographically least") {
    for (const auto& g : labeled(5)) {
        auto all = enumerate_optimal_sets(g, Invariant::total_limited_packing, 2);
        CHECK(max_limited_packing(g, 2, true).witness == all.front());
        auto doms = enumerate_optimal_sets(g, Invariant::domination, 0);
        CHECK(min_dominating(g, false).witness == doms.front());
    }
}

TEST_CASE("open packing equals total domination on trees") {
    for (std::size_t n = 2; n <= 7; ++n)
        for (const auto& t : generate_corpus(CorpusSpec::all_trees(n)))
            CHECK(open_packing_number(t).value == min_dominating(t, true).value);
}
