#include <cmath>

#include "doctest.h"
#include "limpack/families.hpp"
#include "limpack/partition.hpp"
#include "support.hpp"

using namespace limpack;
using limpack::testing::labeled;

TEST_CASE("is_klp_partition") {
    auto k4 = complete_graph(4);
    CHECK(is_klp_partition(k4, Partition{{VertexSet(4, {0, 1}), VertexSet(4, {2, 3})}}, 2));
    CHECK_FALSE(is_klp_partition(k4, Partition{{VertexSet(4, {0, 1, 2}), VertexSet(4, {3})}}, 2));

    auto p4 = path_graph(4);
    CHECK_THROWS_AS(is_klp_partition(p4, Partition{{VertexSet(4, {0, 1}), VertexSet(4, {1, 2}), VertexSet(4, {3})}}, 2),
                    MalformedPartition);
    CHECK_THROWS_AS(is_klp_partition(p4, Partition{{VertexSet(4, {0, 1}), VertexSet(4, {2})}}, 2), MalformedPartition);
    CHECK_THROWS_AS(is_klp_partition(p4, Partition{{VertexSet(4, {0, 1, 2, 3}), VertexSet(4)}}, 2), MalformedPartition);
    CHECK_THROWS_AS(is_klp_partition(p4, Partition{{VertexSet(5, {0, 1, 2, 3})}}, 2), MalformedPartition);
}

TEST_CASE("chi_times_k examples") {
    CHECK(chi_times_k(complete_graph(4), 2).value == 2);
    CHECK(chi_times_k(cycle_graph(4), 2).value == 2);
    CHECK(chi_times_k(path_graph(4), 3).value == 1);
    CHECK(chi_times_k(complete_bipartite(3, 3), 2).value == 3);
    CHECK_THROWS_AS(chi_times_k(path_graph(3), 0), std::invalid_argument);
}

TEST_CASE("greedy_upper_bound examples") {
    CHECK(greedy_upper_bound(complete_graph(4), 2).first == 2);
    CHECK(greedy_upper_bound(empty_graph(5), 1).first == 1);
    CHECK(greedy_upper_bound(star_graph(3), 2).first == 2);
}

TEST_CASE("chi_times_k matches the partition oracle up to 5 vertices") {
    for (std::size_t n = 1; n <= 5; ++n)
        for (const auto& g : labeled(n))
            for (std::size_t k : {1, 2})
                CHECK(chi_times_k(g, k).value == brute_force_oracle(g, Invariant::packing_partition, k));
}

TEST_CASE("chi_times_k properties on labeled 6-vertex graphs") {
    for (std::size_t i = 0; i < labeled(6).size(); i += 13)
        for (std::size_t k : {1, 2, 3}) {
            const auto& g = labeled(6)[i];
            const auto n = g.order();
            auto chi = chi_times_k(g, k);
            const auto lk = max_limited_packing(g, k, false).value;
            CHECK(is_klp_partition(g, chi.witness, k));
            CHECK(chi.witness.classes.size() == chi.value);
            CHECK(chi.value * lk >= n);
            CHECK((chi.value + lk) * (chi.value + lk) >= 4 * n);
            CHECK(chi.value <= (n + k - 1) / k);
            CHECK((chi.value == 1) == (k >= g.max_degree() + 1));
            auto greedy = greedy_upper_bound(g, k);
            CHECK(greedy.first >= chi.value);
            CHECK(is_klp_partition(g, greedy.second, k));
        }
}
