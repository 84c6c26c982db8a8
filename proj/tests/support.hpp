#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "limpack/corpus.hpp"
#include "limpack/graph.hpp"

namespace limpack::testing {

/// Brute-force isomorphism for the small graphs used in tests.
inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    if (degree_sequence(a) != degree_sequence(b)) return false;
    std::vector<Vertex> perm(a.order());
    std::iota(perm.begin(), perm.end(), 0);
    const auto edges = a.edges();
    do {
        if (std::all_of(edges.begin(), edges.end(), [&](const Edge& e) { return b.adjacent(perm[e.first], perm[e.second]); }))
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline const std::vector<Graph>& labeled(std::size_t n) {
    static std::vector<std::vector<Graph>> cache(7);
    if (cache[n].empty()) cache[n] = generate_corpus(CorpusSpec::exhaustive_labeled(n));
    return cache[n];
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> edges = a.edges();
    const auto shift = static_cast<Vertex>(a.order());
    for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
    return Graph::from_edges(a.order() + b.order(), edges);
}

} // namespace limpack::testing
