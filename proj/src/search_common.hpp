#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#include "limpack/solvers.hpp"

namespace limpack::detail {

using Mask = std::uint64_t;

inline Mask bit(std::size_t v) { return Mask{1} << v; }

inline Mask all_vertices(std::size_t n) { return n == 64 ? ~Mask{0} : bit(n) - 1; }

inline int popcount(Mask m) { return std::popcount(m); }

inline std::size_t lowest(Mask m) { return static_cast<std::size_t>(std::countr_zero(m)); }

/// Counts search nodes against an optional budget.
class NodeBudget {
public:
    explicit NodeBudget(SearchLimits limits) : limit_(limits.max_nodes) {}

    void tick() {
        ++nodes_;
        if (limit_ != 0 && nodes_ > limit_) throw CapExceeded("search node budget exceeded");
    }

    [[nodiscard]] std::uint64_t nodes() const { return nodes_; }

private:
    std::uint64_t limit_;
    std::uint64_t nodes_ = 0;
};

inline void require_solver_order(const Graph& g) {
    if (g.order() > max_solver_order) throw CapExceeded("graph order exceeds the exact solver limit of 64");
}

/// Per-vertex masks: closed (N[v]) or open (N(v)) neighborhoods.
inline std::vector<Mask> neighborhood_masks(const Graph& g, bool closed) {
    std::vector<Mask> out(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        out[v] = g.neighbors(v).low_word();
        if (closed) out[v] |= bit(v);
    }
    return out;
}

/// Vertices sorted by descending degree, ties by index.
inline std::vector<std::size_t> degree_order(const Graph& g) {
    std::vector<std::size_t> order(g.order());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
        return g.degree(static_cast<Vertex>(a)) > g.degree(static_cast<Vertex>(b));
    });
    return order;
}

inline void require_positive_k(std::size_t k) {
    if (k == 0) throw std::invalid_argument("k must be at least 1");
}

} // namespace limpack::detail
