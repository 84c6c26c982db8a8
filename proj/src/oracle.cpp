// Plain enumeration oracle. Intentionally naive: adjacency lists, per-subset
// membership vectors, no pruning, no bitset tricks.

#include <limits>
#include <vector>

#include "limpack/solvers.hpp"

namespace limpack {

namespace {

using AdjList = std::vector<std::vector<Vertex>>;

AdjList adjacency_lists(const Graph& g) {
    AdjList adj(g.order());
    for (Vertex v = 0; v < g.order(); ++v) adj[v] = g.neighbors(v).members();
    return adj;
}

std::size_t count_in(const std::vector<Vertex>& nbrs, const std::vector<bool>& in) {
    std::size_t c = 0;
    for (auto w : nbrs)
        if (in[w]) ++c;
    return c;
}

bool feasible(const AdjList& adj, const std::vector<bool>& in, Invariant inv, std::size_t k) {
    for (std::size_t v = 0; v < adj.size(); ++v) {
        const std::size_t open = count_in(adj[v], in);
        const std::size_t closed = open + (in[v] ? 1 : 0);
        switch (inv) {
        case Invariant::limited_packing:
            if (closed > k) return false;
            break;
        case Invariant::total_limited_packing:
            if (open > k) return false;
            break;
        case Invariant::domination:
            if (closed == 0) return false;
            break;
        case Invariant::total_domination:
            if (open == 0) return false;
            break;
        case Invariant::packing_partition: return false;
        }
    }
    return true;
}

std::size_t subset_oracle(const Graph& g, Invariant inv, std::size_t k) {
    const std::size_t n = g.order();
    const AdjList adj = adjacency_lists(g);
    const bool maximize = inv == Invariant::limited_packing || inv == Invariant::total_limited_packing;
    std::size_t best = maximize ? 0 : std::numeric_limits<std::size_t>::max();
    std::vector<bool> in(n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::size_t size = 0;
        for (std::size_t v = 0; v < n; ++v) {
            in[v] = ((mask >> v) & 1U) != 0;
            if (in[v]) ++size;
        }
        if (!feasible(adj, in, inv, k)) continue;
        best = maximize ? std::max(best, size) : std::min(best, size);
    }
    if (best == std::numeric_limits<std::size_t>::max())
        throw PreconditionError("no feasible set exists (isolated vertex under total domination)");
    return best;
}

/// Every restricted growth string labels one set partition exactly once.
void partitions(const AdjList& adj, std::size_t k, std::vector<std::size_t>& label, std::size_t pos,
                std::size_t classes, std::size_t& best) {
    const std::size_t n = adj.size();
    if (pos == n) {
        for (std::size_t c = 0; c < classes; ++c) {
            std::vector<bool> in(n);
            for (std::size_t v = 0; v < n; ++v) in[v] = label[v] == c;
            if (!feasible(adj, in, Invariant::limited_packing, k)) return;
        }
        best = std::min(best, classes);
        return;
    }
    for (std::size_t c = 0; c <= classes; ++c) {
        label[pos] = c;
        partitions(adj, k, label, pos + 1, std::max(classes, c + 1), best);
    }
}

} // namespace

std::size_t brute_force_oracle(const Graph& g, Invariant inv, std::size_t k) {
    const bool needs_k = inv == Invariant::limited_packing || inv == Invariant::total_limited_packing ||
                         inv == Invariant::packing_partition;
    if (needs_k && k == 0) throw std::invalid_argument("k must be at least 1");
    if (inv == Invariant::packing_partition) {
        if (g.order() > 10) throw CapExceeded("partition oracle is limited to 10 vertices");
        if (g.order() == 0) return 0;
        const AdjList adj = adjacency_lists(g);
        std::vector<std::size_t> label(g.order(), 0);
        std::size_t best = std::numeric_limits<std::size_t>::max();
        partitions(adj, k, label, 0, 0, best);
        return best;
    }
    if (g.order() > max_enumeration_order) throw CapExceeded("subset oracle is limited to 24 vertices");
    return subset_oracle(g, inv, k);
}

} // namespace limpack
