#include "limpack/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace limpack {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g;
    g.adj_.assign(n, VertexSet(n));
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n=" +
                             std::to_string(n));
        if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
        if (g.adj_[u].contains(v))
            throw GraphError("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        g.adj_[u].insert(v);
        g.adj_[v].insert(u);
        ++g.edge_count_;
    }
    return g;
}

std::size_t Graph::max_degree() const {
    std::size_t best = 0;
    for (const auto& a : adj_) best = std::max(best, a.size());
    return best;
}

std::size_t Graph::min_degree() const {
    if (adj_.empty()) return 0;
    std::size_t best = adj_.size();
    for (const auto& a : adj_) best = std::min(best, a.size());
    return best;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < adj_.size(); ++u)
        adj_[u].for_each([&](Vertex v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

Graph Graph::without_edge(Edge e) const {
    auto [u, v] = e;
    if (u >= order() || v >= order() || !adjacent(u, v))
        throw GraphError("(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
    Graph g = *this;
    g.adj_[u].erase(v);
    g.adj_[v].erase(u);
    --g.edge_count_;
    return g;
}

Graph Graph::with_isolated(std::size_t count) const {
    auto e = edges();
    return from_edges(order() + count, e);
}

Graph Graph::induced(const VertexSet& keep) const {
    std::vector<Vertex> relabel(order(), 0);
    Vertex next = 0;
    keep.for_each([&](Vertex v) { relabel[v] = next++; });
    std::vector<Edge> e;
    for (auto [u, v] : edges())
        if (keep.contains(u) && keep.contains(v)) e.emplace_back(relabel[u], relabel[v]);
    return from_edges(next, e);
}

std::vector<std::size_t> degree_sequence(const Graph& g) {
    std::vector<std::size_t> d(g.order());
    for (Vertex v = 0; v < g.order(); ++v) d[v] = g.degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

IsolatedRemoval remove_isolated(const Graph& g) {
    VertexSet keep(g.order());
    IsolatedRemoval out;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) > 0) {
            keep.insert(v);
            out.original_index.push_back(v);
        } else {
            ++out.removed;
        }
    }
    out.graph = g.induced(keep);
    return out;
}

namespace {

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
    constexpr auto unreached = static_cast<std::size_t>(-1);
    std::vector<std::size_t> dist(g.order(), unreached);
    std::deque<Vertex> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        g.neighbors(u).for_each([&](Vertex w) {
            if (dist[w] == unreached) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        });
    }
    return dist;
}

} // namespace

std::optional<std::size_t> diameter(const Graph& g) {
    std::size_t best = 0;
    for (Vertex s = 0; s < g.order(); ++s) {
        for (auto d : bfs_distances(g, s)) {
            if (d == static_cast<std::size_t>(-1)) return std::nullopt;
            best = std::max(best, d);
        }
    }
    return best;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](auto d) { return d == static_cast<std::size_t>(-1); });
}

bool is_tree(const Graph& g) {
    return g.order() >= 1 && g.size() + 1 == g.order() && is_connected(g);
}

bool is_star(const Graph& g) {
    if (g.order() < 3 || !is_tree(g)) return false;
    return g.max_degree() + 1 == g.order();
}

std::vector<Vertex> leaves(const Graph& g) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == 1) out.push_back(v);
    return out;
}

std::size_t delta_prime(const Graph& tree) {
    if (tree.order() < 3) throw PreconditionError("delta_prime needs a tree of order >= 3");
    if (!is_tree(tree)) throw PreconditionError("delta_prime needs a tree");
    std::size_t best = 0;
    for (Vertex v = 0; v < tree.order(); ++v) {
        auto d = tree.degree(v);
        if (d >= 2 && (best == 0 || d < best)) best = d;
    }
    // Unreachable for trees of order >= 3, kept as the documented error path.
    if (best == 0) throw PreconditionError("tree has no non-leaf vertex");
    return best;
}

} // namespace limpack
