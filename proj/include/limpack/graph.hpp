#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "limpack/vertex_set.hpp"

namespace limpack {

using Edge = std::pair<Vertex, Vertex>;

/// Raised by graph construction on self-loops, duplicate edges and bad indices.
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A structural precondition of an operation does not hold (not a tree, isolated
/// vertex where none is allowed, ...).
class PreconditionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Immutable finite simple graph on vertices 0..n-1.
class Graph {
public:
    /// The graph on zero vertices.
    Graph() = default;

    /// Throws GraphError on a self-loop, a repeated edge (in either orientation)
    /// or an endpoint >= n.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges);
    static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    [[nodiscard]] std::size_t order() const { return adj_.size(); }
    [[nodiscard]] std::size_t size() const { return edge_count_; }

    /// N(v).
    [[nodiscard]] const VertexSet& neighbors(Vertex v) const {
        check(v);
        return adj_[v];
    }

    /// N[v] = N(v) + {v}.
    [[nodiscard]] VertexSet closed_neighborhood(Vertex v) const {
        VertexSet s = neighbors(v);
        s.insert(v);
        return s;
    }

    [[nodiscard]] std::size_t degree(Vertex v) const { return neighbors(v).size(); }
    [[nodiscard]] bool adjacent(Vertex u, Vertex v) const { return neighbors(u).contains(v); }

    [[nodiscard]] std::size_t max_degree() const;
    [[nodiscard]] std::size_t min_degree() const;

    /// Edges as (u, v) with u < v, sorted.
    [[nodiscard]] std::vector<Edge> edges() const;

    [[nodiscard]] Graph without_edge(Edge e) const;

    /// Appends `count` isolated vertices with the next free indices.
    [[nodiscard]] Graph with_isolated(std::size_t count) const;

    /// Induced subgraph on `keep`, relabeled in increasing index order.
    [[nodiscard]] Graph induced(const VertexSet& keep) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check(Vertex v) const {
        if (v >= adj_.size()) throw std::out_of_range("vertex index out of range");
    }

    std::vector<VertexSet> adj_;
    std::size_t edge_count_ = 0;
};

/// Degrees in ascending order.
std::vector<std::size_t> degree_sequence(const Graph& g);

struct IsolatedRemoval {
    Graph graph;                        ///< G^- with vertices renumbered compactly
    std::size_t removed = 0;            ///< i_G
    std::vector<Vertex> original_index; ///< original_index[new] = old
};

IsolatedRemoval remove_isolated(const Graph& g);

/// Longest shortest path; nullopt if g is disconnected. Graphs of order <= 1 have diameter 0.
std::optional<std::size_t> diameter(const Graph& g);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

/// K_{1,m} with m >= 2.
bool is_star(const Graph& g);

std::vector<Vertex> leaves(const Graph& g);

/// Minimum degree among non-leaf vertices of a tree of order >= 3.
std::size_t delta_prime(const Graph& tree);

} // namespace limpack
