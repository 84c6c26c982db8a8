#pragma once

#include <optional>
#include <string_view>

#include "limpack/graph.hpp"

namespace limpack {

enum class ProductKind { cartesian, direct, rooted, corona };

std::string_view to_string(ProductKind kind);

/// Position of a product vertex in its factors.
///
/// For cartesian/direct/rooted products `h` is the H coordinate. For the corona
/// the original vertices of G have no `h`; a vertex of the i-th copy of H has
/// g = i and h = its index inside the copy.
struct Coord {
    Vertex g = 0;
    std::optional<Vertex> h;
    friend bool operator==(const Coord&, const Coord&) = default;
};

/// Product graph with coordinate bookkeeping.
///
/// Vertex ids: (g, h) -> g * |V(H)| + h for cartesian, direct and rooted
/// products. Corona: the |V(G)| original vertices first, then the copies of H
/// blockwise, so (g, h) -> |V(G)| + g * |V(H)| + h.
class ProductGraph {
public:
    ProductGraph(Graph graph, std::size_t g_order, std::size_t h_order, ProductKind kind,
                 std::optional<Vertex> root)
        : graph_(std::move(graph)), g_order_(g_order), h_order_(h_order), kind_(kind), root_(root) {}

    [[nodiscard]] const Graph& graph() const { return graph_; }
    [[nodiscard]] std::size_t g_order() const { return g_order_; }
    [[nodiscard]] std::size_t h_order() const { return h_order_; }
    [[nodiscard]] ProductKind kind() const { return kind_; }
    [[nodiscard]] std::optional<Vertex> root() const { return root_; }

    [[nodiscard]] Coord coord(Vertex v) const;

    /// Inverse of coord(); pass h = nullopt for an original corona vertex.
    [[nodiscard]] Vertex vertex(Vertex g, std::optional<Vertex> h) const;

private:
    Graph graph_;
    std::size_t g_order_;
    std::size_t h_order_;
    ProductKind kind_;
    std::optional<Vertex> root_;
};

/// G □ H: adjacent in one coordinate, equal in the other.
ProductGraph cartesian_product(const Graph& g, const Graph& h);

/// G × H: adjacent in both coordinates.
ProductGraph direct_product(const Graph& g, const Graph& h);

/// G ∘_v H: |V(G)| copies of H, copies of the root joined along E(G).
ProductGraph rooted_product(const Graph& g, const Graph& h, Vertex root);

/// G ⊙ H: one copy of H per vertex of G, that vertex joined to all of its copy.
ProductGraph corona_product(const Graph& g, const Graph& h);

enum class LayerAxis {
    g_layer, ///< G^h: all (g, h) for fixed h
    h_layer, ///< ^gH: all (g, h) for fixed g
};

/// Coordinate slice through `index` of the other factor. Not defined for coronas.
VertexSet layer(const ProductGraph& p, LayerAxis axis, Vertex index);

} // namespace limpack
