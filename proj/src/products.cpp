#include "limpack/products.hpp"

#include <stdexcept>
#include <string>

namespace limpack {

std::string_view to_string(ProductKind kind) {
    switch (kind) {
    case ProductKind::cartesian: return "cartesian";
    case ProductKind::direct: return "direct";
    case ProductKind::rooted: return "rooted";
    case ProductKind::corona: return "corona";
    }
    return "?";
}

Coord ProductGraph::coord(Vertex v) const {
    if (v >= graph_.order()) throw std::out_of_range("product vertex out of range");
    if (kind_ == ProductKind::corona) {
        if (v < g_order_) return {v, std::nullopt};
        auto rest = v - static_cast<Vertex>(g_order_);
        return {static_cast<Vertex>(rest / h_order_), static_cast<Vertex>(rest % h_order_)};
    }
    return {static_cast<Vertex>(v / h_order_), static_cast<Vertex>(v % h_order_)};
}

Vertex ProductGraph::vertex(Vertex g, std::optional<Vertex> h) const {
    if (g >= g_order_ || (h && *h >= h_order_)) throw std::out_of_range("coordinate out of range");
    if (kind_ == ProductKind::corona) {
        if (!h) return g;
        return static_cast<Vertex>(g_order_ + g * h_order_ + *h);
    }
    if (!h) throw std::invalid_argument("H coordinate required for this product kind");
    return static_cast<Vertex>(g * h_order_ + *h);
}

namespace {

void require_nonempty(const Graph& g, const Graph& h) {
    if (g.order() == 0 || h.order() == 0) throw GraphError("product factors must be non-empty");
}

} // namespace

ProductGraph cartesian_product(const Graph& g, const Graph& h) {
    require_nonempty(g, h);
    const auto m = h.order();
    auto id = [m](Vertex a, Vertex b) { return static_cast<Vertex>(a * m + b); };
    std::vector<Edge> edges;
    for (Vertex a = 0; a < g.order(); ++a)
        for (auto [x, y] : h.edges()) edges.emplace_back(id(a, x), id(a, y));
    for (auto [a, b] : g.edges())
        for (Vertex x = 0; x < m; ++x) edges.emplace_back(id(a, x), id(b, x));
    return {Graph::from_edges(g.order() * m, edges), g.order(), m, ProductKind::cartesian, std::nullopt};
}

ProductGraph direct_product(const Graph& g, const Graph& h) {
    require_nonempty(g, h);
    const auto m = h.order();
    auto id = [m](Vertex a, Vertex b) { return static_cast<Vertex>(a * m + b); };
    std::vector<Edge> edges;
    for (auto [a, b] : g.edges())
        for (auto [x, y] : h.edges()) {
            edges.emplace_back(id(a, x), id(b, y));
            edges.emplace_back(id(a, y), id(b, x));
        }
    return {Graph::from_edges(g.order() * m, edges), g.order(), m, ProductKind::direct, std::nullopt};
}

ProductGraph rooted_product(const Graph& g, const Graph& h, Vertex root) {
    require_nonempty(g, h);
    if (root >= h.order()) throw std::out_of_range("root " + std::to_string(root) + " is not a vertex of H");
    const auto m = h.order();
    auto id = [m](Vertex a, Vertex b) { return static_cast<Vertex>(a * m + b); };
    std::vector<Edge> edges;
    for (Vertex a = 0; a < g.order(); ++a)
        for (auto [x, y] : h.edges()) edges.emplace_back(id(a, x), id(a, y));
    for (auto [a, b] : g.edges()) edges.emplace_back(id(a, root), id(b, root));
    return {Graph::from_edges(g.order() * m, edges), g.order(), m, ProductKind::rooted, root};
}

ProductGraph corona_product(const Graph& g, const Graph& h) {
    require_nonempty(g, h);
    const auto n = g.order();
    const auto m = h.order();
    auto copy = [n, m](Vertex a, Vertex b) { return static_cast<Vertex>(n + a * m + b); };
    std::vector<Edge> edges = g.edges();
    for (Vertex a = 0; a < n; ++a) {
        for (auto [x, y] : h.edges()) edges.emplace_back(copy(a, x), copy(a, y));
        for (Vertex x = 0; x < m; ++x) edges.emplace_back(a, copy(a, x));
    }
    return {Graph::from_edges(n * (1 + m), edges), n, m, ProductKind::corona, std::nullopt};
}

VertexSet layer(const ProductGraph& p, LayerAxis axis, Vertex index) {
    if (p.kind() == ProductKind::corona) throw std::invalid_argument("layers are not defined for corona products");
    VertexSet out(p.graph().order());
    if (axis == LayerAxis::g_layer) {
        if (index >= p.h_order()) throw std::out_of_range("G-layer index must be a vertex of H");
        for (Vertex a = 0; a < p.g_order(); ++a) out.insert(p.vertex(a, index));
    } else {
        if (index >= p.g_order()) throw std::out_of_range("H-layer index must be a vertex of G");
        for (Vertex x = 0; x < p.h_order(); ++x) out.insert(p.vertex(index, x));
    }
    return out;
}

} // namespace limpack
