#include "limpack/families.hpp"

#include <string>
#include <vector>

#include "limpack/products.hpp"

namespace limpack {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw GraphError(what);
}

} // namespace

Graph path_graph(std::size_t n) {
    require(n >= 1, "path needs n >= 1");
    std::vector<Edge> e;
    for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

Graph cycle_graph(std::size_t n) {
    require(n >= 3, "cycle needs n >= 3");
    std::vector<Edge> e;
    for (Vertex i = 0; i < n; ++i) e.emplace_back(i, static_cast<Vertex>((i + 1) % n));
    return Graph::from_edges(n, e);
}

Graph star_graph(std::size_t leaves) {
    require(leaves >= 1, "star needs at least one leaf");
    std::vector<Edge> e;
    for (Vertex i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph::from_edges(leaves + 1, e);
}

Graph complete_graph(std::size_t n) {
    require(n >= 1, "complete graph needs n >= 1");
    std::vector<Edge> e;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
    require(a >= 1 && b >= 1, "complete bipartite needs both sides >= 1");
    std::vector<Edge> e;
    for (Vertex i = 0; i < a; ++i)
        for (Vertex j = 0; j < b; ++j) e.emplace_back(i, static_cast<Vertex>(a + j));
    return Graph::from_edges(a + b, e);
}

Graph empty_graph(std::size_t n) {
    require(n >= 1, "empty graph needs n >= 1");
    return Graph::from_edges(n, {});
}

std::optional<StandardFamily> parse_standard_family(std::string_view name) {
    if (name == "path") return StandardFamily::path;
    if (name == "cycle") return StandardFamily::cycle;
    if (name == "star") return StandardFamily::star;
    if (name == "complete") return StandardFamily::complete;
    if (name == "complete_bipartite") return StandardFamily::complete_bipartite;
    if (name == "empty") return StandardFamily::empty;
    return std::nullopt;
}

Graph standard(StandardFamily kind, std::span<const std::size_t> params) {
    const std::size_t want = kind == StandardFamily::complete_bipartite ? 2 : 1;
    if (params.size() != want) throw GraphError("wrong number of size parameters");
    switch (kind) {
    case StandardFamily::path: return path_graph(params[0]);
    case StandardFamily::cycle: return cycle_graph(params[0]);
    case StandardFamily::star: return star_graph(params[0]);
    case StandardFamily::complete: return complete_graph(params[0]);
    case StandardFamily::complete_bipartite: return complete_bipartite(params[0], params[1]);
    case StandardFamily::empty: return empty_graph(params[0]);
    }
    throw GraphError("unknown family");
}

Graph double_star(std::size_t x, std::size_t y) {
    require(x >= 1 && y >= 1, "double star needs x, y >= 1");
    std::vector<Edge> e{{0, 1}};
    Vertex next = 2;
    for (std::size_t i = 0; i < x; ++i) e.emplace_back(0, next++);
    for (std::size_t i = 0; i < y; ++i) e.emplace_back(1, next++);
    return Graph::from_edges(x + y + 2, e);
}

Graph fig1_graph() {
    return Graph::from_edges(8, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {3, 6}, {4, 7}});
}

Graph diameter2_gadget(std::size_t c) {
    require(c >= 3, "diameter-2 gadget needs c >= 3");
    const std::size_t pairs = c * (c - 1) / 2;
    std::vector<Edge> e;
    Vertex j = 0;
    for (Vertex u = 0; u < c; ++u)
        for (Vertex v = u + 1; v < c; ++v, ++j) {
            e.emplace_back(u, static_cast<Vertex>(c + j));
            e.emplace_back(v, static_cast<Vertex>(c + j));
        }
    for (Vertex p = 0; p < pairs; ++p)
        for (Vertex q = p + 1; q < pairs; ++q)
            e.emplace_back(static_cast<Vertex>(c + p), static_cast<Vertex>(c + q));
    return Graph::from_edges(c + pairs, e);
}

Graph realization_tree(std::size_t a, std::size_t b) {
    if (a < 3 || b < a + 1 || b > 2 * a)
        throw GraphError("realization_tree needs a >= 3 and a+1 <= b <= 2a");
    std::vector<Edge> e;
    if (b == 2 * a) {
        for (Vertex i = 0; i + 1 < a; ++i) e.emplace_back(i, i + 1);
        Vertex next = static_cast<Vertex>(a);
        for (Vertex i = 0; i < a; ++i) {
            e.emplace_back(i, next++);
            e.emplace_back(i, next++);
        }
        return Graph::from_edges(3 * a, e);
    }
    const std::size_t x = b - a;
    for (Vertex i = 1; i <= a; ++i) e.emplace_back(0, i);
    Vertex next = static_cast<Vertex>(a + 1);
    for (Vertex i = 1; i <= a - 1; ++i) {
        e.emplace_back(i, next++);
        if (i < x) e.emplace_back(i, next++);
    }
    return Graph::from_edges(2 * a + x - 1, e);
}

Graph cartesian_sharpness_factor(const Graph& gprime) {
    if (gprime.order() == 0) throw GraphError("factor must be non-empty");
    if (!is_connected(gprime)) throw GraphError("factor must be connected");
    return corona_product(gprime, complete_graph(1)).graph();
}

std::pair<Graph, Graph> corona_chi_family(std::size_t a, std::size_t b) {
    require(a >= 1, "corona family needs a >= 1");
    require(a + b >= 2, "corona family needs a + b - 1 >= 1");
    return {complete_bipartite(a, a), empty_graph(a + b - 1)};
}

} // namespace limpack
