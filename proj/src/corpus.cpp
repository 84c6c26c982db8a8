#include "limpack/corpus.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include "limpack/graph_io.hpp"
#include "limpack/solvers.hpp"

namespace limpack {

bool CorpusFilters::accepts(const Graph& g) const {
    if (connected_only && !is_connected(g)) return false;
    if (tree_only && !is_tree(g)) return false;
    if (min_degree && (g.order() == 0 || g.min_degree() < *min_degree)) return false;
    return true;
}

CorpusSpec CorpusSpec::exhaustive_labeled(std::size_t n) {
    CorpusSpec s;
    s.source = Source::exhaustive_labeled;
    s.n = n;
    return s;
}

CorpusSpec CorpusSpec::graph6_file(std::string path) {
    CorpusSpec s;
    s.source = Source::graph6_file;
    s.path = std::move(path);
    return s;
}

CorpusSpec CorpusSpec::random(std::size_t n, double p, std::size_t count, std::uint64_t seed) {
    CorpusSpec s;
    s.source = Source::random;
    s.n = n;
    s.edge_probability = p;
    s.count = count;
    s.seed = seed;
    return s;
}

CorpusSpec CorpusSpec::all_trees(std::size_t n) {
    CorpusSpec s;
    s.source = Source::all_trees;
    s.n = n;
    return s;
}

CorpusSpec CorpusSpec::in_memory(std::vector<Graph> graphs) {
    CorpusSpec s;
    s.source = Source::in_memory;
    s.graphs = std::move(graphs);
    return s;
}

std::string CorpusSpec::describe() const {
    std::ostringstream out;
    switch (source) {
    case Source::exhaustive_labeled: out << "exhaustive_labeled(" << n << ")"; break;
    case Source::graph6_file: out << "graph6_file(" << path << ")"; break;
    case Source::random: out << "random(" << n << "," << edge_probability << "," << count << "," << seed << ")"; break;
    case Source::all_trees: out << "all_trees(" << n << ")"; break;
    case Source::in_memory: out << "in_memory(" << graphs.size() << ")"; break;
    }
    if (filters.connected_only) out << "+connected";
    if (filters.tree_only) out << "+tree";
    if (filters.min_degree) out << "+min_degree(" << *filters.min_degree << ")";
    return out.str();
}

Graph tree_from_pruefer(std::size_t n, const std::vector<Vertex>& code) {
    if (n == 1 && code.empty()) return Graph::from_edges(1, {});
    if (n < 2 || code.size() != n - 2) throw std::invalid_argument("Pruefer code must have length n-2");
    std::vector<std::size_t> degree(n, 1);
    for (auto v : code) {
        if (v >= n) throw std::invalid_argument("Pruefer code entry out of range");
        ++degree[v];
    }
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (auto v : code) {
        Vertex leaf = 0;
        while (degree[leaf] != 1) ++leaf;
        edges.emplace_back(std::min(leaf, v), std::max(leaf, v));
        --degree[leaf];
        --degree[v];
    }
    Vertex a = 0;
    while (degree[a] != 1) ++a;
    Vertex b = a + 1;
    while (degree[b] != 1) ++b;
    edges.emplace_back(a, b);
    return Graph::from_edges(n, edges);
}

namespace {

/// Upper-triangle pairs in graph6 bit order.
std::vector<Edge> triangle_pairs(std::size_t n) {
    std::vector<Edge> pairs;
    for (Vertex v = 1; v < n; ++v)
        for (Vertex u = 0; u < v; ++u) pairs.emplace_back(u, v);
    return pairs;
}

void validate(const CorpusSpec& spec) {
    using S = CorpusSpec::Source;
    switch (spec.source) {
    case S::exhaustive_labeled:
        if (spec.n > max_exhaustive_order)
            throw CapExceeded("exhaustive_labeled is limited to n <= " + std::to_string(max_exhaustive_order));
        break;
    case S::all_trees:
        if (spec.n < 1) throw std::invalid_argument("all_trees needs n >= 1");
        if (spec.n > max_tree_order)
            throw CapExceeded("all_trees is limited to n <= " + std::to_string(max_tree_order));
        break;
    case S::random:
        if (spec.n > max_solver_order)
            throw CapExceeded("random graphs are limited to n <= " + std::to_string(max_solver_order));
        if (!(spec.edge_probability >= 0.0 && spec.edge_probability <= 1.0))
            throw std::invalid_argument("edge probability must lie in [0, 1]");
        break;
    case S::graph6_file:
    case S::in_memory: break;
    }
}

} // namespace

struct CorpusStream::State {
    CorpusSpec spec;
    std::size_t produced = 0;
    std::vector<Edge> pairs;
    std::uint64_t mask = 0;
    std::uint64_t total = 0;
    std::mt19937_64 rng;
    std::vector<Vertex> code;
    bool exhausted = false;
    std::ifstream file;
    std::size_t line_no = 0;

    std::optional<Graph> raw_next() {
        using S = CorpusSpec::Source;
        if (exhausted) return std::nullopt;
        switch (spec.source) {
        case S::exhaustive_labeled: {
            if (mask >= total) return std::nullopt;
            std::vector<Edge> edges;
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if ((mask >> i) & 1U) edges.push_back(pairs[i]);
            ++mask;
            return Graph::from_edges(spec.n, edges);
        }
        case S::random: {
            if (produced >= spec.count) return std::nullopt;
            std::vector<Edge> edges;
            for (const auto& e : pairs) {
                // 53 high bits as a double in [0,1): identical on every platform.
                const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
                if (u < spec.edge_probability) edges.push_back(e);
            }
            return Graph::from_edges(spec.n, edges);
        }
        case S::all_trees: {
            if (spec.n <= 2) {
                exhausted = true;
                return spec.n == 1 ? Graph::from_edges(1, {}) : Graph::from_edges(2, {{0, 1}});
            }
            Graph t = tree_from_pruefer(spec.n, code);
            std::size_t i = code.size();
            while (i > 0 && code[i - 1] == spec.n - 1) code[--i] = 0;
            if (i == 0)
                exhausted = true;
            else
                ++code[i - 1];
            return t;
        }
        case S::graph6_file: {
            std::string line;
            while (std::getline(file, line)) {
                ++line_no;
                if (line.empty() || line == "\r") continue;
                try {
                    return parse_graph6(line);
                } catch (const std::invalid_argument& e) {
                    throw FormatError(spec.path + ":" + std::to_string(line_no) + ": " + e.what());
                }
            }
            return std::nullopt;
        }
        case S::in_memory:
            if (produced >= spec.graphs.size()) return std::nullopt;
            return spec.graphs[produced];
        }
        return std::nullopt;
    }
};

CorpusStream::CorpusStream(const CorpusSpec& spec) : state_(std::make_unique<State>()) {
    validate(spec);
    auto& s = *state_;
    s.spec = spec;
    using S = CorpusSpec::Source;
    switch (spec.source) {
    case S::exhaustive_labeled:
        s.pairs = triangle_pairs(spec.n);
        s.total = std::uint64_t{1} << s.pairs.size();
        break;
    case S::random:
        s.pairs = triangle_pairs(spec.n);
        s.rng.seed(spec.seed);
        break;
    case S::all_trees:
        if (spec.n > 2) s.code.assign(spec.n - 2, 0);
        break;
    case S::graph6_file:
        s.file.open(spec.path);
        if (!s.file) throw std::runtime_error("cannot open graph6 file: " + spec.path);
        break;
    case S::in_memory: break;
    }
}

CorpusStream::~CorpusStream() = default;
CorpusStream::CorpusStream(CorpusStream&&) noexcept = default;
CorpusStream& CorpusStream::operator=(CorpusStream&&) noexcept = default;

std::optional<CorpusItem> CorpusStream::next() {
    auto& s = *state_;
    while (auto g = s.raw_next()) {
        const std::size_t index = s.produced++;
        if (s.spec.filters.accepts(*g)) return CorpusItem{index, std::move(*g)};
    }
    return std::nullopt;
}

std::vector<Graph> generate_corpus(const CorpusSpec& spec) {
    std::vector<Graph> out;
    CorpusStream stream(spec);
    while (auto item = stream.next()) out.push_back(std::move(item->graph));
    return out;
}

} // namespace limpack
