#include <charconv>
#include <sstream>

#include "limpack/graph_io.hpp"

namespace limpack {

namespace {

std::string_view strip(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

bool read_number(std::string_view& s, std::size_t& value) {
    s = strip(s);
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, value);
    if (ec != std::errc{} || ptr == s.data()) return false;
    s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
    return true;
}

} // namespace

Graph parse_edge_list(std::string_view text, std::size_t order) {
    std::vector<Edge> edges;
    std::size_t n = order;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;

        // "# order N" written by emit_edge_list keeps trailing isolated vertices.
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            std::string_view comment = strip(line.substr(hash + 1));
            std::size_t declared = 0;
            if (comment.starts_with("order")) {
                comment.remove_prefix(5);
                if (read_number(comment, declared)) n = std::max(n, declared);
            }
            line = line.substr(0, hash);
        }
        line = strip(line);
        if (line.empty()) continue;

        std::size_t u = 0, v = 0;
        if (!read_number(line, u) || !read_number(line, v) || !strip(line).empty())
            throw FormatError("edge list line " + std::to_string(line_no) + ": expected \"u v\"");
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        n = std::max({n, u + 1, v + 1});
    }
    return Graph::from_edges(n, edges);
}

std::string emit_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "# order " << g.order() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

} // namespace limpack
