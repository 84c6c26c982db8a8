#include <istream>
#include <string>

#include "limpack/graph_io.hpp"

namespace limpack {

namespace {

constexpr std::string_view header = ">>graph6<<";

std::uint8_t sextet(char c) {
    auto b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126) throw FormatError("graph6 byte out of range 63..126: " + std::to_string(b));
    return static_cast<std::uint8_t>(b - 63);
}

std::string_view trim_line(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.starts_with(header)) line.remove_prefix(header.size());
    return line;
}

/// Reads N(n) and returns the number of bytes consumed.
std::size_t read_order(std::string_view s, std::size_t& n) {
    if (s.empty()) throw FormatError("empty graph6 line");
    if (s[0] != '~') {
        n = sextet(s[0]);
        return 1;
    }
    std::size_t width = 3, start = 1;
    if (s.size() >= 2 && s[1] == '~') {
        width = 6;
        start = 2;
    }
    if (s.size() < start + width) throw FormatError("truncated graph6 size field");
    n = 0;
    for (std::size_t i = 0; i < width; ++i) n = (n << 6) | sextet(s[start + i]);
    return start + width;
}

void write_order(std::string& out, std::size_t n) {
    auto put = [&](std::size_t width) {
        for (std::size_t i = width; i-- > 0;) out.push_back(static_cast<char>(63 + ((n >> (6 * i)) & 63)));
    };
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back('~');
        put(3);
    } else if (n <= max_graph6_order) {
        out.append("~~");
        put(6);
    } else {
        throw FormatError("graph order too large for graph6");
    }
}

} // namespace

Graph parse_graph6(std::string_view line) {
    std::string_view s = trim_line(line);
    std::size_t n = 0;
    const std::size_t offset = read_order(s, n);
    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (s.size() != offset + bytes)
        throw FormatError("graph6 length mismatch: expected " + std::to_string(offset + bytes) + " bytes, got " +
                          std::to_string(s.size()));

    std::vector<Edge> edges;
    std::size_t index = 0;
    for (std::size_t v = 1; v < n; ++v) {
        for (std::size_t u = 0; u < v; ++u, ++index) {
            const auto byte = sextet(s[offset + index / 6]);
            if ((byte >> (5 - index % 6)) & 1U) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        }
    }
    if (bits % 6 != 0) {
        const auto last = sextet(s.back());
        const auto pad_mask = static_cast<std::uint8_t>((1U << (6 - bits % 6)) - 1);
        if ((last & pad_mask) != 0) throw FormatError("graph6 padding bits are not zero");
    }
    return Graph::from_edges(n, edges);
}

std::string emit_graph6(const Graph& g) {
    const std::size_t n = g.order();
    std::string out;
    write_order(out, n);
    std::uint8_t acc = 0;
    int filled = 0;
    for (std::size_t v = 1; v < n; ++v) {
        for (std::size_t u = 0; u < v; ++u) {
            acc = static_cast<std::uint8_t>((acc << 1) | (g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v)) ? 1 : 0));
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
    return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (trim_line(line).empty()) continue;
        try {
            out.push_back(parse_graph6(line));
        } catch (const std::invalid_argument& e) {
            throw FormatError("line " + std::to_string(number) + ": " + e.what());
        }
    }
    return out;
}

} // namespace limpack
