#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "limpack/graph.hpp"

namespace limpack {

inline constexpr std::size_t max_exhaustive_order = 6;
inline constexpr std::size_t max_tree_order = 9;

struct CorpusFilters {
    bool connected_only = false;
    bool tree_only = false;
    std::optional<std::size_t> min_degree;

    [[nodiscard]] bool accepts(const Graph& g) const;
};

struct CorpusSpec {
    enum class Source { exhaustive_labeled, graph6_file, random, all_trees, in_memory };

    Source source = Source::exhaustive_labeled;
    std::size_t n = 0;
    std::string path;
    double edge_probability = 0.5;
    std::size_t count = 0;
    std::uint64_t seed = 0;
    /// Used by Source::in_memory only.
    std::vector<Graph> graphs;
    CorpusFilters filters;

    static CorpusSpec exhaustive_labeled(std::size_t n);
    static CorpusSpec graph6_file(std::string path);
    static CorpusSpec random(std::size_t n, double p, std::size_t count, std::uint64_t seed);
    static CorpusSpec all_trees(std::size_t n);
    static CorpusSpec in_memory(std::vector<Graph> graphs);

    /// Short human-readable description, e.g. "exhaustive_labeled(5)".
    [[nodiscard]] std::string describe() const;
};

/// A corpus graph with its index in the unfiltered source sequence.
struct CorpusItem {
    std::size_t index = 0;
    Graph graph;
};

/// Pull-based generator; filtered-out graphs are skipped but keep their index.
class CorpusStream {
public:
    explicit CorpusStream(const CorpusSpec& spec);
    ~CorpusStream();
    CorpusStream(CorpusStream&&) noexcept;
    CorpusStream& operator=(CorpusStream&&) noexcept;

    std::optional<CorpusItem> next();

private:
    struct State;
    std::unique_ptr<State> state_;
};

/// Materializes the whole corpus. Throws CapExceeded for out-of-range sizes and
/// FormatError / std::runtime_error for unreadable graph6 files.
std::vector<Graph> generate_corpus(const CorpusSpec& spec);

/// Decodes a Prüfer sequence over 0..n-1 (length n-2) into a labeled tree.
Graph tree_from_pruefer(std::size_t n, const std::vector<Vertex>& code);

} // namespace limpack
