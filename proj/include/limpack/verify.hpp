#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "limpack/bounds.hpp"
#include "limpack/corpus.hpp"

namespace limpack {

inline constexpr std::string_view tool_version = "0.1.0";

/// Expands a selector into theorem ids. A selector is either a theorem id or one
/// of the group names degree_sequence, max_degree, regular, tree_delta_prime,
/// edge_deletion, open_packing, tree_sandwich, unique_leaves, chi, auxiliary,
/// sharpness, product, rooted_l2, corona_chi, single, pairs, all. "single"
/// leaves out the sharpness family. Throws invalid_argument for unknown names.
std::vector<TheoremId> resolve_selector(std::string_view selector);
std::vector<std::string_view> selector_groups();

/// Theorems evaluated on factor pairs (G, H) rather than on single graphs.
bool is_pair_theorem(TheoremId id);

/// One line of the report: either a checked BoundReport or a skip.
struct Record {
    TheoremId theorem = TheoremId::degree_sequence_bound;
    std::size_t k = 0;
    std::optional<BoundReport> report;
    std::string skip_reason;
};

struct Selection {
    std::array<bool, theorem_count> wanted{};

    static Selection all();
    static Selection of(const std::vector<TheoremId>& ids);
    [[nodiscard]] bool contains(TheoremId id) const { return wanted[static_cast<std::size_t>(id)]; }
    [[nodiscard]] bool any_single() const;
    [[nodiscard]] bool any_pair() const;
};

/// Runs every selected single-graph checker whose structural preconditions g
/// meets. Multi-instance checks (all edges, all c) are folded into one record
/// holding the extreme instance.
std::vector<Record> check_graph(const Graph& g, const Selection& sel, const std::vector<std::size_t>& ks,
                                const CheckOptions& opt);

/// Same for the ordered factor pair (g, h); rooted checks fold over all roots.
std::vector<Record> check_pair(const Graph& g, const Graph& h, const Selection& sel, const CheckOptions& opt);

/// {graph_id, graph6, theorem_id, k, lhs, rhs, status, witness}.
Json record_json(std::string_view graph_id, std::string_view graph6, const Record& r);

struct VerifyOptions {
    CorpusSpec corpus;
    Selection selection = Selection::all();
    std::vector<std::size_t> ks{2};
    CheckOptions check;
    unsigned jobs = 1;
    std::size_t chunk_size = 4096;
    /// Pair theorems materialize the corpus; larger corpora are refused.
    std::size_t max_pair_corpus = 512;
};

struct Tally {
    std::size_t holds = 0, violated = 0, vacuous = 0, sharp = 0, skipped = 0;
    [[nodiscard]] std::size_t total() const { return holds + violated + vacuous + sharp + skipped; }
};

struct RunSummary {
    std::size_t graphs = 0;
    std::size_t pairs = 0;
    std::size_t records = 0;
    std::array<Tally, theorem_count> tallies{};
    std::size_t solid_violations = 0;
    std::size_t report_only_violations = 0;
    std::uint64_t fingerprint = 0;
    Json json;

    [[nodiscard]] int exit_code() const { return solid_violations == 0 ? 0 : 1; }
};

/// Streams JSON lines to `out` in corpus order followed by one summary line.
/// Output is independent of `jobs`.
RunSummary verify(const VerifyOptions& options, std::ostream& out);

unsigned jobs_from_environment(unsigned fallback = 1);

} // namespace limpack
