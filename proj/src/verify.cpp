#include "limpack/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <ostream>
#include <thread>

#include "limpack/graph_io.hpp"

namespace limpack {

namespace {

using T = TheoremId;

struct Group {
    std::string_view name;
    std::vector<TheoremId> ids;
};

const std::vector<Group>& groups() {
    static const std::vector<Group> table{
        {"degree_sequence", {T::degree_sequence_bound}},
        {"max_degree", {T::max_degree_bound, T::omega_characterization}},
        {"regular", {T::regular_corollary}},
        {"tree_delta_prime", {T::tree_delta_prime_bound}},
        {"edge_deletion", {T::edge_deletion_lower, T::edge_deletion_upper}},
        {"open_packing", {T::open_packing_lower, T::open_packing_upper}},
        {"tree_sandwich",
         {T::tree_sandwich_lower, T::tree_sandwich_upper, T::tree_star_characterization,
          T::tree_top_characterization}},
        {"unique_leaves", {T::unique_set_leaves}},
        {"chi", {T::chi_sqrt_bound, T::chi_product_bound, T::chi_ceiling_bound}},
        {"auxiliary", {T::aux_kn_over_delta, T::aux_k_gamma_t, T::aux_rho_o_gamma_t}},
        {"sharpness", {T::cartesian_l2t_sharpness}},
        {"product",
         {T::cartesian_l2t_lower, T::direct_l2t_lower, T::rooted_l2t_lower, T::rooted_l2t_upper,
          T::cartesian_l2_upper, T::direct_l2_lower}},
        {"rooted_l2", {T::rooted_l2_formula}},
        {"corona_chi", {T::corona_chi_lower, T::corona_chi_upper, T::corona_chi_neighborhood}},
    };
    return table;
}

/// Fixed factor size r for the sharpness family inside corpus runs.
constexpr std::size_t sharpness_clique = 4;

class RecordSink {
public:
    RecordSink(const Selection& sel, std::vector<Record>& out) : sel_(sel), out_(out) {}

    void add(const BoundReport& r) {
        if (sel_.contains(r.theorem)) out_.push_back(Record{r.theorem, r.k, r, {}});
    }

    void skip(std::initializer_list<TheoremId> ids, std::size_t k, const std::string& reason) {
        for (auto id : ids)
            if (sel_.contains(id)) out_.push_back(Record{id, k, std::nullopt, reason});
    }

    [[nodiscard]] bool wants(std::initializer_list<TheoremId> ids) const {
        return std::any_of(ids.begin(), ids.end(), [&](TheoremId id) { return sel_.contains(id); });
    }

    /// Runs `body` when any of `ids` is selected; a cap overrun becomes skip records.
    void run(std::initializer_list<TheoremId> ids, std::size_t k, const std::function<void()>& body) {
        if (!wants(ids)) return;
        const auto mark = out_.size();
        try {
            body();
        } catch (const CapExceeded& e) {
            out_.resize(mark);
            skip(ids, k, e.what());
        }
    }

private:
    const Selection& sel_;
    std::vector<Record>& out_;
};

/// Keeps the report whose lhs is extreme; ties keep the earlier one.
void fold_extreme(std::optional<BoundReport>& best, BoundReport next, bool take_min) {
    if (!best || (take_min ? next.lhs < best->lhs : next.lhs > best->lhs)) best = std::move(next);
}

void fold_edge_deletion(const Graph& g, std::size_t k, const CheckOptions& opt, RecordSink& sink) {
    std::optional<BoundReport> lower, upper;
    const auto edges = g.edges();
    for (const auto& e : edges) {
        auto [lo, up] = check_edge_deletion(g, e, k, opt);
        fold_extreme(lower, std::move(lo), true);
        fold_extreme(upper, std::move(up), false);
    }
    lower->witness["edges_checked"] = edges.size();
    upper->witness["edges_checked"] = edges.size();
    sink.add(*lower);
    sink.add(*upper);
}

void fold_delta_prime(const Graph& tree, const CheckOptions& opt, RecordSink& sink) {
    std::optional<BoundReport> tightest;
    const auto dp = delta_prime(tree);
    for (std::size_t c = 4; c <= dp; ++c) {
        auto r = check_tree_delta_prime_bound(tree, c, opt);
        if (!tightest || r.rhs < tightest->rhs) tightest = std::move(r);
    }
    tightest->witness["c_checked"] = Json::array({4, dp});
    sink.add(*tightest);
}

std::uint64_t fnv1a(std::uint64_t h, std::string_view bytes) {
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

constexpr std::uint64_t fnv_offset = 0xcbf29ce484222325ULL;

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body) {
    jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (jobs == 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (unsigned w = 0; w < jobs; ++w) {
        workers.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    next = count;
                }
            }
        });
    }
    for (auto& t : workers) t.join();
    if (failure) std::rethrow_exception(failure);
}

Json tallies_json(const std::array<Tally, theorem_count>& tallies) {
    Json out = Json::object();
    for (std::size_t i = 0; i < theorem_count; ++i) {
        const auto& t = tallies[i];
        if (t.total() == 0) continue;
        out[std::string(to_string(static_cast<TheoremId>(i)))] = Json{
            {"holds", t.holds}, {"violated", t.violated}, {"vacuous", t.vacuous}, {"sharp", t.sharp},
            {"skipped", t.skipped}};
    }
    return out;
}

/// For report-only statements: share of evaluated records that did not come out violated.
Json agreement_json(const std::array<Tally, theorem_count>& tallies) {
    Json out = Json::object();
    for (std::size_t i = 0; i < theorem_count; ++i) {
        const auto id = static_cast<TheoremId>(i);
        const auto& t = tallies[i];
        const auto evaluated = t.holds + t.violated + t.sharp + t.vacuous;
        if (is_solid(id) || evaluated == 0) continue;
        const auto agree = evaluated - t.violated;
        out[std::string(to_string(id))] = Json{
            {"agree", agree}, {"total", evaluated}, {"rate", static_cast<double>(agree) / static_cast<double>(evaluated)}};
    }
    return out;
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

} // namespace

std::vector<std::string_view> selector_groups() {
    std::vector<std::string_view> names;
    for (const auto& g : groups()) names.push_back(g.name);
    names.insert(names.end(), {"single", "pairs", "all"});
    return names;
}

bool is_pair_theorem(TheoremId id) {
    switch (id) {
    case T::cartesian_l2t_lower:
    case T::direct_l2t_lower:
    case T::rooted_l2t_lower:
    case T::rooted_l2t_upper:
    case T::cartesian_l2_upper:
    case T::direct_l2_lower:
    case T::rooted_l2_formula:
    case T::corona_chi_lower:
    case T::corona_chi_upper:
    case T::corona_chi_neighborhood: return true;
    default: return false;
    }
}

std::vector<TheoremId> resolve_selector(std::string_view selector) {
    if (auto id = parse_theorem_id(selector)) return {*id};
    for (const auto& g : groups())
        if (g.name == selector) return g.ids;
    std::vector<TheoremId> out;
    if (selector == "all" || selector == "single" || selector == "pairs") {
        for (std::size_t i = 0; i < theorem_count; ++i) {
            const auto id = static_cast<TheoremId>(i);
            // The sharpness family is a construction check, so only "all" and its own group reach it.
            const bool wanted = selector == "all" ||
                                (id != T::cartesian_l2t_sharpness && (selector == "pairs") == is_pair_theorem(id));
            if (wanted) out.push_back(id);
        }
        return out;
    }
    throw std::invalid_argument("unknown theorem or group: " + std::string(selector));
}

Selection Selection::all() {
    Selection s;
    s.wanted.fill(true);
    return s;
}

Selection Selection::of(const std::vector<TheoremId>& ids) {
    Selection s;
    for (auto id : ids) s.wanted[static_cast<std::size_t>(id)] = true;
    return s;
}

bool Selection::any_single() const {
    for (std::size_t i = 0; i < theorem_count; ++i)
        if (wanted[i] && !is_pair_theorem(static_cast<TheoremId>(i))) return true;
    return false;
}

bool Selection::any_pair() const {
    for (std::size_t i = 0; i < theorem_count; ++i)
        if (wanted[i] && is_pair_theorem(static_cast<TheoremId>(i))) return true;
    return false;
}

std::vector<Record> check_graph(const Graph& g, const Selection& sel, const std::vector<std::size_t>& ks,
                                const CheckOptions& opt) {
    std::vector<Record> out;
    RecordSink sink(sel, out);
    const auto n = g.order();
    const bool tree = n >= 1 && is_tree(g);

    for (std::size_t ki = 0; ki < ks.size(); ++ki) {
        const auto k = ks[ki];
        if (n >= 2) sink.run({T::degree_sequence_bound}, k, [&] { sink.add(check_degree_sequence_bound(g, k, opt)); });
        if (n >= 1) {
            sink.run({T::max_degree_bound, T::omega_characterization}, k, [&] {
                auto r = check_max_degree_bound(g, k, opt);
                sink.add(r.bound);
                if (r.omega)
                    sink.add(as_bound_report(*r.omega, k));
                else if (k == 2)
                    sink.skip({T::omega_characterization}, k, "omega search cap exceeded");
            });
            sink.run({T::regular_corollary}, k, [&] { sink.add(check_regular_consequence(g, k, opt)); });
        }
        if (g.size() > 0)
            sink.run({T::edge_deletion_lower, T::edge_deletion_upper}, k, [&] { fold_edge_deletion(g, k, opt, sink); });
        if (n >= 2)
            sink.run({T::chi_sqrt_bound, T::chi_product_bound, T::chi_ceiling_bound}, k, [&] {
                for (auto& r : check_chi_bounds(g, k, opt)) sink.add(r);
            });
        if (n >= 1)
            sink.run({T::aux_kn_over_delta, T::aux_k_gamma_t, T::aux_rho_o_gamma_t}, k, [&] {
                for (auto& r : check_known_auxiliary_bounds(g, k, opt))
                    if (r.theorem != T::aux_rho_o_gamma_t || ki == 0) sink.add(r);
            });
    }

    if (tree && n >= 3 && delta_prime(g) >= 4)
        sink.run({T::tree_delta_prime_bound}, 2, [&] { fold_delta_prime(g, opt, sink); });
    if (n >= 1 && g.min_degree() >= 1 && g.max_degree() >= 2)
        sink.run({T::open_packing_lower, T::open_packing_upper}, 2, [&] {
            for (auto& r : check_open_packing_sandwich(g, opt)) sink.add(r);
        });
    if (tree && g.max_degree() >= 2)
        sink.run({T::tree_sandwich_lower, T::tree_sandwich_upper, T::tree_star_characterization,
                  T::tree_top_characterization},
                 2, [&] {
                     auto r = check_tree_sandwich(g, opt);
                     sink.add(r.lower);
                     sink.add(r.upper);
                     sink.add(as_bound_report(r.star, 2));
                     if (r.top)
                         sink.add(as_bound_report(*r.top, 2));
                     else
                         sink.skip({T::tree_top_characterization}, 2, "optimal-set enumeration cap exceeded");
                 });
    if (n >= 1)
        sink.run({T::unique_set_leaves}, 2, [&] { sink.add(check_unique_set_leaves(g, opt)); });
    if (n >= 1 && is_connected(g))
        sink.run({T::cartesian_l2t_sharpness}, 2, [&] { sink.add(check_cartesian_sharpness(g, sharpness_clique, opt)); });
    return out;
}

std::vector<Record> check_pair(const Graph& g, const Graph& h, const Selection& sel, const CheckOptions& opt) {
    std::vector<Record> out;
    RecordSink sink(sel, out);
    if (g.order() == 0 || h.order() == 0) return out;

    for (auto kind : {ProductKind::cartesian, ProductKind::direct}) {
        const auto l2t = kind == ProductKind::cartesian ? T::cartesian_l2t_lower : T::direct_l2t_lower;
        const auto l2 = kind == ProductKind::cartesian ? T::cartesian_l2_upper : T::direct_l2_lower;
        sink.run({l2t}, 2, [&] {
            for (auto& r : check_product_bounds(g, h, kind, Invariant::total_limited_packing, std::nullopt, opt))
                sink.add(r);
        });
        sink.run({l2}, 2, [&] {
            for (auto& r : check_product_bounds(g, h, kind, Invariant::limited_packing, std::nullopt, opt)) sink.add(r);
        });
    }

    sink.run({T::rooted_l2t_lower, T::rooted_l2t_upper}, 2, [&] {
        std::optional<BoundReport> lower, upper;
        for (Vertex root = 0; root < h.order(); ++root) {
            auto rs = check_product_bounds(g, h, ProductKind::rooted, Invariant::total_limited_packing, root, opt);
            fold_extreme(lower, std::move(rs.at(0)), true);
            fold_extreme(upper, std::move(rs.at(1)), false);
        }
        lower->witness["roots_checked"] = h.order();
        upper->witness["roots_checked"] = h.order();
        sink.add(*lower);
        sink.add(*upper);
    });

    sink.run({T::rooted_l2_formula}, 2, [&] {
        std::optional<BoundReport> shown;
        Json mismatched = Json::array();
        for (Vertex root = 0; root < h.order(); ++root) {
            auto r = check_rooted_l2_formula(g, h, root, opt);
            const bool bad = r.status == Status::violated;
            if (bad) mismatched.push_back(root);
            if (!shown || (bad && mismatched.size() == 1)) shown = std::move(r);
        }
        shown->witness["mismatched_roots"] = mismatched;
        sink.add(*shown);
    });

    sink.run({T::corona_chi_lower, T::corona_chi_upper, T::corona_chi_neighborhood}, 2, [&] {
        for (auto& r : check_corona_chi(g, h, opt)) sink.add(r);
    });
    return out;
}

Json record_json(std::string_view graph_id, std::string_view graph6, const Record& r) {
    Json j;
    j["graph_id"] = graph_id;
    j["graph6"] = graph6;
    j["theorem_id"] = to_string(r.theorem);
    j["k"] = r.k;
    if (r.report) {
        j["lhs"] = to_json(r.report->lhs);
        j["rhs"] = to_json(r.report->rhs);
        j["status"] = to_string(r.report->status);
        Json w = r.report->witness;
        w["relation"] = to_string(r.report->relation);
        j["witness"] = std::move(w);
    } else {
        j["lhs"] = nullptr;
        j["rhs"] = nullptr;
        j["status"] = "skipped";
        j["witness"] = Json{{"reason", r.skip_reason}};
    }
    return j;
}

RunSummary verify(const VerifyOptions& options, std::ostream& out) {
    RunSummary summary;
    std::uint64_t fingerprint = fnv_offset;
    const bool want_pairs = options.selection.any_pair();
    const bool want_single = options.selection.any_single();

    auto tally = [&](const Record& r) {
        auto& t = summary.tallies[static_cast<std::size_t>(r.theorem)];
        ++summary.records;
        if (!r.report) {
            ++t.skipped;
            return;
        }
        switch (r.report->status) {
        case Status::holds: ++t.holds; break;
        case Status::sharp: ++t.sharp; break;
        case Status::vacuous: ++t.vacuous; break;
        case Status::violated:
            ++t.violated;
            if (is_solid(r.theorem))
                ++summary.solid_violations;
            else
                ++summary.report_only_violations;
            break;
        }
    };

    struct Entry {
        std::size_t index;
        Graph graph;
        std::string g6;
    };
    std::vector<Entry> kept; // only filled when pair theorems are selected

    CorpusStream stream(options.corpus);
    std::vector<Entry> chunk;
    std::vector<std::vector<Record>> results;
    bool more = true;
    while (more) {
        chunk.clear();
        while (chunk.size() < std::max<std::size_t>(options.chunk_size, 1)) {
            auto item = stream.next();
            if (!item) {
                more = false;
                break;
            }
            auto g6 = emit_graph6(item->graph);
            chunk.push_back(Entry{item->index, std::move(item->graph), std::move(g6)});
        }
        results.assign(chunk.size(), {});
        if (want_single)
            parallel_for(chunk.size(), options.jobs, [&](std::size_t i) {
                results[i] = check_graph(chunk[i].graph, options.selection, options.ks, options.check);
            });
        for (std::size_t i = 0; i < chunk.size(); ++i) {
            fingerprint = fnv1a(fingerprint, chunk[i].g6);
            fingerprint = fnv1a(fingerprint, "\n");
            ++summary.graphs;
            const auto id = std::to_string(chunk[i].index);
            for (const auto& r : results[i]) {
                tally(r);
                out << record_json(id, chunk[i].g6, r).dump() << '\n';
            }
        }
        if (want_pairs) {
            if (kept.size() + chunk.size() > options.max_pair_corpus)
                throw std::length_error("pair theorems need a corpus of at most " +
                                        std::to_string(options.max_pair_corpus) + " graphs");
            for (auto& e : chunk) kept.push_back(std::move(e));
        }
    }

    if (want_pairs) {
        const auto m = kept.size();
        const std::size_t pair_count = m * m;
        const std::size_t step = std::max<std::size_t>(options.chunk_size, 1);
        for (std::size_t start = 0; start < pair_count; start += step) {
            const auto len = std::min(step, pair_count - start);
            results.assign(len, {});
            parallel_for(len, options.jobs, [&](std::size_t i) {
                const auto p = start + i;
                results[i] = check_pair(kept[p / m].graph, kept[p % m].graph, options.selection, options.check);
            });
            for (std::size_t i = 0; i < len; ++i) {
                const auto& a = kept[(start + i) / m];
                const auto& b = kept[(start + i) % m];
                ++summary.pairs;
                const auto id = std::to_string(a.index) + "," + std::to_string(b.index);
                const auto g6 = a.g6 + "," + b.g6;
                for (const auto& r : results[i]) {
                    tally(r);
                    out << record_json(id, g6, r).dump() << '\n';
                }
            }
        }
    }

    summary.fingerprint = fingerprint;
    Json s;
    s["summary"] = true;
    s["tool_version"] = tool_version;
    s["corpus"] = options.corpus.describe();
    s["seed"] = options.corpus.seed;
    s["k"] = options.ks;
    s["fingerprint"] = hex64(fingerprint);
    s["graphs"] = summary.graphs;
    s["pairs"] = summary.pairs;
    s["records"] = summary.records;
    s["tallies"] = tallies_json(summary.tallies);
    s["agreement"] = agreement_json(summary.tallies);
    s["solid_violations"] = summary.solid_violations;
    s["report_only_violations"] = summary.report_only_violations;
    out << s.dump() << '\n';
    out.flush();
    if (!out) throw std::runtime_error("failed writing report");
    summary.json = std::move(s);
    return summary;
}

unsigned jobs_from_environment(unsigned fallback) {
    const char* raw = std::getenv("LIMPACK_JOBS");
    if (raw == nullptr || *raw == '\0') return fallback;
    char* end = nullptr;
    const long v = std::strtol(raw, &end, 10);
    if (*end != '\0' || v < 1 || v > 1024) throw std::invalid_argument("LIMPACK_JOBS must be an integer in 1..1024");
    return static_cast<unsigned>(v);
}

} // namespace limpack
