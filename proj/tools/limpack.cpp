#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "limpack/bounds.hpp"
#include "limpack/corpus.hpp"
#include "limpack/families.hpp"
#include "limpack/graph_io.hpp"
#include "limpack/partition.hpp"
#include "limpack/products.hpp"
#include "limpack/verify.hpp"

using namespace limpack;

namespace {

constexpr int exit_clean = 0;
constexpr int exit_violation = 1;
constexpr int exit_usage = 2;

struct Common {
    std::string format = "graph6";
    std::string out;
    std::uint64_t cap_nodes = 0;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// A graph argument is a graph6 string, or @path read in the chosen format.
Graph load_graph(const std::string& arg, const std::string& format) {
    if (!arg.starts_with('@')) return parse_graph6(arg);
    const auto text = read_file(arg.substr(1));
    if (format == "edgelist") return parse_edge_list(text);
    std::istringstream in(text);
    auto graphs = read_graph6_stream(in);
    if (graphs.size() != 1) throw FormatError(arg.substr(1) + ": expected exactly one graph6 line");
    return graphs.front();
}

std::string render(const Graph& g, const std::string& format) {
    return format == "edgelist" ? emit_edge_list(g) : emit_graph6(g) + "\n";
}

/// Writes to --out or stdout.
template <class F>
void with_output(const std::string& path, F&& body) {
    if (path.empty() || path == "-") {
        body(std::cout);
        std::cout.flush();
        if (!std::cout) throw std::runtime_error("failed writing to stdout");
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open " + path + " for writing");
    body(file);
    file.flush();
    if (!file) throw std::runtime_error("failed writing " + path);
}

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--format", c.format, "Graph format for files and output")
        ->check(CLI::IsMember({"graph6", "edgelist"}))
        ->capture_default_str();
    cmd->add_option("--out", c.out, "Output path (default stdout)");
    cmd->add_option("--cap-nodes", c.cap_nodes, "Search node budget per solver call (0 = unlimited)");
}

Json set_json(const VertexSet& s) { return to_json(s); }

int run_compute(const std::string& graph_arg, const std::string& invariant, std::size_t k, bool total,
                bool oracle, const Common& c) {
    const Graph g = load_graph(graph_arg, c.format);
    SearchLimits limits{c.cap_nodes};
    Json j;
    j["graph6"] = emit_graph6(g);
    if (invariant == "packing") {
        auto r = max_limited_packing(g, k, total, limits);
        j["invariant"] = total ? "L_kt" : "L_k";
        j["k"] = k;
        j["value"] = r.value;
        j["witness"] = set_json(r.witness);
        j["nodes"] = r.nodes_explored;
        if (oracle)
            j["oracle"] = brute_force_oracle(g, total ? Invariant::total_limited_packing : Invariant::limited_packing, k);
    } else if (invariant == "domination") {
        auto r = min_dominating(g, total, limits);
        j["invariant"] = total ? "gamma_t" : "gamma";
        j["value"] = r.value;
        j["witness"] = set_json(r.witness);
        j["nodes"] = r.nodes_explored;
        if (oracle) j["oracle"] = brute_force_oracle(g, total ? Invariant::total_domination : Invariant::domination, 0);
    } else {
        auto r = chi_times_k(g, k, limits);
        j["invariant"] = "chi_k";
        j["k"] = k;
        j["value"] = r.value;
        Json classes = Json::array();
        for (const auto& cl : r.witness.classes) classes.push_back(set_json(cl));
        j["witness"] = classes;
        j["nodes"] = r.nodes_explored;
        if (oracle) j["oracle"] = brute_force_oracle(g, Invariant::packing_partition, k);
    }
    with_output(c.out, [&](std::ostream& os) { os << j.dump() << '\n'; });
    return exit_clean;
}

int run_bounds(const std::string& graph_arg, const std::vector<std::size_t>& ks, const std::string& theorems,
               const Common& c) {
    VerifyOptions opt;
    opt.corpus = CorpusSpec::in_memory({load_graph(graph_arg, c.format)});
    opt.ks = ks;
    opt.check.limits.max_nodes = c.cap_nodes;
    std::vector<TheoremId> ids;
    std::stringstream list(theorems);
    for (std::string token; std::getline(list, token, ',');) {
        auto more = resolve_selector(token);
        ids.insert(ids.end(), more.begin(), more.end());
    }
    opt.selection = Selection::of(ids);
    RunSummary summary;
    with_output(c.out, [&](std::ostream& os) { summary = verify(opt, os); });
    return summary.solid_violations == 0 ? exit_clean : exit_violation;
}

Graph construct(const std::string& family, const std::vector<std::string>& raw) {
    std::vector<std::size_t> p;
    for (const auto& s : raw) {
        std::size_t used = 0;
        const auto v = std::stoull(s, &used);
        if (used != s.size()) throw std::invalid_argument("parameter is not a number: " + s);
        p.push_back(static_cast<std::size_t>(v));
    }
    auto need = [&](std::size_t count) {
        if (p.size() != count)
            throw std::invalid_argument(family + " takes " + std::to_string(count) + " parameter(s)");
    };
    if (auto kind = parse_standard_family(family)) return standard(*kind, p);
    if (family == "double_star") {
        need(2);
        return double_star(p[0], p[1]);
    }
    if (family == "fig1") {
        need(0);
        return fig1_graph();
    }
    if (family == "gadget") {
        need(1);
        return diameter2_gadget(p[0]);
    }
    if (family == "realization_tree") {
        need(2);
        return realization_tree(p[0], p[1]);
    }
    if (family == "corona_chi") {
        need(2);
        auto [g, h] = corona_chi_family(p[0], p[1]);
        return corona_product(g, h).graph();
    }
    throw std::invalid_argument("unknown family: " + family);
}

int run_product(const std::string& kind, const std::string& g_arg, const std::string& h_arg,
                std::optional<Vertex> root, const Common& c) {
    const Graph g = load_graph(g_arg, c.format);
    const Graph h = load_graph(h_arg, c.format);
    Graph p;
    if (kind == "cartesian")
        p = cartesian_product(g, h).graph();
    else if (kind == "direct")
        p = direct_product(g, h).graph();
    else if (kind == "corona")
        p = corona_product(g, h).graph();
    else {
        if (!root) throw std::invalid_argument("rooted product needs --root");
        p = rooted_product(g, h, *root).graph();
    }
    with_output(c.out, [&](std::ostream& os) { os << render(p, c.format); });
    return exit_clean;
}

struct VerifyArgs {
    std::string corpus = "exhaustive";
    std::size_t n = 5;
    double p = 0.5;
    std::size_t count = 100;
    std::uint64_t seed = 0;
    std::string file;
    std::vector<std::size_t> ks{2};
    std::string theorems = "single";
    bool connected = false;
    bool trees_only = false;
    std::optional<std::size_t> min_degree;
    std::optional<unsigned> jobs;
    std::size_t omega_cap = 16;
    std::size_t product_cap = 24;
};

int run_verify(const VerifyArgs& a, const Common& c) {
    VerifyOptions opt;
    if (a.corpus == "exhaustive")
        opt.corpus = CorpusSpec::exhaustive_labeled(a.n);
    else if (a.corpus == "trees")
        opt.corpus = CorpusSpec::all_trees(a.n);
    else if (a.corpus == "random")
        opt.corpus = CorpusSpec::random(a.n, a.p, a.count, a.seed);
    else {
        if (a.file.empty()) throw std::invalid_argument("--corpus graph6 needs --file");
        opt.corpus = CorpusSpec::graph6_file(a.file);
    }
    opt.corpus.filters.connected_only = a.connected;
    opt.corpus.filters.tree_only = a.trees_only;
    opt.corpus.filters.min_degree = a.min_degree;
    opt.ks = a.ks;
    opt.jobs = a.jobs ? *a.jobs : jobs_from_environment(1);
    opt.check.limits.max_nodes = c.cap_nodes;
    opt.check.omega_cap = a.omega_cap;
    opt.check.product_cap = a.product_cap;

    std::vector<TheoremId> ids;
    std::stringstream list(a.theorems);
    for (std::string token; std::getline(list, token, ',');) {
        auto more = resolve_selector(token);
        ids.insert(ids.end(), more.begin(), more.end());
    }
    opt.selection = Selection::of(ids);

    RunSummary summary;
    with_output(c.out, [&](std::ostream& os) { summary = verify(opt, os); });
    std::cerr << "graphs " << summary.graphs << ", records " << summary.records << ", solid violations "
              << summary.solid_violations << ", report-only violations " << summary.report_only_violations << '\n';
    return summary.solid_violations == 0 ? exit_clean : exit_violation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Limited packing computations and bound checks on small graphs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(tool_version));

    Common common;

    auto* compute = app.add_subcommand("compute", "One invariant of one graph");
    std::string graph_arg;
    std::string invariant = "packing";
    std::size_t k = 2;
    bool total = false;
    bool oracle = false;
    compute->add_option("graph", graph_arg, "graph6 string or @file")->required();
    compute->add_option("--invariant", invariant, "packing | domination | partition")
        ->check(CLI::IsMember({"packing", "domination", "partition"}))
        ->capture_default_str();
    compute->add_option("--k", k, "Limit k")->check(CLI::PositiveNumber)->capture_default_str();
    compute->add_flag("--total", total, "Open neighborhoods (L_kt, gamma_t)");
    compute->add_flag("--oracle", oracle, "Also run the brute-force oracle");
    add_common(compute, common);

    auto* bounds = app.add_subcommand("bounds", "Every single-graph checker on one graph");
    std::string bounds_graph;
    std::vector<std::size_t> bounds_ks{2};
    std::string bounds_theorems = "single";
    bounds->add_option("graph", bounds_graph, "graph6 string or @file")->required();
    bounds->add_option("--k", bounds_ks, "Limit k (repeatable)")->check(CLI::PositiveNumber);
    bounds->add_option("--theorems", bounds_theorems, "Comma-separated theorem ids or groups")->capture_default_str();
    add_common(bounds, common);

    auto* constructor = app.add_subcommand("construct", "Emit a graph from a named family");
    std::string family;
    std::vector<std::string> params;
    constructor->add_option("family", family,
                            "path | cycle | star | complete | complete_bipartite | empty | double_star | fig1 | "
                            "gadget | realization_tree | corona_chi")
        ->required();
    constructor->add_option("params", params, "Family parameters");
    add_common(constructor, common);

    auto* product = app.add_subcommand("product", "Build and emit a graph product");
    std::string kind = "cartesian";
    std::string g_arg, h_arg;
    std::optional<Vertex> root;
    product->add_option("--kind", kind, "cartesian | direct | rooted | corona")
        ->check(CLI::IsMember({"cartesian", "direct", "rooted", "corona"}))
        ->capture_default_str();
    product->add_option("--root", root, "Root vertex of H for rooted products");
    product->add_option("first", g_arg, "Factor G: graph6 string or @file")->required();
    product->add_option("second", h_arg, "Factor H: graph6 string or @file")->required();
    add_common(product, common);

    auto* verify_cmd = app.add_subcommand("verify", "Check theorems over a corpus, JSON lines out");
    VerifyArgs va;
    verify_cmd->add_option("--corpus", va.corpus, "exhaustive | trees | random | graph6")
        ->check(CLI::IsMember({"exhaustive", "trees", "random", "graph6"}))
        ->capture_default_str();
    verify_cmd->add_option("--n", va.n, "Order for generated corpora")->capture_default_str();
    verify_cmd->add_option("--p", va.p, "Edge probability (random)")->capture_default_str();
    verify_cmd->add_option("--count", va.count, "Number of graphs (random)")->capture_default_str();
    verify_cmd->add_option("--seed", va.seed, "Seed (random)")->capture_default_str();
    verify_cmd->add_option("--file", va.file, "graph6 corpus file");
    verify_cmd->add_option("--k", va.ks, "Limit k (repeatable)")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--theorems", va.theorems, "Comma-separated theorem ids or groups")
        ->capture_default_str();
    verify_cmd->add_flag("--connected", va.connected, "Keep connected graphs only");
    verify_cmd->add_flag("--trees-only", va.trees_only, "Keep trees only");
    verify_cmd->add_option("--min-degree", va.min_degree, "Keep graphs with this minimum degree");
    verify_cmd->add_option("--jobs", va.jobs, "Worker threads (overrides LIMPACK_JOBS)")->check(CLI::Range(1, 1024));
    verify_cmd->add_option("--omega-cap", va.omega_cap, "Largest order searched for Ω membership")
        ->capture_default_str();
    verify_cmd->add_option("--product-cap", va.product_cap, "Largest product order checked")->capture_default_str();
    add_common(verify_cmd, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_clean : exit_usage;
    }

    try {
        if (*compute) return run_compute(graph_arg, invariant, k, total, oracle, common);
        if (*bounds) return run_bounds(bounds_graph, bounds_ks, bounds_theorems, common);
        if (*constructor) {
            const Graph g = construct(family, params);
            with_output(common.out, [&](std::ostream& os) { os << render(g, common.format); });
            return exit_clean;
        }
        if (*product) return run_product(kind, g_arg, h_arg, root, common);
        if (*verify_cmd) return run_verify(va, common);
    } catch (const std::exception& e) {
        std::cerr << "limpack: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
