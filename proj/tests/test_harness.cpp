#include <set>
#include <sstream>

#include "doctest.h"
#include "limpack/families.hpp"
#include "limpack/graph_io.hpp"
#include "limpack/verify.hpp"
#include "support.hpp"

using namespace limpack;

namespace {

std::vector<Json> parse_lines(const std::string& text) {
    std::vector<Json> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(Json::parse(line));
    return out;
}

std::string run(const VerifyOptions& opt, RunSummary* summary = nullptr) {
    std::ostringstream out;
    auto s = verify(opt, out);
    if (summary) *summary = s;
    return out.str();
}

} // namespace

TEST_CASE("corpus sizes") {
    CHECK(generate_corpus(CorpusSpec::exhaustive_labeled(4)).size() == 64);
    CHECK(generate_corpus(CorpusSpec::all_trees(4)).size() == 16);
    CHECK(generate_corpus(CorpusSpec::all_trees(2)).size() == 1);
    CHECK(generate_corpus(CorpusSpec::all_trees(1)).size() == 1);
    CHECK_THROWS_AS(CorpusStream(CorpusSpec::exhaustive_labeled(7)), CapExceeded);
    CHECK_THROWS_AS(CorpusStream(CorpusSpec::all_trees(10)), CapExceeded);
    CHECK_THROWS_AS(CorpusStream(CorpusSpec::graph6_file("/nonexistent/corpus.g6")), std::runtime_error);
}

TEST_CASE("all_trees yields distinct labeled trees") {
    std::set<std::string> seen;
    for (const auto& t : generate_corpus(CorpusSpec::all_trees(5))) {
        CHECK(is_tree(t));
        seen.insert(emit_graph6(t));
    }
    CHECK(seen.size() == 125);
}

TEST_CASE("random corpus is reproducible") {
    auto a = generate_corpus(CorpusSpec::random(8, 0.5, 100, 7));
    auto b = generate_corpus(CorpusSpec::random(8, 0.5, 100, 7));
    auto c = generate_corpus(CorpusSpec::random(8, 0.5, 100, 8));
    CHECK(a == b);
    CHECK(a != c);
    CHECK(a.size() == 100);
}

TEST_CASE("corpus filters keep source indices") {
    auto spec = CorpusSpec::exhaustive_labeled(4);
    spec.filters.connected_only = true;
    CorpusStream stream(spec);
    std::size_t count = 0, last = 0;
    while (auto item = stream.next()) {
        CHECK(is_connected(item->graph));
        CHECK(item->index >= last);
        last = item->index;
        ++count;
    }
    CHECK(count == 38);

    spec.filters = {};
    spec.filters.tree_only = true;
    CHECK(generate_corpus(spec).size() == 16);
    spec.filters = {};
    spec.filters.min_degree = 2;
    for (const auto& g : generate_corpus(spec)) CHECK(g.min_degree() >= 2);
}

TEST_CASE("selectors") {
    CHECK(resolve_selector("max_degree_bound") == std::vector<TheoremId>{TheoremId::max_degree_bound});
    CHECK(resolve_selector("tree_sandwich").size() == 4);
    CHECK(resolve_selector("all").size() == theorem_count);
    CHECK(resolve_selector("single").size() + resolve_selector("pairs").size() + 1 == theorem_count);
    CHECK_THROWS_AS(resolve_selector("bogus"), std::invalid_argument);
}

TEST_CASE("verify max_degree_bound over exhaustive_labeled(5)") {
    VerifyOptions opt;
    opt.corpus = CorpusSpec::exhaustive_labeled(5);
    opt.selection = Selection::of({TheoremId::max_degree_bound});
    RunSummary s;
    auto lines = parse_lines(run(opt, &s));
    CHECK(lines.size() == 1025);
    CHECK(s.records == 1024);
    CHECK(s.solid_violations == 0);
    CHECK(s.exit_code() == 0);

    const auto& first = lines.front();
    std::vector<std::string> keys;
    for (auto it = first.begin(); it != first.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"graph_id", "graph6", "theorem_id", "k", "lhs", "rhs", "status", "witness"});
    CHECK(lines.back()["summary"] == true);
}

TEST_CASE("verify tree sandwich over all_trees(7)") {
    VerifyOptions opt;
    opt.corpus = CorpusSpec::all_trees(7);
    opt.selection = Selection::of(resolve_selector("tree_sandwich"));
    RunSummary s;
    run(opt, &s);
    const auto& star = s.json["agreement"]["tree_star_characterization"];
    CHECK(star["total"] == 16807);
    CHECK(star["rate"] == 1.0);
    CHECK(s.solid_violations == 0);
}

TEST_CASE("verify on the Ω reference graph") {
    VerifyOptions opt;
    opt.corpus = CorpusSpec::in_memory({fig1_graph()});
    opt.selection = Selection::of(resolve_selector("single"));
    auto lines = parse_lines(run(opt));
    bool seen = false;
    for (const auto& l : lines)
        if (l.contains("theorem_id") && l["theorem_id"] == "max_degree_bound") {
            CHECK(l["status"] == "sharp");
            seen = true;
        }
    CHECK(seen);
}

TEST_CASE("summary tallies equal the record count") {
    VerifyOptions opt;
    opt.corpus = CorpusSpec::exhaustive_labeled(3);
    opt.ks = {1, 2};
    opt.selection = Selection::all();
    opt.check.product_cap = 16;
    RunSummary s;
    auto lines = parse_lines(run(opt, &s));
    std::size_t sum = 0;
    for (const auto& t : s.tallies) sum += t.total();
    CHECK(sum == s.records);
    CHECK(lines.size() == s.records + 1);
    CHECK(s.pairs == 8 * 8);
}

TEST_CASE("verify output does not depend on the worker count") {
    VerifyOptions opt;
    opt.corpus = CorpusSpec::random(7, 0.4, 60, 3);
    opt.ks = {1, 2};
    opt.chunk_size = 37;
    opt.jobs = 1;
    const auto one = run(opt);
    opt.jobs = 8;
    CHECK(run(opt) == one);
}

TEST_CASE("records replay through the checkers") {
    VerifyOptions opt;
    opt.corpus = CorpusSpec::exhaustive_labeled(4);
    opt.selection = Selection::of({TheoremId::degree_sequence_bound, TheoremId::chi_sqrt_bound});
    for (const auto& l : parse_lines(run(opt))) {
        if (l.contains("summary")) continue;
        const auto g = parse_graph6(l["graph6"].get<std::string>());
        const auto k = l["k"].get<std::size_t>();
        if (l["theorem_id"] == "degree_sequence_bound") {
            auto again = check_degree_sequence_bound(g, k);
            CHECK(to_json(again.lhs) == l["lhs"]);
            CHECK(to_json(again.rhs) == l["rhs"]);
        } else {
            auto again = check_chi_bounds(g, k);
            CHECK(to_json(again[0].lhs) == l["lhs"]);
            CHECK(to_json(again[0].rhs) == l["rhs"]);
        }
    }
}

TEST_CASE("cap overruns become skipped records") {
    VerifyOptions opt;
    opt.corpus = CorpusSpec::in_memory({path_graph(5), path_graph(5)});
    opt.selection = Selection::of({TheoremId::cartesian_l2_upper});
    RunSummary s;
    auto lines = parse_lines(run(opt, &s));
    CHECK(s.records == 4);
    CHECK(lines[0]["status"] == "skipped");
    CHECK(lines[0]["graph_id"] == "0,0");
    CHECK(s.tallies[static_cast<std::size_t>(TheoremId::cartesian_l2_upper)].skipped == 4);
}

TEST_CASE("LIMPACK_JOBS") {
    setenv("LIMPACK_JOBS", "3", 1);
    CHECK(jobs_from_environment() == 3);
    setenv("LIMPACK_JOBS", "zero", 1);
    CHECK_THROWS_AS(jobs_from_environment(), std::invalid_argument);
    unsetenv("LIMPACK_JOBS");
    CHECK(jobs_from_environment(5) == 5);
}
