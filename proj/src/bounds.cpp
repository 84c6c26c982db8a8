#include "limpack/bounds.hpp"

#include <algorithm>
#include <string>

#include "limpack/families.hpp"
#include "limpack/partition.hpp"

namespace limpack {

namespace {

struct TheoremInfo {
    TheoremId id;
    std::string_view name;
    bool solid;
};

constexpr std::array<TheoremInfo, theorem_count> theorem_table{{
    {TheoremId::degree_sequence_bound, "degree_sequence_bound", true},
    {TheoremId::max_degree_bound, "max_degree_bound", true},
    {TheoremId::omega_characterization, "omega_characterization", false},
    {TheoremId::regular_corollary, "regular_corollary", true},
    {TheoremId::tree_delta_prime_bound, "tree_delta_prime_bound", true},
    {TheoremId::edge_deletion_lower, "edge_deletion_lower", true},
    {TheoremId::edge_deletion_upper, "edge_deletion_upper", true},
    {TheoremId::open_packing_lower, "open_packing_lower", true},
    {TheoremId::open_packing_upper, "open_packing_upper", false},
    {TheoremId::tree_sandwich_lower, "tree_sandwich_lower", true},
    {TheoremId::tree_sandwich_upper, "tree_sandwich_upper", true},
    {TheoremId::tree_star_characterization, "tree_star_characterization", false},
    {TheoremId::tree_top_characterization, "tree_top_characterization", false},
    {TheoremId::unique_set_leaves, "unique_set_leaves", true},
    {TheoremId::cartesian_l2t_lower, "cartesian_l2t_lower", true},
    {TheoremId::cartesian_l2t_sharpness, "cartesian_l2t_sharpness", false},
    {TheoremId::direct_l2t_lower, "direct_l2t_lower", true},
    {TheoremId::rooted_l2t_lower, "rooted_l2t_lower", true},
    {TheoremId::rooted_l2t_upper, "rooted_l2t_upper", true},
    {TheoremId::cartesian_l2_upper, "cartesian_l2_upper", true},
    {TheoremId::direct_l2_lower, "direct_l2_lower", true},
    {TheoremId::rooted_l2_formula, "rooted_l2_formula", false},
    {TheoremId::chi_sqrt_bound, "chi_sqrt_bound", true},
    {TheoremId::chi_product_bound, "chi_product_bound", true},
    {TheoremId::chi_ceiling_bound, "chi_ceiling_bound", true},
    {TheoremId::corona_chi_lower, "corona_chi_lower", true},
    {TheoremId::corona_chi_upper, "corona_chi_upper", true},
    {TheoremId::corona_chi_neighborhood, "corona_chi_neighborhood", true},
    {TheoremId::aux_kn_over_delta, "aux_kn_over_delta", true},
    {TheoremId::aux_k_gamma_t, "aux_k_gamma_t", true},
    {TheoremId::aux_rho_o_gamma_t, "aux_rho_o_gamma_t", true},
}};

const TheoremInfo& info(TheoremId id) { return theorem_table[static_cast<std::size_t>(id)]; }

Rational integer(std::size_t v) { return Rational(static_cast<std::int64_t>(v)); }

BoundReport make_report(TheoremId id, std::size_t k, std::size_t lhs, Rational rhs, Relation rel, Json witness) {
    BoundReport r;
    r.theorem = id;
    r.k = k;
    r.lhs = integer(lhs);
    r.rhs = rhs;
    r.relation = rel;
    r.status = classify(r.lhs, r.rhs, rel);
    r.witness = std::move(witness);
    return r;
}

OptResult ltk(const Graph& g, std::size_t k, const CheckOptions& opt) {
    return max_limited_packing(g, k, true, opt.limits);
}

void require_tree(const Graph& t) {
    if (!is_tree(t)) throw PreconditionError("graph is not a tree");
}

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

/// Invariants of a possibly empty factor (G^- may have no vertices).
struct FactorValues {
    std::size_t rho = 0, rho_o = 0, l2 = 0, l2t = 0;
};

FactorValues factor_values(const Graph& g, const CheckOptions& opt) {
    FactorValues v;
    if (g.order() == 0) return v;
    v.rho = packing_number(g, opt.limits).value;
    v.rho_o = open_packing_number(g, opt.limits).value;
    v.l2 = max_limited_packing(g, 2, false, opt.limits).value;
    v.l2t = max_limited_packing(g, 2, true, opt.limits).value;
    return v;
}

Json factor_json(const FactorValues& v) {
    return Json{{"rho", v.rho}, {"rho_o", v.rho_o}, {"L2", v.l2}, {"L2t", v.l2t}};
}

void require_product_cap(std::size_t order, const CheckOptions& opt) {
    if (order > opt.product_cap) throw CapExceeded("product order " + std::to_string(order) + " exceeds cap");
}

} // namespace

std::string_view to_string(TheoremId id) { return info(id).name; }

std::optional<TheoremId> parse_theorem_id(std::string_view name) {
    for (const auto& t : theorem_table)
        if (t.name == name) return t.id;
    return std::nullopt;
}

bool is_solid(TheoremId id) { return info(id).solid; }

std::string_view to_string(Relation r) {
    switch (r) {
    case Relation::at_most: return "<=";
    case Relation::at_least: return ">=";
    case Relation::equal: return "==";
    }
    return "?";
}

std::string_view to_string(Status s) {
    switch (s) {
    case Status::holds: return "holds";
    case Status::violated: return "violated";
    case Status::vacuous: return "vacuous";
    case Status::sharp: return "sharp";
    }
    return "?";
}

Status classify(const Rational& lhs, const Rational& rhs, Relation relation) {
    switch (relation) {
    case Relation::at_most: return lhs < rhs ? Status::holds : lhs == rhs ? Status::sharp : Status::violated;
    case Relation::at_least: return lhs > rhs ? Status::holds : lhs == rhs ? Status::sharp : Status::violated;
    case Relation::equal: return lhs == rhs ? Status::holds : Status::violated;
    }
    return Status::violated;
}

BoundReport as_bound_report(const CharacterizationReport& c, std::size_t k) {
    BoundReport r;
    r.theorem = c.theorem;
    r.k = k;
    r.lhs = Rational(c.equality_holds ? 1 : 0);
    r.rhs = Rational(c.structural_condition_holds ? 1 : 0);
    r.relation = Relation::equal;
    r.status = c.agree() ? Status::holds : Status::violated;
    r.witness = c.detail;
    return r;
}

Json to_json(const VertexSet& s) { return Json(s.members()); }

Json to_json(const Rational& r) {
    if (r.denominator() == 1) return Json(r.numerator());
    return Json(std::to_string(r.numerator()) + "/" + std::to_string(r.denominator()));
}

BoundReport check_degree_sequence_bound(const Graph& g, std::size_t k, const CheckOptions& opt) {
    if (g.order() < 2) throw PreconditionError("degree-sequence bound needs n >= 2");
    const auto degrees = degree_sequence(g);
    const std::size_t budget = k * g.order();
    std::size_t t = 0, prefix = 0;
    while (t < degrees.size() && prefix + degrees[t] <= budget) prefix += degrees[t++];
    auto l = ltk(g, k, opt);
    return make_report(TheoremId::degree_sequence_bound, k, l.value, integer(t), Relation::at_most,
                       Json{{"set", to_json(l.witness)}, {"degree_sequence", degrees}});
}

MaxDegreeCheck check_max_degree_bound(const Graph& g, std::size_t k, const CheckOptions& opt) {
    if (g.order() < 1) throw PreconditionError("max-degree bound needs n >= 1");
    auto l = ltk(g, k, opt);
    const auto rhs = static_cast<std::int64_t>(g.order() + k) - static_cast<std::int64_t>(g.max_degree());
    MaxDegreeCheck out;
    out.bound = make_report(TheoremId::max_degree_bound, k, l.value, Rational(rhs), Relation::at_most,
                            Json{{"set", to_json(l.witness)}, {"max_degree", g.max_degree()}});
    if (k != 2) return out;

    auto omega = omega_membership(g, opt.omega_cap);
    if (omega.status == OmegaResult::Status::cap_exceeded) {
        out.bound.witness["omega"] = "cap_exceeded";
        return out;
    }
    CharacterizationReport c;
    c.theorem = TheoremId::omega_characterization;
    c.equality_holds = Rational(static_cast<std::int64_t>(l.value)) == Rational(rhs);
    c.structural_condition_holds = omega.status == OmegaResult::Status::member;
    c.detail["L2t"] = l.value;
    c.detail["n_plus_2_minus_delta"] = rhs;
    c.detail["set"] = to_json(l.witness);
    if (omega.certificate) {
        c.detail["omega_A"] = to_json(omega.certificate->a);
        c.detail["omega_B"] = to_json(omega.certificate->b);
        c.detail["star_center"] = omega.certificate->star_center;
    }
    out.omega = std::move(c);
    return out;
}

BoundReport check_regular_consequence(const Graph& g, std::size_t k, const CheckOptions& opt) {
    const auto n = g.order();
    const Rational rhs(static_cast<std::int64_t>(n + 1), 2);
    const auto r = g.max_degree();
    const bool regular = n > 0 && g.min_degree() == r;
    Json w{{"regular", regular}, {"r", r}};
    bool premise = regular && k + 1 <= r;
    if (premise) {
        auto l = ltk(g, k, opt);
        w["Lkt"] = l.value;
        w["set"] = to_json(l.witness);
        premise = l.value + r == n + k;
    }
    auto report = make_report(TheoremId::regular_corollary, k, r, rhs, Relation::at_least, std::move(w));
    if (!premise) report.status = Status::vacuous;
    return report;
}

BoundReport check_tree_delta_prime_bound(const Graph& tree, std::size_t c, const CheckOptions& opt) {
    require_tree(tree);
    if (tree.order() < 3) throw PreconditionError("tree must have order >= 3");
    if (c < 4) throw PreconditionError("c must be at least 4");
    const auto dp = delta_prime(tree);
    if (dp < c) throw PreconditionError("delta'(T) = " + std::to_string(dp) + " is below c");
    const auto n = static_cast<std::int64_t>(tree.order());
    const auto ci = static_cast<std::int64_t>(c);
    const Rational rhs = Rational(ci - 2, ci - 1) * n - ci + 4;
    auto l = ltk(tree, 2, opt);
    return make_report(TheoremId::tree_delta_prime_bound, 2, l.value, rhs, Relation::at_most,
                       Json{{"set", to_json(l.witness)}, {"c", c}, {"delta_prime", dp}});
}

std::array<BoundReport, 2> check_edge_deletion(const Graph& g, Edge e, std::size_t k, const CheckOptions& opt) {
    const Graph minus = g.without_edge(e);
    auto base = ltk(g, k, opt);
    auto cut = ltk(minus, k, opt);
    Json w{{"edge", {e.first, e.second}},
           {"L_G", base.value},
           {"L_G_minus_e", cut.value},
           {"set_G", to_json(base.witness)},
           {"set_G_minus_e", to_json(cut.witness)}};
    return {make_report(TheoremId::edge_deletion_lower, k, cut.value, integer(base.value), Relation::at_least, w),
            make_report(TheoremId::edge_deletion_upper, k, cut.value, integer(base.value + 2), Relation::at_most, w)};
}

std::array<BoundReport, 2> check_open_packing_sandwich(const Graph& g, const CheckOptions& opt) {
    if (g.order() == 0 || g.min_degree() == 0) throw PreconditionError("graph has isolated vertices");
    if (g.max_degree() < 2) throw PreconditionError("needs max degree >= 2");
    auto rho_o = open_packing_number(g, opt.limits);
    auto l = ltk(g, 2, opt);
    const auto delta = static_cast<std::int64_t>(g.max_degree());
    const auto small = static_cast<std::int64_t>(g.min_degree());
    const Rational upper = Rational(delta * delta + 1, small) * static_cast<std::int64_t>(rho_o.value);
    Json w{{"rho_o", rho_o.value},
           {"L2t", l.value},
           {"bound_value", to_json(upper)},
           {"rho_o_set", to_json(rho_o.witness)},
           {"L2t_set", to_json(l.witness)}};
    return {make_report(TheoremId::open_packing_lower, 2, l.value, integer(rho_o.value + 1), Relation::at_least, w),
            make_report(TheoremId::open_packing_upper, 2, l.value, upper, Relation::at_most, w)};
}

TreeSandwichCheck check_tree_sandwich(const Graph& tree, const CheckOptions& opt) {
    require_tree(tree);
    if (tree.max_degree() < 2) throw PreconditionError("tree needs max degree >= 2");
    auto rho_o = open_packing_number(tree, opt.limits);
    auto l = ltk(tree, 2, opt);
    Json w{{"rho_o", rho_o.value}, {"L2t", l.value}, {"rho_o_set", to_json(rho_o.witness)},
           {"L2t_set", to_json(l.witness)}};

    TreeSandwichCheck out;
    out.lower = make_report(TheoremId::tree_sandwich_lower, 2, l.value, integer(rho_o.value + 1),
                            Relation::at_least, w);
    out.upper = make_report(TheoremId::tree_sandwich_upper, 2, l.value, integer(2 * rho_o.value),
                            Relation::at_most, w);

    out.star.theorem = TheoremId::tree_star_characterization;
    out.star.equality_holds = rho_o.value + 1 == l.value;
    out.star.structural_condition_holds = is_star(tree);
    out.star.detail = w;

    if (tree.order() > opt.enumeration_cap) return out;
    const auto s_sets = enumerate_optimal_sets(tree, Invariant::total_limited_packing, 2, opt.enumeration_cap);
    const auto d_sets = enumerate_optimal_sets(tree, Invariant::total_domination, 0, opt.enumeration_cap);
    bool condition = true;
    Json failing;
    for (const auto& s : s_sets) {
        for (const auto& d : d_sets) {
            bool ok = true;
            s.for_each([&](Vertex v) { ok = ok && tree.neighbors(v).intersection_size(d) == 1; });
            d.for_each([&](Vertex v) { ok = ok && tree.neighbors(v).intersection_size(s) == 2; });
            if (!ok) {
                condition = false;
                failing = Json{{"S", to_json(s)}, {"D", to_json(d)}};
                break;
            }
        }
        if (!condition) break;
    }
    CharacterizationReport top;
    top.theorem = TheoremId::tree_top_characterization;
    top.equality_holds = l.value == 2 * rho_o.value;
    top.structural_condition_holds = condition;
    top.detail = w;
    top.detail["L2t_sets"] = s_sets.size();
    top.detail["gamma_t_sets"] = d_sets.size();
    if (!condition) top.detail["failing_pair"] = failing;
    out.top = std::move(top);
    return out;
}

BoundReport check_unique_set_leaves(const Graph& g, const CheckOptions& opt) {
    const auto sets = enumerate_optimal_sets(g, Invariant::total_limited_packing, 2, opt.enumeration_cap);
    const auto leaf_list = leaves(g);
    const VertexSet& b = sets.front();
    std::size_t inside = 0;
    Json missing = Json::array();
    for (auto v : leaf_list) {
        if (b.contains(v))
            ++inside;
        else
            missing.push_back(v);
    }
    Json w{{"optimal_sets", sets.size()}, {"set", to_json(b)}, {"leaves", leaf_list}};
    if (!missing.empty()) w["leaves_outside"] = missing;
    auto report = make_report(TheoremId::unique_set_leaves, 2, inside, integer(leaf_list.size()), Relation::equal,
                              std::move(w));
    if (sets.size() != 1) report.status = Status::vacuous;
    return report;
}

std::vector<BoundReport> check_product_bounds(const Graph& g, const Graph& h, ProductKind kind, Invariant variant,
                                              std::optional<Vertex> root, const CheckOptions& opt) {
    if (variant != Invariant::limited_packing && variant != Invariant::total_limited_packing)
        throw std::invalid_argument("product bounds are stated for L_2 and L_{2,t}");
    const bool total = variant == Invariant::total_limited_packing;
    require_product_cap(g.order() * h.order(), opt);

    Json w{{"kind", to_string(kind)}, {"invariant", total ? "L2t" : "L2"}};
    std::vector<BoundReport> out;

    switch (kind) {
    case ProductKind::cartesian: {
        const auto p = cartesian_product(g, h);
        const auto fg = factor_values(g, opt);
        const auto fh = factor_values(h, opt);
        const auto exact = max_limited_packing(p.graph(), 2, total, opt.limits);
        w["G"] = factor_json(fg);
        w["H"] = factor_json(fh);
        w["set"] = to_json(exact.witness);
        if (total) {
            const auto rhs = std::max(fg.l2t * fh.rho, fg.rho * fh.l2t);
            out.push_back(make_report(TheoremId::cartesian_l2t_lower, 2, exact.value, integer(rhs),
                                      Relation::at_least, w));
        } else {
            const auto rhs = std::min(fg.l2 * h.order(), fh.l2 * g.order());
            out.push_back(make_report(TheoremId::cartesian_l2_upper, 2, exact.value, integer(rhs),
                                      Relation::at_most, w));
        }
        break;
    }
    case ProductKind::direct: {
        const auto p = direct_product(g, h);
        const auto gm = remove_isolated(g);
        const auto hm = remove_isolated(h);
        const auto fg = factor_values(gm.graph, opt);
        const auto fh = factor_values(hm.graph, opt);
        const auto isolated = gm.removed * h.order() + hm.removed * g.order() - gm.removed * hm.removed;
        const auto exact = max_limited_packing(p.graph(), 2, total, opt.limits);
        w["G_minus"] = factor_json(fg);
        w["H_minus"] = factor_json(fh);
        w["i_G"] = gm.removed;
        w["i_H"] = hm.removed;
        w["set"] = to_json(exact.witness);
        std::size_t core = 0;
        if (total)
            core = std::max(fg.rho_o * fh.l2t, fg.l2t * fh.rho_o);
        else
            core = std::max({fg.rho_o * fh.l2, fg.l2 * fh.rho_o, fg.rho * fh.l2t, fg.l2t * fh.rho});
        out.push_back(make_report(total ? TheoremId::direct_l2t_lower : TheoremId::direct_l2_lower, 2, exact.value,
                                  integer(core + isolated), Relation::at_least, w));
        break;
    }
    case ProductKind::rooted: {
        if (!root) throw std::invalid_argument("rooted product needs a root");
        if (!total) {
            out.push_back(check_rooted_l2_formula(g, h, *root, opt));
            break;
        }
        const auto p = rooted_product(g, h, *root);
        const auto lh = ltk(h, 2, opt).value;
        const auto i_g = remove_isolated(g).removed;
        const auto n = g.order();
        const auto exact = ltk(p.graph(), 2, opt);
        w["root"] = *root;
        w["L2t_H"] = lh;
        w["i_G"] = i_g;
        w["set"] = to_json(exact.witness);
        out.push_back(make_report(TheoremId::rooted_l2t_lower, 2, exact.value, integer(n * (lh - 1) + i_g),
                                  Relation::at_least, w));
        out.push_back(make_report(TheoremId::rooted_l2t_upper, 2, exact.value, integer(n * lh), Relation::at_most, w));
        break;
    }
    case ProductKind::corona: throw std::invalid_argument("corona bounds are checked by check_corona_chi");
    }
    return out;
}

BoundReport check_rooted_l2_formula(const Graph& g, const Graph& h, Vertex root, const CheckOptions& opt) {
    require_product_cap(g.order() * h.order(), opt);
    const auto p = rooted_product(g, h, root);
    const auto h_sets = enumerate_optimal_sets(h, Invariant::limited_packing, 2, opt.enumeration_cap);
    const bool root_in_all =
        std::all_of(h_sets.begin(), h_sets.end(), [&](const VertexSet& s) { return s.contains(root); });
    const auto l2_h = h_sets.front().size();
    const auto l2_g = max_limited_packing(g, 2, false, opt.limits).value;
    const auto n = g.order();
    const auto prediction = root_in_all ? l2_g + n * (l2_h - 1) : n * l2_h;
    const auto exact = max_limited_packing(p.graph(), 2, false, opt.limits);
    Json w{{"root", root},
           {"case", root_in_all ? "root_in_every_set" : "root_avoided_by_some_set"},
           {"L2_G", l2_g},
           {"L2_H", l2_h},
           {"L2_H_sets", h_sets.size()},
           {"prediction", prediction},
           {"exact", exact.value},
           {"match", prediction == exact.value},
           {"set", to_json(exact.witness)}};
    return make_report(TheoremId::rooted_l2_formula, 2, exact.value, integer(prediction), Relation::equal,
                       std::move(w));
}

BoundReport check_cartesian_sharpness(const Graph& gprime, std::size_t r, const CheckOptions& opt) {
    if (r < 3) throw PreconditionError("clique size must be at least 3");
    const Graph g = cartesian_sharpness_factor(gprime);
    const Graph kr = complete_graph(r);
    require_product_cap(g.order() * r, opt);
    const auto fg = factor_values(g, opt);
    const auto fk = factor_values(kr, opt);
    const auto bound = std::max(fg.l2t * fk.rho, fg.rho * fk.l2t);
    const auto exact = ltk(cartesian_product(g, kr).graph(), 2, opt);
    Json w{{"r", r},
           {"G", factor_json(fg)},
           {"K_r", factor_json(fk)},
           {"two_n", 2 * gprime.order()},
           {"set", to_json(exact.witness)}};
    return make_report(TheoremId::cartesian_l2t_sharpness, 2, exact.value, integer(bound), Relation::equal,
                       std::move(w));
}

std::vector<BoundReport> check_chi_bounds(const Graph& g, std::size_t k, const CheckOptions& opt) {
    const auto n = g.order();
    if (n < 2) throw PreconditionError("chi bounds need n >= 2");
    const auto chi = chi_times_k(g, k, opt.limits);
    const auto lk = max_limited_packing(g, k, false, opt.limits);
    Json partition = Json::array();
    for (const auto& c : chi.witness.classes) partition.push_back(to_json(c));
    Json w{{"chi", chi.value}, {"L_k", lk.value}, {"partition", partition}, {"set", to_json(lk.witness)}};

    std::vector<BoundReport> out;
    // χ + L >= 2√n  <=>  (χ + L)^2 >= 4n; rhs is reported as ⌈2√n⌉.
    const auto sum = chi.value + lk.value;
    std::size_t ceil_root = 0;
    while (ceil_root * ceil_root < 4 * n) ++ceil_root;
    auto sqrt_report = make_report(TheoremId::chi_sqrt_bound, k, sum, integer(ceil_root), Relation::at_least, w);
    sqrt_report.status = sum * sum < 4 * n ? Status::violated : sum * sum == 4 * n ? Status::sharp : Status::holds;
    sqrt_report.witness["rhs_exact"] = "2*sqrt(" + std::to_string(n) + ")";
    out.push_back(std::move(sqrt_report));

    out.push_back(make_report(TheoremId::chi_product_bound, k, chi.value * lk.value, integer(n), Relation::at_least, w));

    auto ceiling = make_report(TheoremId::chi_ceiling_bound, k, chi.value, integer(ceil_div(n, k)), Relation::at_most, w);
    ceiling.witness["exceeds_n_over_k"] = chi.value * k > n;
    out.push_back(std::move(ceiling));
    return out;
}

std::vector<BoundReport> check_corona_chi(const Graph& g, const Graph& h, const CheckOptions& opt) {
    require_product_cap(g.order() * (1 + h.order()), opt);
    const auto p = corona_product(g, h);
    const auto chi_g = chi_times_k(g, 2, opt.limits);
    const auto chi_c = chi_times_k(p.graph(), 2, opt.limits);
    const auto m = h.order();
    Json partition = Json::array();
    for (const auto& c : chi_c.witness.classes) partition.push_back(to_json(c));
    Json w{{"chi_G", chi_g.value}, {"chi_corona", chi_c.value}, {"H_order", m}, {"partition", partition}};
    return {
        make_report(TheoremId::corona_chi_lower, 2, chi_c.value, integer(chi_g.value), Relation::at_least, w),
        make_report(TheoremId::corona_chi_upper, 2, chi_c.value, integer(chi_g.value + ceil_div(m, 2)),
                    Relation::at_most, w),
        make_report(TheoremId::corona_chi_neighborhood, 2, chi_c.value, integer(ceil_div(g.max_degree() + 1 + m, 2)),
                    Relation::at_least, w),
    };
}

std::vector<BoundReport> check_known_auxiliary_bounds(const Graph& g, std::size_t k, const CheckOptions& opt) {
    std::vector<BoundReport> out;
    if (g.order() == 0) return out;
    const auto l = ltk(g, k, opt);
    if (g.min_degree() >= 1) {
        const Rational rhs(static_cast<std::int64_t>(k * g.order()), static_cast<std::int64_t>(g.min_degree()));
        out.push_back(make_report(TheoremId::aux_kn_over_delta, k, l.value, rhs, Relation::at_most,
                                  Json{{"set", to_json(l.witness)}, {"min_degree", g.min_degree()}}));
    }
    if (g.order() >= 2 && is_tree(g)) {
        const auto gamma_t = min_dominating(g, true, opt.limits);
        const auto rho_o = open_packing_number(g, opt.limits);
        Json w{{"gamma_t", gamma_t.value}, {"gamma_t_set", to_json(gamma_t.witness)}, {"rho_o", rho_o.value},
               {"rho_o_set", to_json(rho_o.witness)}, {"set", to_json(l.witness)}};
        out.push_back(make_report(TheoremId::aux_k_gamma_t, k, l.value, integer(k * gamma_t.value), Relation::at_most, w));
        out.push_back(make_report(TheoremId::aux_rho_o_gamma_t, k, rho_o.value, integer(gamma_t.value), Relation::equal, w));
    }
    return out;
}

} // namespace limpack
