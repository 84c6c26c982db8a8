#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "json.hpp"
#include "limpack/graph.hpp"
#include "limpack/products.hpp"
#include "limpack/solvers.hpp"

namespace limpack {

using Rational = boost::rational<std::int64_t>;
using Json = nlohmann::ordered_json;

/// One identifier per checked statement (a two-sided bound yields two ids).
enum class TheoremId {
    degree_sequence_bound,
    max_degree_bound,
    omega_characterization,
    regular_corollary,
    tree_delta_prime_bound,
    edge_deletion_lower,
    edge_deletion_upper,
    open_packing_lower,
    open_packing_upper,
    tree_sandwich_lower,
    tree_sandwich_upper,
    tree_star_characterization,
    tree_top_characterization,
    unique_set_leaves,
    cartesian_l2t_lower,
    cartesian_l2t_sharpness,
    direct_l2t_lower,
    rooted_l2t_lower,
    rooted_l2t_upper,
    cartesian_l2_upper,
    direct_l2_lower,
    rooted_l2_formula,
    chi_sqrt_bound,
    chi_product_bound,
    chi_ceiling_bound,
    corona_chi_lower,
    corona_chi_upper,
    corona_chi_neighborhood,
    aux_kn_over_delta,
    aux_k_gamma_t,
    aux_rho_o_gamma_t,
};

inline constexpr std::size_t theorem_count = 31;

std::string_view to_string(TheoremId id);
std::optional<TheoremId> parse_theorem_id(std::string_view name);

/// Solid statements fail a corpus run when violated; the others are audited and
/// reported only.
bool is_solid(TheoremId id);

/// How lhs is supposed to compare to rhs.
enum class Relation { at_most, at_least, equal };

enum class Status { holds, violated, vacuous, sharp };

std::string_view to_string(Relation r);
std::string_view to_string(Status s);

struct BoundReport {
    TheoremId theorem = TheoremId::degree_sequence_bound;
    std::size_t k = 0;
    Rational lhs;
    Rational rhs;
    Relation relation = Relation::at_most;
    Status status = Status::holds;
    Json witness = Json::object();
};

/// "equality iff structure" audits.
struct CharacterizationReport {
    TheoremId theorem = TheoremId::omega_characterization;
    bool equality_holds = false;
    bool structural_condition_holds = false;
    Json detail = Json::object();

    [[nodiscard]] bool agree() const { return equality_holds == structural_condition_holds; }
};

/// Flattens a characterization into a record: lhs/rhs are the two truth values
/// (0/1), status is holds when they agree and violated otherwise.
BoundReport as_bound_report(const CharacterizationReport& c, std::size_t k);

/// holds / sharp / violated for a relation between exact values.
Status classify(const Rational& lhs, const Rational& rhs, Relation relation);

struct CheckOptions {
    SearchLimits limits;
    std::size_t omega_cap = 16;
    std::size_t product_cap = 24;
    std::size_t enumeration_cap = max_enumeration_order;
};

/// L_{k,t}(G) <= max{t : d_1 + .. + d_t <= kn} over the ascending degree sequence.
BoundReport check_degree_sequence_bound(const Graph& g, std::size_t k, const CheckOptions& opt = {});

struct MaxDegreeCheck {
    BoundReport bound;
    /// Present for k = 2 unless the Ω search hit its cap.
    std::optional<CharacterizationReport> omega;
};

/// L_{k,t}(G) <= n + k - Δ(G); for k = 2 also audits equality against Ω membership.
MaxDegreeCheck check_max_degree_bound(const Graph& g, std::size_t k, const CheckOptions& opt = {});

/// r-regular with L_{k,t} = n + k - r and k <= r - 1 implies r >= (n+1)/2; vacuous otherwise.
BoundReport check_regular_consequence(const Graph& g, std::size_t k, const CheckOptions& opt = {});

/// L_{2,t}(T) <= (c-2)/(c-1) n - c + 4 for trees with δ'(T) >= c >= 4.
BoundReport check_tree_delta_prime_bound(const Graph& tree, std::size_t c, const CheckOptions& opt = {});

/// {lower, upper} for L_{k,t}(G) <= L_{k,t}(G-e) <= L_{k,t}(G) + 2.
std::array<BoundReport, 2> check_edge_deletion(const Graph& g, Edge e, std::size_t k, const CheckOptions& opt = {});

/// {lower, upper} for ρ_o + 1 <= L_{2,t} <= (Δ²+1)/δ · ρ_o.
std::array<BoundReport, 2> check_open_packing_sandwich(const Graph& g, const CheckOptions& opt = {});

struct TreeSandwichCheck {
    BoundReport lower;
    BoundReport upper;
    CharacterizationReport star;
    /// Absent when the optimal-set enumeration cap is exceeded.
    std::optional<CharacterizationReport> top;
};

/// ρ_o + 1 <= L_{2,t} <= 2ρ_o on trees, with the star and top-equality characterizations.
TreeSandwichCheck check_tree_sandwich(const Graph& tree, const CheckOptions& opt = {});

/// If the L_{2,t}-set is unique it contains every leaf; vacuous otherwise.
BoundReport check_unique_set_leaves(const Graph& g, const CheckOptions& opt = {});

/// The product inequalities for one product kind and one invariant
/// (limited_packing for L_2, total_limited_packing for L_{2,t}).
/// Rooted products need `root`; corona products are handled by check_corona_chi.
std::vector<BoundReport> check_product_bounds(const Graph& g, const Graph& h, ProductKind kind, Invariant variant,
                                              std::optional<Vertex> root = std::nullopt,
                                              const CheckOptions& opt = {});

/// Audits the exact rooted-product L_2 formula against the solver.
BoundReport check_rooted_l2_formula(const Graph& g, const Graph& h, Vertex root, const CheckOptions& opt = {});

/// Sharpness instance for the Cartesian L_{2,t} lower bound: (G' ⊙ K_1) □ K_r.
BoundReport check_cartesian_sharpness(const Graph& gprime, std::size_t r, const CheckOptions& opt = {});

/// χ_×k + L_k >= 2√n, χ_×k · L_k >= n and χ_×k <= ⌈n/k⌉.
std::vector<BoundReport> check_chi_bounds(const Graph& g, std::size_t k, const CheckOptions& opt = {});

/// χ_×2(G) <= χ_×2(G⊙H) <= χ_×2(G) + ⌈|V(H)|/2⌉ and χ_×2(G⊙H) >= ⌈(Δ(G)+1+|V(H)|)/2⌉.
std::vector<BoundReport> check_corona_chi(const Graph& g, const Graph& h, const CheckOptions& opt = {});

/// Cited results used inside proofs: L_{k,t} <= kn/δ (δ >= 1), and on trees
/// L_{k,t} <= kγ_t and ρ_o = γ_t. Items whose precondition fails are omitted.
std::vector<BoundReport> check_known_auxiliary_bounds(const Graph& g, std::size_t k, const CheckOptions& opt = {});

Json to_json(const VertexSet& s);
Json to_json(const Rational& r);

} // namespace limpack
