#pragma once

#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "limpack/graph.hpp"

namespace limpack {

/// A search exceeded a size cap or its node budget.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact solvers handle graphs up to this order (one machine word per neighborhood).
inline constexpr std::size_t max_solver_order = 64;
/// Enumeration-based routines (all optimal sets, brute force oracle).
inline constexpr std::size_t max_enumeration_order = 24;

enum class Method { branch_and_bound, enumeration };

std::string_view to_string(Method m);

/// Node budget shared by every search in one solver call; 0 means unlimited.
struct SearchLimits {
    std::uint64_t max_nodes = 0;
};

/// Exact optimum with a witness.
///
/// Single-set witnesses are the lexicographically least optimal set.
template <class Witness>
struct Optimum {
    std::size_t value = 0;
    Witness witness;
    std::uint64_t nodes_explored = 0;
    Method method = Method::branch_and_bound;
};

using OptResult = Optimum<VertexSet>;

enum class Invariant {
    limited_packing,       ///< L_k:     |N[v] ∩ S| <= k
    total_limited_packing, ///< L_{k,t}: |N(v) ∩ S| <= k
    domination,            ///< γ
    total_domination,      ///< γ_t
    packing_partition,     ///< χ_×k
};

std::string_view to_string(Invariant inv);

// Feasibility predicates. k must be >= 1.

bool is_k_limited_packing(const Graph& g, const VertexSet& s, std::size_t k);
bool is_k_total_limited_packing(const Graph& g, const VertexSet& s, std::size_t k);
bool is_dominating(const Graph& g, const VertexSet& s);
bool is_total_dominating(const Graph& g, const VertexSet& s);

/// L_k (total = false) or L_{k,t} (total = true).
OptResult max_limited_packing(const Graph& g, std::size_t k, bool total, SearchLimits limits = {});

/// ρ = L_1.
inline OptResult packing_number(const Graph& g, SearchLimits limits = {}) {
    return max_limited_packing(g, 1, false, limits);
}

/// ρ_o = L_{1,t}.
inline OptResult open_packing_number(const Graph& g, SearchLimits limits = {}) {
    return max_limited_packing(g, 1, true, limits);
}

/// γ (total = false) or γ_t (total = true). γ_t needs a graph without isolated vertices.
OptResult min_dominating(const Graph& g, bool total, SearchLimits limits = {});

/// All optimal sets for one of the four set invariants, sorted lexicographically.
/// k is ignored for the domination invariants.
std::vector<VertexSet> enumerate_optimal_sets(const Graph& g, Invariant inv, std::size_t k,
                                              std::size_t cap = max_enumeration_order);

/// Reference value by plain enumeration, sharing no code with the searches.
///
/// Set invariants enumerate all 2^n subsets (n <= 24); the partition invariant
/// enumerates every set partition (n <= 10).
std::size_t brute_force_oracle(const Graph& g, Invariant inv, std::size_t k);

} // namespace limpack
