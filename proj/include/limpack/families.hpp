#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <utility>

#include "limpack/graph.hpp"

namespace limpack {

// Standard families. Sizes must be >= 1 (cycles >= 3); violations throw GraphError.

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
/// K_{1,leaves}; the center is vertex 0.
Graph star_graph(std::size_t leaves);
Graph complete_graph(std::size_t n);
/// K_{a,b}; the first side is 0..a-1.
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph empty_graph(std::size_t n);

enum class StandardFamily { path, cycle, star, complete, complete_bipartite, empty };

std::optional<StandardFamily> parse_standard_family(std::string_view name);

/// Dispatches on `kind`; complete_bipartite takes two parameters, the rest one.
Graph standard(StandardFamily kind, std::span<const std::size_t> params);

/// ST(x, y): adjacent centers 0 and 1 with x and y pendant leaves.
Graph double_star(std::size_t x, std::size_t y);

/// The 8-vertex member of Ω used as the reference example, v_i -> i-1.
Graph fig1_graph();

/// c independent vertices, a clique on the c(c-1)/2 pairs, each pair joined to
/// its private clique vertex. Vertex c + j belongs to the j-th pair in
/// lexicographic order.
Graph diameter2_gadget(std::size_t c);

/// Tree with open packing number a and 2-total limited packing number b, for
/// a >= 3 and a+1 <= b <= 2a.
///
/// b = 2a: the path v_1..v_a (vertices 0..a-1) with two pendant leaves on each
/// path vertex. Otherwise, with x = b - a: the star K_{1,a} (center 0, arms
/// 1..a), two leaves on arm i for i < x and one leaf on arm i for x <= i <= a-1.
Graph realization_tree(std::size_t a, std::size_t b);

/// G' ⊙ K_1: every vertex i gains the pendant leaf n + i.
Graph cartesian_sharpness_factor(const Graph& gprime);

/// (K_{a,a}, edgeless graph on a+b-1 vertices).
std::pair<Graph, Graph> corona_chi_family(std::size_t a, std::size_t b);

// ---------------------------------------------------------------------------
// Family Ω

struct OmegaCertificate {
    VertexSet a;
    VertexSet b;
    Vertex star_center = 0;
    friend bool operator==(const OmegaCertificate&, const OmegaCertificate&) = default;
};

struct OmegaResult {
    enum class Status { member, not_member, cap_exceeded };
    Status status = Status::not_member;
    std::optional<OmegaCertificate> certificate;
};

/// Decides membership in Ω by search over (A, B) with V = A ∪ B.
///
/// Candidates are ordered by star center, then A = N[w] before the proper
/// subsets of N[w] (largest first, lexicographic within a size), then
/// A ∩ B lexicographically. The first valid pair in that order is returned.
/// Graphs with more than `cap` vertices are not searched.
OmegaResult omega_membership(const Graph& g, std::size_t cap = 16);

/// Independent check of the four certificate conditions plus V = A ∪ B.
bool is_omega_certificate(const Graph& g, const OmegaCertificate& cert);

} // namespace limpack
