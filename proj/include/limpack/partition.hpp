#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "limpack/solvers.hpp"

namespace limpack {

/// Disjoint non-empty classes covering V(G).
struct Partition {
    std::vector<VertexSet> classes;
    friend bool operator==(const Partition&, const Partition&) = default;
};

/// Overlapping classes, uncovered vertices, empty classes or a universe mismatch.
class MalformedPartition : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using PartitionResult = Optimum<Partition>;

/// True iff every class is a k-limited packing. Throws MalformedPartition if `p`
/// is not a partition of V(g).
bool is_klp_partition(const Graph& g, const Partition& p, std::size_t k);

/// First fit over vertices in descending-degree order.
std::pair<std::size_t, Partition> greedy_upper_bound(const Graph& g, std::size_t k);

/// χ_×k with a witness partition (classes ordered by least member).
PartitionResult chi_times_k(const Graph& g, std::size_t k, SearchLimits limits = {});

} // namespace limpack
