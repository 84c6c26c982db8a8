// Branch-and-bound for k-(total) limited packings.
//
// State: remaining capacity per vertex w (k minus the chosen vertices already
// inside w's neighborhood) and the mask of undecided vertices that can still be
// added without overflowing any capacity. Choosing u decrements the capacity of
// every w whose neighborhood contains u; when a capacity reaches zero, the whole
// neighborhood of w leaves the candidate mask.

#include <array>

#include "search_common.hpp"

namespace limpack {

using detail::bit;
using detail::Mask;
using detail::popcount;

std::string_view to_string(Method m) {
    return m == Method::branch_and_bound ? "branch_and_bound" : "enumeration";
}

std::string_view to_string(Invariant inv) {
    switch (inv) {
    case Invariant::limited_packing: return "L_k";
    case Invariant::total_limited_packing: return "L_kt";
    case Invariant::domination: return "gamma";
    case Invariant::total_domination: return "gamma_t";
    case Invariant::packing_partition: return "chi_k";
    }
    return "?";
}

namespace {

bool within_capacity(const Graph& g, const VertexSet& s, std::size_t k, bool closed) {
    detail::require_positive_k(k);
    if (s.universe() != g.order()) throw std::invalid_argument("vertex set does not match graph order");
    for (Vertex v = 0; v < g.order(); ++v) {
        auto hits = g.neighbors(v).intersection_size(s) + (closed && s.contains(v) ? 1 : 0);
        if (hits > k) return false;
    }
    return true;
}

class PackingSearch {
public:
    using Capacity = std::array<std::uint8_t, 64>;

    PackingSearch(const Graph& g, std::size_t k, bool total, detail::NodeBudget& budget)
        : n_(g.order()), nb_(detail::neighborhood_masks(g, !total)), order_(detail::degree_order(g)),
          budget_(budget) {
        initial_cap_.fill(static_cast<std::uint8_t>(std::min<std::size_t>(k, 255)));
    }

    /// Optimum value; vertices are branched on in descending-degree order.
    std::size_t maximum() {
        best_ = 0;
        maximize(detail::all_vertices(n_), 0, initial_cap_);
        return best_;
    }

    /// Lexicographically least set of size `target`, by include-first search in index order.
    Mask first_of_size(std::size_t target) {
        target_ = target;
        collect_all_ = false;
        found_.clear();
        search_index_order(detail::all_vertices(n_), 0, 0, initial_cap_);
        return found_.empty() ? 0 : found_.front();
    }

    /// Every set of size `target` (the optimum), in lexicographic order.
    std::vector<Mask> all_of_size(std::size_t target) {
        target_ = target;
        collect_all_ = true;
        found_.clear();
        search_index_order(detail::all_vertices(n_), 0, 0, initial_cap_);
        return found_;
    }

private:
    /// Disjoint neighborhoods each admit at most their remaining capacity.
    [[nodiscard]] std::size_t upper_bound(Mask cand, const Capacity& cap) const {
        std::size_t total = 0;
        Mask rest = cand;
        for (auto w : order_) {
            Mask group = nb_[w] & rest;
            if (static_cast<std::size_t>(popcount(group)) > cap[w]) {
                total += cap[w];
                rest &= ~group;
            }
        }
        return total + static_cast<std::size_t>(popcount(rest));
    }

    Mask take(std::size_t u, Mask cand, Capacity& cap) const {
        cand &= ~bit(u);
        for (Mask hit = nb_[u]; hit != 0; hit &= hit - 1) {
            auto w = detail::lowest(hit);
            if (--cap[w] == 0) cand &= ~nb_[w];
        }
        return cand;
    }

    void maximize(Mask cand, std::size_t count, const Capacity& cap) {
        budget_.tick();
        if (cand == 0) {
            best_ = std::max(best_, count);
            return;
        }
        if (count + static_cast<std::size_t>(popcount(cand)) <= best_) return;
        if (count + upper_bound(cand, cap) <= best_) return;

        std::size_t u = 0;
        for (auto v : order_)
            if ((cand & bit(v)) != 0) {
                u = v;
                break;
            }
        Capacity next = cap;
        Mask with = take(u, cand, next);
        maximize(with, count + 1, next);
        maximize(cand & ~bit(u), count, cap);
    }

    bool search_index_order(Mask cand, Mask chosen, std::size_t count, const Capacity& cap) {
        budget_.tick();
        if (count == target_) {
            found_.push_back(chosen);
            return !collect_all_;
        }
        if (count + static_cast<std::size_t>(popcount(cand)) < target_) return false;
        if (count + upper_bound(cand, cap) < target_) return false;

        auto u = detail::lowest(cand);
        Capacity next = cap;
        Mask with = take(u, cand, next);
        if (search_index_order(with, chosen | bit(u), count + 1, next)) return true;
        return search_index_order(cand & ~bit(u), chosen, count, cap);
    }

    std::size_t n_;
    std::vector<Mask> nb_;
    std::vector<std::size_t> order_;
    detail::NodeBudget& budget_;
    Capacity initial_cap_{};
    std::size_t best_ = 0;
    std::size_t target_ = 0;
    bool collect_all_ = false;
    std::vector<Mask> found_;
};

} // namespace

bool is_k_limited_packing(const Graph& g, const VertexSet& s, std::size_t k) {
    return within_capacity(g, s, k, true);
}

bool is_k_total_limited_packing(const Graph& g, const VertexSet& s, std::size_t k) {
    return within_capacity(g, s, k, false);
}

OptResult max_limited_packing(const Graph& g, std::size_t k, bool total, SearchLimits limits) {
    detail::require_positive_k(k);
    const auto n = g.order();
    // Every vertex fits once k covers the largest neighborhood.
    const auto largest = g.max_degree() + (total ? 0 : 1);
    if (n == 0 || k >= largest) return {n, VertexSet::full(n), 0, Method::branch_and_bound};
    detail::require_solver_order(g);

    detail::NodeBudget budget(limits);
    PackingSearch search(g, k, total, budget);
    auto value = search.maximum();
    auto witness = search.first_of_size(value);
    return {value, VertexSet::from_mask(n, witness), budget.nodes(), Method::branch_and_bound};
}

namespace detail {

std::vector<VertexSet> enumerate_packings(const Graph& g, std::size_t k, bool total) {
    const auto n = g.order();
    const auto largest = g.max_degree() + (total ? 0 : 1);
    if (n == 0 || k >= largest) return {VertexSet::full(n)};
    NodeBudget budget({});
    PackingSearch search(g, k, total, budget);
    auto value = search.maximum();
    std::vector<VertexSet> out;
    for (auto m : search.all_of_size(value)) out.push_back(VertexSet::from_mask(n, m));
    return out;
}

} // namespace detail

} // namespace limpack
