// Minimum (total) dominating sets.
//
// The optimum comes from branching on the undominated vertex with the fewest
// remaining dominators, bounded below by |undominated| / (best single coverage).
// Witnesses and enumeration use the include-first index-order search with the
// optimum as target, so the first hit is the lexicographically least set.

#include "search_common.hpp"

namespace limpack {

using detail::bit;
using detail::Mask;
using detail::popcount;

namespace {

class DominationSearch {
public:
    DominationSearch(const Graph& g, bool total, detail::NodeBudget& budget)
        : n_(g.order()), all_(detail::all_vertices(g.order())), cover_(detail::neighborhood_masks(g, !total)),
          budget_(budget) {}

    std::size_t minimum() {
        best_ = n_ + 1;
        minimize(0, 0, 0);
        return best_;
    }

    Mask first_of_size(std::size_t target) {
        target_ = target;
        collect_all_ = false;
        found_.clear();
        search_index_order(0, 0, 0, 0);
        return found_.empty() ? 0 : found_.front();
    }

    std::vector<Mask> all_of_size(std::size_t target) {
        target_ = target;
        collect_all_ = true;
        found_.clear();
        search_index_order(0, 0, 0, 0);
        return found_;
    }

private:
    /// Lower bound on additional vertices needed to dominate `undominated`
    /// using only vertices in `allowed`; returns n+1 when impossible.
    [[nodiscard]] std::size_t more_needed(Mask undominated, Mask allowed) const {
        int best_cover = 0;
        for (Mask rest = allowed; rest != 0; rest &= rest - 1)
            best_cover = std::max(best_cover, popcount(cover_[detail::lowest(rest)] & undominated));
        if (best_cover == 0) return n_ + 1;
        auto und = static_cast<std::size_t>(popcount(undominated));
        return (und + static_cast<std::size_t>(best_cover) - 1) / static_cast<std::size_t>(best_cover);
    }

    void minimize(Mask dominated, std::size_t count, Mask forbidden) {
        budget_.tick();
        Mask undominated = all_ & ~dominated;
        if (undominated == 0) {
            best_ = std::min(best_, count);
            return;
        }
        if (count + 1 >= best_) return;
        if (count + more_needed(undominated, all_ & ~forbidden) >= best_) return;

        std::size_t pick = 0;
        int fewest = 65;
        for (Mask rest = undominated; rest != 0; rest &= rest - 1) {
            auto u = detail::lowest(rest);
            int options = popcount(cover_[u] & ~forbidden);
            if (options < fewest) {
                fewest = options;
                pick = u;
            }
        }
        if (fewest == 0) return;

        Mask local_forbidden = forbidden;
        for (Mask options = cover_[pick] & ~forbidden; options != 0; options &= options - 1) {
            auto c = detail::lowest(options);
            minimize(dominated | cover_[c], count + 1, local_forbidden);
            local_forbidden |= bit(c);
        }
    }

    bool search_index_order(std::size_t pos, Mask dominated, Mask chosen, std::size_t count) {
        budget_.tick();
        Mask undominated = all_ & ~dominated;
        if (undominated == 0) {
            if (count != target_) return false;
            found_.push_back(chosen);
            return !collect_all_;
        }
        if (count >= target_ || pos >= n_) return false;

        Mask undecided = all_ & ~(bit(pos) - 1);
        for (Mask rest = undominated; rest != 0; rest &= rest - 1)
            if ((cover_[detail::lowest(rest)] & undecided) == 0) return false;
        if (count + more_needed(undominated, undecided) > target_) return false;

        if (search_index_order(pos + 1, dominated | cover_[pos], chosen | bit(pos), count + 1)) return true;
        return search_index_order(pos + 1, dominated, chosen, count);
    }

    std::size_t n_;
    Mask all_;
    std::vector<Mask> cover_;
    detail::NodeBudget& budget_;
    std::size_t best_ = 0;
    std::size_t target_ = 0;
    bool collect_all_ = false;
    std::vector<Mask> found_;
};

void require_dominatable(const Graph& g, bool total) {
    if (total && g.order() > 0 && g.min_degree() == 0)
        throw PreconditionError("total domination is undefined for graphs with isolated vertices");
}

bool dominates(const Graph& g, const VertexSet& s, bool total) {
    if (s.universe() != g.order()) throw std::invalid_argument("vertex set does not match graph order");
    for (Vertex v = 0; v < g.order(); ++v)
        if (!(g.neighbors(v).intersection_size(s) > 0 || (!total && s.contains(v)))) return false;
    return true;
}

} // namespace

bool is_dominating(const Graph& g, const VertexSet& s) { return dominates(g, s, false); }

bool is_total_dominating(const Graph& g, const VertexSet& s) { return dominates(g, s, true); }

OptResult min_dominating(const Graph& g, bool total, SearchLimits limits) {
    require_dominatable(g, total);
    const auto n = g.order();
    if (n == 0) return {0, VertexSet(0), 0, Method::branch_and_bound};
    detail::require_solver_order(g);

    detail::NodeBudget budget(limits);
    DominationSearch search(g, total, budget);
    auto value = search.minimum();
    auto witness = search.first_of_size(value);
    return {value, VertexSet::from_mask(n, witness), budget.nodes(), Method::branch_and_bound};
}

namespace detail {

std::vector<VertexSet> enumerate_packings(const Graph& g, std::size_t k, bool total);

std::vector<VertexSet> enumerate_dominating_sets(const Graph& g, bool total) {
    require_dominatable(g, total);
    const auto n = g.order();
    if (n == 0) return {VertexSet(0)};
    NodeBudget budget({});
    DominationSearch search(g, total, budget);
    auto value = search.minimum();
    std::vector<VertexSet> out;
    for (auto m : search.all_of_size(value)) out.push_back(VertexSet::from_mask(n, m));
    return out;
}

} // namespace detail

std::vector<VertexSet> enumerate_optimal_sets(const Graph& g, Invariant inv, std::size_t k, std::size_t cap) {
    if (g.order() > cap || g.order() > max_enumeration_order)
        throw CapExceeded("graph order exceeds the enumeration cap");
    std::vector<VertexSet> sets;
    switch (inv) {
    case Invariant::limited_packing:
        detail::require_positive_k(k);
        sets = detail::enumerate_packings(g, k, false);
        break;
    case Invariant::total_limited_packing:
        detail::require_positive_k(k);
        sets = detail::enumerate_packings(g, k, true);
        break;
    case Invariant::domination: sets = detail::enumerate_dominating_sets(g, false); break;
    case Invariant::total_domination: sets = detail::enumerate_dominating_sets(g, true); break;
    case Invariant::packing_partition:
        throw std::invalid_argument("optimal-set enumeration is defined for set invariants only");
    }
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    return sets;
}

} // namespace limpack
