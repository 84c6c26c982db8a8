#include "limpack/partition.hpp"

#include <algorithm>

#include "search_common.hpp"

namespace limpack {

using detail::bit;
using detail::Mask;
using detail::popcount;

namespace {

Partition normalized(std::size_t n, const std::vector<Mask>& classes) {
    Partition p;
    for (auto c : classes)
        if (c != 0) p.classes.push_back(VertexSet::from_mask(n, c));
    std::sort(p.classes.begin(), p.classes.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.members().front() < b.members().front(); });
    return p;
}

class PartitionSearch {
public:
    PartitionSearch(const Graph& g, std::size_t k, detail::NodeBudget& budget)
        : n_(g.order()), k_(static_cast<int>(k)), nb_(detail::neighborhood_masks(g, true)),
          order_(detail::degree_order(g)), budget_(budget) {}

    /// v may join class `c` iff no closed neighborhood containing v is already full in c.
    [[nodiscard]] bool fits(std::size_t v, Mask c) const {
        for (Mask hit = nb_[v]; hit != 0; hit &= hit - 1)
            if (popcount(nb_[detail::lowest(hit)] & c) >= k_) return false;
        return true;
    }

    std::vector<Mask> greedy() const {
        std::vector<Mask> classes;
        for (auto v : order_) {
            auto slot = std::find_if(classes.begin(), classes.end(), [&](Mask c) { return fits(v, c); });
            if (slot == classes.end())
                classes.push_back(bit(v));
            else
                *slot |= bit(v);
        }
        return classes;
    }

    std::vector<Mask> solve(std::vector<Mask> incumbent, std::size_t lower_bound) {
        best_ = incumbent.size();
        best_classes_ = std::move(incumbent);
        lower_bound_ = lower_bound;
        classes_.assign(n_, 0);
        if (best_ > lower_bound_) search(0, 0, detail::all_vertices(n_));
        return best_classes_;
    }

private:
    /// Each closed neighborhood needs room for its unassigned vertices.
    [[nodiscard]] std::size_t classes_still_needed(std::size_t used, Mask unassigned) const {
        std::size_t extra = 0;
        for (std::size_t w = 0; w < n_; ++w) {
            int waiting = popcount(nb_[w] & unassigned);
            if (waiting == 0) continue;
            int room = 0;
            for (std::size_t c = 0; c < used; ++c) room += k_ - popcount(nb_[w] & classes_[c]);
            if (waiting > room) {
                auto over = static_cast<std::size_t>(waiting - room);
                extra = std::max(extra, (over + static_cast<std::size_t>(k_) - 1) / static_cast<std::size_t>(k_));
            }
        }
        return extra;
    }

    void search(std::size_t pos, std::size_t used, Mask unassigned) {
        if (done_) return;
        budget_.tick();
        if (used >= best_) return;
        if (pos == n_) {
            best_ = used;
            best_classes_.assign(classes_.begin(), classes_.begin() + static_cast<std::ptrdiff_t>(used));
            done_ = best_ <= lower_bound_;
            return;
        }
        if (used + classes_still_needed(used, unassigned) >= best_) return;

        auto v = order_[pos];
        Mask rest = unassigned & ~bit(v);
        for (std::size_t c = 0; c < used && !done_; ++c) {
            if (!fits(v, classes_[c])) continue;
            classes_[c] |= bit(v);
            search(pos + 1, used, rest);
            classes_[c] &= ~bit(v);
        }
        // A new class is always labeled `used`, so permuted labelings are never revisited.
        if (!done_ && used + 1 < best_) {
            classes_[used] = bit(v);
            search(pos + 1, used + 1, rest);
            classes_[used] = 0;
        }
    }

    std::size_t n_;
    int k_;
    std::vector<Mask> nb_;
    std::vector<std::size_t> order_;
    detail::NodeBudget& budget_;
    std::vector<Mask> classes_;
    std::vector<Mask> best_classes_;
    std::size_t best_ = 0;
    std::size_t lower_bound_ = 0;
    bool done_ = false;
};

} // namespace

bool is_klp_partition(const Graph& g, const Partition& p, std::size_t k) {
    detail::require_positive_k(k);
    VertexSet seen(g.order());
    std::size_t total = 0;
    for (const auto& c : p.classes) {
        if (c.universe() != g.order()) throw MalformedPartition("class universe does not match graph order");
        if (c.empty()) throw MalformedPartition("empty class");
        if (seen.intersection_size(c) != 0) throw MalformedPartition("classes overlap");
        seen |= c;
        total += c.size();
    }
    if (total != g.order()) throw MalformedPartition("classes do not cover every vertex");
    return std::all_of(p.classes.begin(), p.classes.end(),
                       [&](const VertexSet& c) { return is_k_limited_packing(g, c, k); });
}

std::pair<std::size_t, Partition> greedy_upper_bound(const Graph& g, std::size_t k) {
    detail::require_positive_k(k);
    detail::require_solver_order(g);
    detail::NodeBudget budget({});
    auto classes = PartitionSearch(g, k, budget).greedy();
    return {classes.size(), normalized(g.order(), classes)};
}

PartitionResult chi_times_k(const Graph& g, std::size_t k, SearchLimits limits) {
    detail::require_positive_k(k);
    const auto n = g.order();
    if (n == 0) return {0, Partition{}, 0, Method::branch_and_bound};
    if (g.max_degree() + 1 <= k) return {1, Partition{{VertexSet::full(n)}}, 0, Method::branch_and_bound};
    detail::require_solver_order(g);

    detail::NodeBudget budget(limits);
    PartitionSearch search(g, k, budget);
    // Some closed neighborhood has Δ+1 vertices and each class holds at most k of them.
    const auto lower = (g.max_degree() + 1 + k - 1) / k;
    auto classes = search.solve(search.greedy(), lower);
    return {classes.size(), normalized(n, classes), budget.nodes(), Method::branch_and_bound};
}

} // namespace limpack
