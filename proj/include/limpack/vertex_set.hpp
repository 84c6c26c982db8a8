#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace limpack {

using Vertex = std::uint32_t;

/// Subset of {0, .., universe-1}, stored as a multi-word bitset.
///
/// Ordering (`operator<`) is lexicographic on the ascending member lists, so
/// sorting a list of sets yields the order in which an include-first search over
/// vertex indices would discover them.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(std::size_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}

    VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
        : VertexSet(universe) {
        for (Vertex v : members) insert(v);
    }

    VertexSet(std::size_t universe, std::span<const Vertex> members)
        : VertexSet(universe) {
        for (Vertex v : members) insert(v);
    }

    static VertexSet full(std::size_t universe) {
        VertexSet s(universe);
        for (std::size_t v = 0; v < universe; ++v) s.insert(static_cast<Vertex>(v));
        return s;
    }

    /// Builds a set from the low `universe` bits of `mask` (universe <= 64).
    static VertexSet from_mask(std::size_t universe, std::uint64_t mask) {
        VertexSet s(universe);
        if (!s.words_.empty()) s.words_[0] = mask;
        return s;
    }

    [[nodiscard]] std::size_t universe() const { return universe_; }

    [[nodiscard]] bool contains(Vertex v) const {
        return v < universe_ && ((words_[v / 64] >> (v % 64)) & 1U) != 0;
    }

    void insert(Vertex v) {
        check(v);
        words_[v / 64] |= std::uint64_t{1} << (v % 64);
    }

    void erase(Vertex v) {
        check(v);
        words_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
    }

    [[nodiscard]] std::size_t size() const {
        std::size_t total = 0;
        for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
        return total;
    }

    [[nodiscard]] bool empty() const {
        return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
    }

    [[nodiscard]] std::vector<Vertex> members() const {
        std::vector<Vertex> out;
        out.reserve(size());
        for_each([&](Vertex v) { out.push_back(v); });
        return out;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            auto w = words_[i];
            while (w != 0) {
                auto bit = std::countr_zero(w);
                f(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(bit)));
                w &= w - 1;
            }
        }
    }

    /// Low 64 bits; the solvers work on graphs of order <= 64.
    [[nodiscard]] std::uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }

    [[nodiscard]] std::size_t intersection_size(const VertexSet& other) const {
        same_universe(other);
        std::size_t total = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            total += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
        return total;
    }

    [[nodiscard]] bool is_subset_of(const VertexSet& other) const {
        same_universe(other);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((words_[i] & ~other.words_[i]) != 0) return false;
        return true;
    }

    VertexSet& operator&=(const VertexSet& o) {
        same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.universe_ == b.universe_ && a.words_ == b.words_;
    }

    friend bool operator<(const VertexSet& a, const VertexSet& b) {
        auto ma = a.members();
        auto mb = b.members();
        return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
    }

private:
    void check(Vertex v) const {
        if (v >= universe_) throw std::out_of_range("vertex index out of range");
    }
    void same_universe(const VertexSet& o) const {
        if (o.universe_ != universe_) throw std::invalid_argument("vertex sets over different universes");
    }

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace limpack
