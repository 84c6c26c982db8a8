#include <bit>
#include <cstdint>
#include <vector>

#include "limpack/families.hpp"

namespace limpack {

namespace {

using Mask = std::uint64_t;

Mask bit(Vertex v) { return Mask{1} << v; }

/// Calls f(mask) for every r-subset of `items` in lexicographic order of the
/// chosen index lists; stops early when f returns true.
template <class F>
bool for_each_combination(const std::vector<Vertex>& items, std::size_t r, F&& f) {
    if (r > items.size()) return false;
    std::vector<std::size_t> idx(r);
    for (std::size_t i = 0; i < r; ++i) idx[i] = i;
    while (true) {
        Mask m = 0;
        for (auto i : idx) m |= bit(items[i]);
        if (f(m)) return true;
        std::size_t i = r;
        while (i > 0 && idx[i - 1] == items.size() - r + (i - 1)) --i;
        if (i == 0) return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::vector<Vertex> members_of(Mask m) {
    std::vector<Vertex> out;
    while (m != 0) {
        out.push_back(static_cast<Vertex>(std::countr_zero(m)));
        m &= m - 1;
    }
    return out;
}

struct OmegaSearch {
    std::size_t n;
    std::vector<Mask> adj;

    /// Max degree of G[s] <= 2 (components are paths or cycles).
    [[nodiscard]] bool paths_and_cycles(Mask s) const {
        for (Mask rest = s; rest != 0; rest &= rest - 1) {
            auto v = std::countr_zero(rest);
            if (std::popcount(adj[v] & s) > 2) return false;
        }
        return true;
    }

    [[nodiscard]] bool outside_ok(Mask outside, Mask b) const {
        for (Mask rest = outside; rest != 0; rest &= rest - 1) {
            auto v = std::countr_zero(rest);
            if (std::popcount(adj[v] & b) > 2) return false;
        }
        return true;
    }

    std::optional<OmegaCertificate> try_a(Vertex w, Mask a) const {
        const Mask all = n == 64 ? ~Mask{0} : (bit(static_cast<Vertex>(n)) - 1);
        const Mask rest = all & ~a;
        if (!paths_and_cycles(rest)) return std::nullopt;
        std::optional<OmegaCertificate> found;
        for_each_combination(members_of(a), 3, [&](Mask t) {
            Mask b = rest | t;
            if (!paths_and_cycles(b) || !outside_ok(a & ~t, b)) return false;
            found = OmegaCertificate{VertexSet::from_mask(n, a), VertexSet::from_mask(n, b), w};
            return true;
        });
        return found;
    }

    std::optional<OmegaCertificate> run() const {
        for (Vertex w = 0; w < n; ++w) {
            auto arms = members_of(adj[w]);
            if (arms.size() < 2) continue;
            for (std::size_t size = arms.size(); size >= 2; --size) {
                std::optional<OmegaCertificate> found;
                for_each_combination(arms, size, [&](Mask chosen) {
                    found = try_a(w, chosen | bit(w));
                    return found.has_value();
                });
                if (found) return found;
            }
        }
        return std::nullopt;
    }
};

} // namespace

OmegaResult omega_membership(const Graph& g, std::size_t cap) {
    if (g.order() > cap || g.order() > 64) return {OmegaResult::Status::cap_exceeded, std::nullopt};
    OmegaSearch search{g.order(), std::vector<Mask>(g.order())};
    for (Vertex v = 0; v < g.order(); ++v) search.adj[v] = g.neighbors(v).low_word();
    if (auto cert = search.run()) return {OmegaResult::Status::member, std::move(cert)};
    return {OmegaResult::Status::not_member, std::nullopt};
}

bool is_omega_certificate(const Graph& g, const OmegaCertificate& cert) {
    const auto n = g.order();
    if (cert.a.universe() != n || cert.b.universe() != n) return false;
    if ((cert.a | cert.b).size() != n) return false;
    if ((cert.a & cert.b).size() != 3) return false;

    if (!cert.a.contains(cert.star_center)) return false;
    VertexSet others = cert.a;
    others.erase(cert.star_center);
    if (!others.is_subset_of(g.neighbors(cert.star_center))) return false;

    const Graph gb = g.induced(cert.b);
    for (Vertex v = 0; v < gb.order(); ++v)
        if (gb.degree(v) > 2) return false;

    for (Vertex v = 0; v < n; ++v)
        if (!cert.b.contains(v) && g.neighbors(v).intersection_size(cert.b) > 2) return false;
    return true;
}

} // namespace limpack
