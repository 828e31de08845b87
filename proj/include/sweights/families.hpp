#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <set>
#include <utility>
#include <vector>

#include "sweights/lpb.hpp"
#include "sweights/poset.hpp"
#include "sweights/weight_table.hpp"

namespace sweights {

struct CoveringFamily {
    int n = 0;
    std::vector<std::uint32_t> members;  // nonempty subsets of [n], as bitmasks

    static CoveringFamily from_lists(int n, const std::vector<std::vector<int>>& lists) {
        CoveringFamily f{n, {}};
        for (const auto& lst : lists) {
            std::uint32_t m = 0;
            for (int i : lst) {
                if (i < 1 || i > n) throw DomainError("covering family index out of range");
                m |= 1u << (i - 1);
            }
            if (m == 0) throw DomainError("covering family members must be nonempty");
            f.members.push_back(m);
        }
        f.check_covers();
        return f;
    }

    void check_covers() const {
        std::uint32_t all = n == 0 ? 0 : (1u << n) - 1;
        std::uint32_t got = 0;
        for (std::uint32_t m : members) got |= m;
        if (got != all) throw DomainError("family does not cover the coordinate set");
    }
};

struct Digraph {
    int n = 0;
    std::vector<std::uint32_t> out;  // out[v] = heads of arcs v -> w (0-based), no self-loops

    static Digraph from_arcs(int n, const std::vector<std::pair<int, int>>& arcs) {
        Digraph g{n, std::vector<std::uint32_t>(n, 0)};
        for (auto [a, b] : arcs) {
            if (a < 1 || a > n || b < 1 || b > n) throw DomainError("digraph arc out of range");
            if (a != b) g.out[a - 1] |= 1u << (b - 1);
        }
        return g;
    }

    // reach[v] = vertices reachable from v along arcs (excluding v unless cyclic).
    std::vector<std::uint32_t> reachability() const {
        std::vector<std::uint32_t> reach = out;
        for (int k = 0; k < n; ++k)
            for (int v = 0; v < n; ++v)
                if (reach[v] >> k & 1u) reach[v] |= reach[k];
        return reach;
    }
};

inline SWeightTable hamming_weight(int n, int q) {
    const Space& sp = get_space(q, n);
    std::vector<int> w(sp.size());
    for (int x = 0; x < sp.size(); ++x) w[x] = sp.hamming(x);
    return SWeightTable{q, n, std::move(w)};
}

inline SWeightTable poset_weight(const Poset& p, int q) {
    const Space& sp = get_space(q, p.m());
    std::vector<int> w(sp.size());
    for (int x = 0; x < sp.size(); ++x) w[x] = __builtin_popcount(p.ideal(sp.support_mask(x)));
    return SWeightTable{q, p.m(), std::move(w)};
}

// pi maps coordinates (0-based) onto blocks (0-based); must be surjective.
inline SWeightTable poset_block_weight(const Poset& p, const std::vector<int>& pi, int q) {
    LpbStructure s = make_lpb(p, pi, std::vector<int>(p.m(), 1), q);
    return lpb_weight_table(s);
}

// Exact minimum cover of the support by family members, via subset DP.
inline SWeightTable combinatorial_weight(const CoveringFamily& f, int q) {
    if (f.members.size() > 20) throw CapExceeded("covering family capped at 20 members");
    f.check_covers();
    const Space& sp = get_space(q, f.n);
    std::uint32_t all = f.n == 0 ? 0 : (1u << f.n) - 1;
    std::vector<int> cover(all + 1, 1 << 20);
    cover[0] = 0;
    for (std::uint32_t s = 1; s <= all; ++s)
        for (std::uint32_t m : f.members)
            if ((s & m) != 0) cover[s] = std::min(cover[s], cover[s & ~m] + 1);
    std::vector<int> w(sp.size());
    for (int x = 0; x < sp.size(); ++x) w[x] = cover[sp.support_mask(x)];
    return SWeightTable{q, f.n, std::move(w)};
}

// wt_D(x) = size of the closure supp(x) plus everything that reaches it.
inline SWeightTable digraph_weight(const Digraph& g, int q) {
    const Space& sp = get_space(q, g.n);
    std::vector<std::uint32_t> reach = g.reachability();
    std::vector<int> closure(1u << g.n, 0);
    for (std::uint32_t mask = 0; mask < (1u << g.n); ++mask) {
        std::uint32_t cl = mask;
        for (int v = 0; v < g.n; ++v)
            if (reach[v] & mask) cl |= 1u << v;
        closure[mask] = __builtin_popcount(cl);
    }
    std::vector<int> w(sp.size());
    for (int x = 0; x < sp.size(); ++x) w[x] = closure[sp.support_mask(x)];
    return SWeightTable{q, g.n, std::move(w)};
}

// Condensation: each strongly connected component becomes one block-sized,
// component-labeled poset element, ordered by reachability.
inline LpbStructure digraph_to_lpb(const Digraph& g, int q) {
    std::vector<std::uint32_t> reach = g.reachability();
    std::vector<int> comp(g.n, -1);
    std::vector<std::uint32_t> comp_mask;
    for (int v = 0; v < g.n; ++v) {
        if (comp[v] >= 0) continue;
        int id = static_cast<int>(comp_mask.size());
        std::uint32_t mask = 1u << v;
        for (int u = v + 1; u < g.n; ++u)
            if ((reach[v] >> u & 1u) && (reach[u] >> v & 1u)) mask |= 1u << u;
        for (int u = v; u < g.n; ++u)
            if (mask >> u & 1u) comp[u] = id;
        comp_mask.push_back(mask);
    }
    int m = static_cast<int>(comp_mask.size());
    Poset p(m);
    std::vector<std::pair<int, int>> rel;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            if (a == b) continue;
            int va = __builtin_ctz(comp_mask[a]), vb = __builtin_ctz(comp_mask[b]);
            if (reach[va] >> vb & 1u) rel.push_back({a + 1, b + 1});  // a reaches b: a lies below b
        }
    Poset poset = Poset::from_relations(m, rel);
    std::vector<int> labels(m);
    for (int i = 0; i < m; ++i) labels[i] = __builtin_popcount(comp_mask[i]);
    return make_lpb(poset, comp, labels, q);
}

struct FamilyFlags {
    bool hamming = false, poset = false, poset_block = false, combinatorial = false, digraph = false;
};

inline std::vector<CoveringFamily> enumerate_covering_families(int n) {
    if (n > 4) throw CapExceeded("covering family enumeration capped at n <= 4");
    std::uint32_t all = n == 0 ? 0 : (1u << n) - 1;
    std::vector<std::uint32_t> subsets;
    for (std::uint32_t m = 1; m <= all; ++m) subsets.push_back(m);
    std::vector<CoveringFamily> out;
    for (std::uint64_t pick = 1; pick < (1ULL << subsets.size()); ++pick) {
        std::uint32_t got = 0;
        CoveringFamily f{n, {}};
        for (std::size_t t = 0; t < subsets.size(); ++t)
            if (pick >> t & 1u) {
                f.members.push_back(subsets[t]);
                got |= subsets[t];
            }
        if (got == all) out.push_back(std::move(f));
    }
    return out;
}

inline std::vector<Digraph> enumerate_digraphs(int n) {
    if (n > 4) throw CapExceeded("digraph enumeration capped at n <= 4");
    std::vector<std::pair<int, int>> arcs;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b) arcs.push_back({a, b});
    std::vector<Digraph> out;
    for (std::uint64_t bits = 0; bits < (1ULL << arcs.size()); ++bits) {
        Digraph g{n, std::vector<std::uint32_t>(n, 0)};
        for (std::size_t t = 0; t < arcs.size(); ++t)
            if (bits >> t & 1u) g.out[arcs[t].first] |= 1u << arcs[t].second;
        out.push_back(std::move(g));
    }
    return out;
}

namespace detail {

// Fingerprint sets of every weight a family can realize at (q, n); memoized
// so repeated classification is a set lookup.
inline const std::map<std::string, std::set<std::vector<int>>>& family_fingerprints(int q, int n) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::map<std::string, std::set<std::vector<int>>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({q, n});
    if (it != cache.end()) return it->second;

    std::map<std::string, std::set<std::vector<int>>> fps;
    auto add = [&](const char* family, const SWeightTable& wt) { fps[family].insert(ordering_of(wt).ranks); };
    add("hamming", hamming_weight(n, q));
    for (const Poset& p : enumerate_posets(n)) add("poset", poset_weight(p, q));
    for (int m = 1; m <= n; ++m) {
        std::vector<Poset> posets = enumerate_posets(m);
        std::vector<int> pi(n, 0);
        for (long long code = 0; code < [&] { long long t = 1; for (int i = 0; i < n; ++i) t *= m; return t; }(); ++code) {
            long long c = code;
            std::uint32_t seen = 0;
            for (int i = 0; i < n; ++i, c /= m) {
                pi[i] = static_cast<int>(c % m);
                seen |= 1u << pi[i];
            }
            if (seen != (m == 0 ? 0u : (1u << m) - 1)) continue;
            for (const Poset& p : posets) add("poset_block", poset_block_weight(p, pi, q));
        }
    }
    for (const CoveringFamily& f : enumerate_covering_families(n)) add("combinatorial", combinatorial_weight(f, q));
    for (const Digraph& g : enumerate_digraphs(n)) add("digraph", digraph_weight(g, q));
    return cache[{q, n}] = std::move(fps);
}

}  // namespace detail

// True per family iff some member is decoding-equivalent to wt. Exhaustive
// over the family parameter spaces, so only sensible at n <= 4.
inline FamilyFlags classify_criterion(const SWeightTable& wt) {
    if (wt.n > 4) throw CapExceeded("family classification capped at n <= 4");
    const auto& fps = detail::family_fingerprints(wt.q, wt.n);
    std::vector<int> fp = ordering_of(wt).ranks;
    auto has = [&](const char* family) {
        auto it = fps.find(family);
        return it != fps.end() && it->second.count(fp) > 0;
    };
    return FamilyFlags{has("hamming"), has("poset"), has("poset_block"), has("combinatorial"), has("digraph")};
}

}  // namespace sweights
