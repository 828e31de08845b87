#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "sweights/field.hpp"

namespace sweights {

// Total weight map on F_q^n, indexed by packed vector index.
struct SWeightTable {
    int q = 2, n = 0;
    std::vector<int> w;

    const Space& space() const { return get_space(q, n); }
    int at(const FqVector& v) const { return w[space().index_of(v)]; }
    int max_weight() const { return w.empty() ? 0 : *std::max_element(w.begin(), w.end()); }
    bool operator==(const SWeightTable& o) const { return q == o.q && n == o.n && w == o.w; }
};

inline SWeightTable make_table(int q, int n, std::vector<int> w) {
    const Space& sp = get_space(q, n);
    if (static_cast<int>(w.size()) != sp.size()) throw DomainError("weight table must cover all q^n vectors");
    return SWeightTable{q, n, std::move(w)};
}

struct SWeightReport {
    enum class Kind { none, nonzero_at_zero, zero_at_nonzero, negative, monotonicity };
    bool ok = true;
    Kind kind = Kind::none;
    int u = 0, v = 0;  // vector indices of the first offending pair (lex order)
    std::string message;
};

// Checks both axioms: weight zero exactly at the zero vector, and
// monotonicity under support inclusion (which forces equal weights on
// equal supports). Reports the first violation in entry-lex order.
inline SWeightReport validate_sweight(const SWeightTable& wt) {
    const Space& sp = wt.space();
    SWeightReport rep;
    if (wt.w[0] != 0) {
        rep = {false, SWeightReport::Kind::nonzero_at_zero, 0, 0, "wt(0) must be 0"};
        return rep;
    }
    sp.for_each_lex([&](int x) {
        if (!rep.ok || x == 0 || wt.w[x] > 0) return;
        if (wt.w[x] < 0)
            rep = {false, SWeightReport::Kind::negative, x, x, "negative weight"};
        else
            rep = {false, SWeightReport::Kind::zero_at_nonzero, x, x, "wt vanishes on a nonzero vector"};
    });
    if (!rep.ok) return rep;
    bool mono_ok = true;
    for (int x = 0; x < sp.size() && mono_ok; ++x) {
        // Cover steps: clearing one nonzero coordinate may not increase weight.
        for (int i = 0; i < sp.n(); ++i) {
            int d = sp.digit(x, i);
            if (d == 0) continue;
            int y = x - d * sp.pow_q(i);
            if (wt.w[y] > wt.w[x]) { mono_ok = false; break; }
        }
        // Same support forces the same weight (subset inclusion both ways).
        if (mono_ok && sp.q() > 2 && wt.w[sp.indicator(sp.support_mask(x))] != wt.w[x]) mono_ok = false;
    }
    if (!mono_ok) {
        // Locate the lex-first violating pair for the report.
        bool found = false;
        sp.for_each_lex([&](int u) {
            if (found) return;
            sp.for_each_lex([&](int v) {
                if (found) return;
                std::uint32_t su = sp.support_mask(u), sv = sp.support_mask(v);
                if ((su & sv) == su && wt.w[u] > wt.w[v]) {
                    rep = {false, SWeightReport::Kind::monotonicity, u, v,
                           "support monotonicity violated"};
                    found = true;
                }
            });
        });
    }
    return rep;
}

// Ranked partition of the vectors by weight; the decoding criterion itself.
struct WeightOrdering {
    int q = 2, n = 0;
    std::vector<int> ranks;  // dense, rank 0 = the zero vector alone for valid tables
    int levels = 0;

    bool operator==(const WeightOrdering& o) const { return q == o.q && n == o.n && ranks == o.ranks; }
    bool operator<(const WeightOrdering& o) const { return ranks < o.ranks; }
};

inline WeightOrdering ordering_of(const SWeightTable& wt) {
    std::vector<int> distinct = wt.w;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    WeightOrdering ord{wt.q, wt.n, std::vector<int>(wt.w.size()), static_cast<int>(distinct.size())};
    for (std::size_t i = 0; i < wt.w.size(); ++i)
        ord.ranks[i] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), wt.w[i]) - distinct.begin());
    return ord;
}

inline std::vector<std::vector<FqVector>> ordering_levels(const WeightOrdering& ord) {
    const Space& sp = get_space(ord.q, ord.n);
    std::vector<std::vector<FqVector>> levels(ord.levels);
    sp.for_each_lex([&](int x) { levels[ord.ranks[x]].push_back(sp.to_vector(x)); });
    return levels;
}

inline bool are_equivalent(const SWeightTable& a, const SWeightTable& b) {
    if (a.q != b.q || a.n != b.n) throw DomainError("equivalence requires matching q and n");
    return ordering_of(a) == ordering_of(b);
}

// d'(u,v) = 0 on the diagonal, wt(u-v) + max wt elsewhere; the shift makes the
// triangle inequality hold outright while preserving the decoding order.
struct RescaledMetric {
    SWeightTable wt;
    int shift = 0;

    int operator()(int u, int v) const {
        if (u == v) return 0;
        return wt.w[wt.space().sub(u, v)] + shift;
    }
    int operator()(const FqVector& u, const FqVector& v) const {
        return (*this)(wt.space().index_of(u), wt.space().index_of(v));
    }
};

inline RescaledMetric rescale_to_metric(const SWeightTable& wt) {
    return RescaledMetric{wt, wt.max_weight()};
}

// Support-determined random S-weight: each support gets the max over its
// one-smaller supports plus a small random increment (forced positive on atoms).
inline SWeightTable random_valid_table(int q, int n, std::mt19937& rng) {
    const Space& sp = get_space(q, n);
    std::uniform_int_distribution<int> bump(0, 2);
    std::vector<int> by_support(1u << n, 0);
    std::vector<std::uint32_t> masks(1u << n);
    for (std::uint32_t m = 0; m < masks.size(); ++m) masks[m] = m;
    std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
        int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    for (std::uint32_t m : masks) {
        if (m == 0) continue;
        int base = 0;
        for (int i = 0; i < n; ++i)
            if (m >> i & 1u) base = std::max(base, by_support[m & ~(1u << i)]);
        int inc = bump(rng);
        if (__builtin_popcount(m) == 1 && base + inc == 0) inc = 1 + bump(rng);
        by_support[m] = base + inc;
    }
    std::vector<int> w(sp.size());
    for (int x = 0; x < sp.size(); ++x) w[x] = by_support[sp.support_mask(x)];
    return SWeightTable{q, n, std::move(w)};
}

}  // namespace sweights
