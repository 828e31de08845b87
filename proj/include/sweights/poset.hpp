#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "sweights/errors.hpp"

namespace sweights {

// Partial order on [m], stored transitively closed for O(1) comparability.
class Poset {
public:
    explicit Poset(int m) : m_(m), leq_(static_cast<std::size_t>(m) * m, false) {
        if (m < 0 || m > 20) throw DomainError("poset ground set out of range");
        for (int i = 0; i < m; ++i) set(i, i);
    }

    // Builds from (1-based) cover or arbitrary relation pairs and closes them.
    static Poset from_relations(int m, const std::vector<std::pair<int, int>>& relations) {
        Poset p(m);
        for (auto [a, b] : relations) {
            if (a < 1 || a > m || b < 1 || b > m) throw DomainError("poset relation out of range");
            p.set(a - 1, b - 1);
        }
        p.close_transitively();
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (i != j && p.leq(i, j) && p.leq(j, i)) throw DomainError("poset relation is not antisymmetric");
        return p;
    }

    int m() const { return m_; }
    bool leq(int a, int b) const { return leq_[static_cast<std::size_t>(a) * m_ + b]; }

    // Smallest ideal containing the elements of `mask` (0-based bitmask).
    std::uint32_t ideal(std::uint32_t mask) const {
        std::uint32_t out = 0;
        for (int b = 0; b < m_; ++b)
            if (mask >> b & 1u)
                for (int a = 0; a < m_; ++a)
                    if (leq(a, b)) out |= 1u << a;
        return out;
    }

    std::uint32_t maximal_elements(std::uint32_t mask) const {
        std::uint32_t out = 0;
        for (int a = 0; a < m_; ++a) {
            if (!(mask >> a & 1u)) continue;
            bool maximal = true;
            for (int b = 0; b < m_ && maximal; ++b)
                if (b != a && (mask >> b & 1u) && leq(a, b)) maximal = false;
            if (maximal) out |= 1u << a;
        }
        return out;
    }

    bool is_ideal(std::uint32_t mask) const { return ideal(mask) == mask; }

    Poset dual() const {
        Poset d(m_);
        for (int a = 0; a < m_; ++a)
            for (int b = 0; b < m_; ++b)
                if (leq(a, b)) d.set(b, a);
        return d;
    }

    // Covers of the closed relation (the Hasse diagram edges), 1-based.
    std::vector<std::pair<int, int>> cover_relations() const {
        std::vector<std::pair<int, int>> covers;
        for (int a = 0; a < m_; ++a)
            for (int b = 0; b < m_; ++b) {
                if (a == b || !leq(a, b)) continue;
                bool direct = true;
                for (int c = 0; c < m_ && direct; ++c)
                    if (c != a && c != b && leq(a, c) && leq(c, b)) direct = false;
                if (direct) covers.push_back({a + 1, b + 1});
            }
        return covers;
    }

    bool operator==(const Poset& o) const { return m_ == o.m_ && leq_ == o.leq_; }

private:
    void set(int a, int b) { leq_[static_cast<std::size_t>(a) * m_ + b] = true; }
    void close_transitively() {
        for (int k = 0; k < m_; ++k)
            for (int i = 0; i < m_; ++i)
                if (leq(i, k))
                    for (int j = 0; j < m_; ++j)
                        if (leq(k, j)) set(i, j);
    }

    int m_;
    std::vector<char> leq_;

    friend std::vector<Poset> enumerate_posets(int);
};

struct LevelPartition {
    std::vector<int> height;                // per element, 1-based heights
    std::vector<std::vector<int>> levels;   // levels[i] = elements (1-based) of height i+1
    int poset_height() const { return static_cast<int>(levels.size()); }
};

// h(a) = longest chain with a on top, by DP along the order.
inline LevelPartition heights_and_levels(const Poset& p) {
    int m = p.m();
    LevelPartition lp;
    lp.height.assign(m, 0);
    std::vector<int> order(m);
    for (int i = 0; i < m; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        std::uint32_t ia = p.ideal(1u << a), ib = p.ideal(1u << b);
        int ca = __builtin_popcount(ia), cb = __builtin_popcount(ib);
        return ca != cb ? ca < cb : a < b;
    });
    for (int a : order) {
        int h = 1;
        for (int b = 0; b < m; ++b)
            if (b != a && p.leq(b, a)) h = std::max(h, lp.height[b] + 1);
        lp.height[a] = h;
    }
    int hp = 0;
    for (int a = 0; a < m; ++a) hp = std::max(hp, lp.height[a]);
    lp.levels.assign(hp, {});
    for (int a = 0; a < m; ++a) lp.levels[lp.height[a] - 1].push_back(a + 1);
    return lp;
}

inline bool is_hierarchical(const Poset& p) {
    LevelPartition lp = heights_and_levels(p);
    for (std::size_t i = 0; i < lp.levels.size(); ++i)
        for (std::size_t j = i + 1; j < lp.levels.size(); ++j)
            for (int a : lp.levels[i])
                for (int b : lp.levels[j])
                    if (!p.leq(a - 1, b - 1)) return false;
    return true;
}

inline Poset dual_poset(const Poset& p) { return p.dual(); }

// All labeled partial orders on [m]: subsets of off-diagonal pairs that are
// antisymmetric and transitive.
inline std::vector<Poset> enumerate_posets(int m) {
    if (m > 5) throw CapExceeded("poset enumeration capped at m <= 5");
    std::vector<std::pair<int, int>> off;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (a != b) off.push_back({a, b});
    std::vector<Poset> out;
    for (std::uint64_t bits = 0; bits < (1ULL << off.size()); ++bits) {
        Poset p(m);
        for (std::size_t t = 0; t < off.size(); ++t)
            if (bits >> t & 1u) p.set(off[t].first, off[t].second);
        bool anti = true;
        for (int a = 0; a < m && anti; ++a)
            for (int b = a + 1; b < m && anti; ++b)
                if (p.leq(a, b) && p.leq(b, a)) anti = false;
        if (!anti) continue;
        bool closed = true;
        for (int a = 0; a < m && closed; ++a)
            for (int b = 0; b < m && closed; ++b)
                if (a != b && p.leq(a, b))
                    for (int c = 0; c < m; ++c)
                        if (c != b && p.leq(b, c) && !p.leq(a, c)) { closed = false; break; }
        if (closed) out.push_back(p);
    }
    return out;
}

}  // namespace sweights
