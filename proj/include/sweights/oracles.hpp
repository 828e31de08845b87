#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "sweights/weight_table.hpp"

namespace sweights {

// Every decoding criterion at (n, q) once: the support-monotone weak orders,
// optionally up to coordinate permutation.
struct CriterionCatalog {
    int n = 0, q = 2;
    bool quotiented = false;
    std::vector<WeightOrdering> classes;
    std::map<std::vector<int>, int> index;  // fingerprint -> class id (quotient-canonical if quotiented)

    std::size_t size() const { return classes.size(); }
};

namespace detail {

inline std::vector<std::vector<int>> coordinate_permutations(int n) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::vector<std::vector<int>> out;
    do out.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// Fingerprint of the ordering after permuting coordinates by perm.
inline std::vector<int> permuted_fingerprint(const Space& sp, const std::vector<int>& ranks,
                                             const std::vector<int>& perm) {
    std::vector<int> out(ranks.size());
    for (int x = 0; x < sp.size(); ++x) {
        int y = 0;
        for (int i = 0; i < sp.n(); ++i) y += sp.digit(x, perm[i]) * sp.pow_q(i);
        out[x] = ranks[y];
    }
    return out;
}

inline std::vector<int> quotient_fingerprint(const Space& sp, const std::vector<int>& ranks) {
    std::vector<int> best = ranks;
    for (const std::vector<int>& perm : coordinate_permutations(sp.n())) {
        std::vector<int> fp = permuted_fingerprint(sp, ranks, perm);
        if (fp < best) best = fp;
    }
    return best;
}

}  // namespace detail

// Enumerates chains of down-sets of the nonzero-support lattice; each chain
// is one level partition, i.e. one support-monotone weak order.
inline CriterionCatalog enumerate_criteria(int n, int q, bool up_to_coordinate_permutation,
                                           const Caps& caps = {}) {
    if (n > 3) throw CapExceeded("criterion enumeration capped at n <= 3");
    const Space& sp = get_space(q, n);
    int supports = (1 << n) - 1;  // nonzero supports, shifted down by one
    std::vector<std::uint32_t> preds(supports + 1, 0);
    for (int s = 1; s <= supports; ++s)
        for (int t = 1; t < s; ++t)
            if ((t & s) == t) preds[s] |= 1u << (t - 1);

    CriterionCatalog cat{n, q, up_to_coordinate_permutation, {}, {}};
    std::vector<int> level_of(supports + 1, 0);

    std::function<void(std::uint32_t, int)> extend = [&](std::uint32_t placed, int next_level) {
        if (placed == (supports == 0 ? 0u : ((1u << supports) - 1))) {
            std::vector<int> ranks(sp.size());
            for (int x = 0; x < sp.size(); ++x) {
                std::uint32_t m = sp.support_mask(x);
                ranks[x] = m == 0 ? 0 : level_of[m];
            }
            std::vector<int> fp = up_to_coordinate_permutation ? detail::quotient_fingerprint(sp, ranks) : ranks;
            if (cat.index.find(fp) == cat.index.end()) {
                int id = static_cast<int>(cat.classes.size());
                cat.index.emplace(std::move(fp), id);
                int levels = 0;
                for (int v : ranks) levels = std::max(levels, v + 1);
                cat.classes.push_back(WeightOrdering{q, n, ranks, levels});
            }
            return;
        }
        std::uint32_t remaining = ~placed & ((1u << supports) - 1);
        // pick the next level: any nonempty subset whose predecessors are placed
        for (std::uint32_t pick = remaining; pick != 0; pick = (pick - 1) & remaining) {
            bool down_closed = true;
            for (int s = 1; s <= supports && down_closed; ++s)
                if (pick >> (s - 1) & 1u)
                    if ((preds[s] & ~(placed | pick)) != 0) down_closed = false;
            if (down_closed) {
                for (int s = 1; s <= supports; ++s)
                    if (pick >> (s - 1) & 1u) level_of[s] = next_level;
                extend(placed | pick, next_level + 1);
            }
        }
    };
    extend(0, 1);

    // Deterministic order: sort classes by fingerprint, rebuild the index.
    std::sort(cat.classes.begin(), cat.classes.end(),
              [](const WeightOrdering& a, const WeightOrdering& b) { return a.ranks < b.ranks; });
    cat.index.clear();
    for (std::size_t i = 0; i < cat.classes.size(); ++i) {
        std::vector<int> fp = up_to_coordinate_permutation
                                  ? detail::quotient_fingerprint(sp, cat.classes[i].ranks)
                                  : cat.classes[i].ranks;
        cat.index.emplace(std::move(fp), static_cast<int>(i));
    }
    return cat;
}

// The canonical table of a class: weight = level index (already standard form).
inline SWeightTable representative_weight(const WeightOrdering& ord) {
    return SWeightTable{ord.q, ord.n, ord.ranks};
}

inline std::optional<int> classify_into_catalog(const CriterionCatalog& cat, const SWeightTable& wt) {
    if (wt.q != cat.q || wt.n != cat.n) throw DomainError("table does not match the catalog parameters");
    std::vector<int> fp = ordering_of(wt).ranks;
    if (cat.quotiented) fp = detail::quotient_fingerprint(wt.space(), fp);
    auto it = cat.index.find(fp);
    if (it == cat.index.end()) return std::nullopt;
    return it->second;
}

}  // namespace sweights
