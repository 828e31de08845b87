#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sweights/families.hpp"
#include "sweights/oracles.hpp"
#include "sweights/weight_table.hpp"

namespace sweights {

// Materialized predicate on F_q^n; upward closed along support inclusion.
struct SupportCondition {
    int q = 2, n = 0;
    std::vector<char> truth;

    bool at(int idx) const { return truth[idx] != 0; }
};

// C(u) and supp(u) subset of supp(v) must give C(v); equal supports included,
// so the condition cannot split vectors sharing a support.
inline bool condition_respects_support(const SupportCondition& c) {
    const Space& sp = get_space(c.q, c.n);
    for (int x = 0; x < sp.size(); ++x) {
        if (!c.at(x)) continue;
        if (!c.at(sp.indicator(sp.support_mask(x)))) return false;
    }
    std::vector<char> by_mask(1u << c.n, 0);
    for (int x = 0; x < sp.size(); ++x)
        if (c.at(x)) by_mask[sp.support_mask(x)] = 1;
    for (std::uint32_t m = 0; m < (1u << c.n); ++m) {
        if (!by_mask[m]) continue;
        for (int i = 0; i < c.n; ++i)
            if (!(m >> i & 1u) && !by_mask[m | 1u << i]) return false;
    }
    // upward closure on masks must imply truth on every vector of the mask
    for (int x = 0; x < sp.size(); ++x)
        if (by_mask[sp.support_mask(x)] && !c.at(x)) return false;
    return true;
}

inline SupportCondition condition_hamming_ge(int q, int n, int k) {
    const Space& sp = get_space(q, n);
    SupportCondition c{q, n, std::vector<char>(sp.size(), 0)};
    for (int x = 0; x < sp.size(); ++x) c.truth[x] = sp.hamming(x) >= k;
    return c;
}

inline SupportCondition condition_weight_ge(const SWeightTable& wt, int k) {
    SupportCondition c{wt.q, wt.n, std::vector<char>(wt.w.size(), 0)};
    for (std::size_t x = 0; x < wt.w.size(); ++x) c.truth[x] = wt.w[x] >= k;
    return c;
}

inline SupportCondition condition_from_upset(int q, int n, const std::vector<std::uint32_t>& upset_masks) {
    const Space& sp = get_space(q, n);
    std::vector<char> in(1u << n, 0);
    for (std::uint32_t m : upset_masks) in[m] = 1;
    SupportCondition c{q, n, std::vector<char>(sp.size(), 0)};
    for (int x = 0; x < sp.size(); ++x) c.truth[x] = in[sp.support_mask(x)];
    if (!condition_respects_support(c)) throw DomainError("mask set is not upward closed");
    return c;
}

// All upward-closed support conditions at (q, n); small n only.
inline std::vector<SupportCondition> upward_closed_conditions(int q, int n) {
    if (n > 4) throw CapExceeded("condition enumeration capped at n <= 4");
    const Space& sp = get_space(q, n);
    std::vector<SupportCondition> out;
    for (std::uint32_t set = 0; set < (1u << (1 << n)); ++set) {
        bool closed = true;
        for (std::uint32_t m = 0; m < (1u << n) && closed; ++m) {
            if (!(set >> m & 1u)) continue;
            for (int i = 0; i < n; ++i)
                if (!(m >> i & 1u) && !(set >> (m | 1u << i) & 1u)) { closed = false; break; }
        }
        if (!closed) continue;
        SupportCondition c{q, n, std::vector<char>(sp.size(), 0)};
        for (int x = 0; x < sp.size(); ++x) c.truth[x] = (set >> sp.support_mask(x)) & 1u;
        out.push_back(std::move(c));
    }
    return out;
}

inline SWeightTable conditional_sum(const SWeightTable& a, const SWeightTable& b, const SupportCondition& c) {
    if (a.q != b.q || a.n != b.n || a.q != c.q || a.n != c.n)
        throw DomainError("conditional sum requires one common space");
    if (!condition_respects_support(c)) throw DomainError("condition does not respect support");
    SWeightTable out = a;
    for (std::size_t x = 0; x < out.w.size(); ++x)
        if (c.at(static_cast<int>(x))) out.w[x] = a.w[x] + b.w[x];
    return out;
}

// Gate on the first summand reaching k.
inline SWeightTable k_sum(const SWeightTable& a, const SWeightTable& b, int k) {
    if (a.q != b.q || a.n != b.n) throw DomainError("k-sum requires one common space");
    SWeightTable out = a;
    for (std::size_t x = 0; x < out.w.size(); ++x)
        if (a.w[x] >= k) out.w[x] = a.w[x] + b.w[x];
    return out;
}

// Gate on the Hamming weight reaching k.
inline SWeightTable hk_sum(const SWeightTable& a, const SWeightTable& b, int k) {
    if (a.q != b.q || a.n != b.n) throw DomainError("(H,k)-sum requires one common space");
    const Space& sp = a.space();
    SWeightTable out = a;
    for (int x = 0; x < sp.size(); ++x)
        if (sp.hamming(x) >= k) out.w[x] = a.w[x] + b.w[x];
    return out;
}

struct LemmaCheck {
    enum class Status { preconditions_unmet, pass, violated };
    Status status = Status::pass;
    int conclusion = 0;  // 1 or 2 when violated
    int u = 0, v = 0;
};

// Both conclusions of the equivalence lemma, verified over all vector pairs:
// (1) wt1(u) = wt2(v) and C(u) force C(v);
// (2) wt1(u) < wt2(v) and C(u) force C(v) or 2 wt1(u) < wt2(v).
inline LemmaCheck check_equivalence_lemma(const SWeightTable& wt1, const SWeightTable& wt2,
                                          const SupportCondition& c) {
    LemmaCheck res;
    if (!are_equivalent(wt1, wt2) || !are_equivalent(wt1, conditional_sum(wt1, wt2, c))) {
        res.status = LemmaCheck::Status::preconditions_unmet;
        return res;
    }
    const Space& sp = wt1.space();
    for (int u = 0; u < sp.size(); ++u) {
        if (!c.at(u)) continue;
        for (int v = 0; v < sp.size(); ++v) {
            if (wt1.w[u] == wt2.w[v] && !c.at(v)) return {LemmaCheck::Status::violated, 1, u, v};
            if (wt1.w[u] < wt2.w[v] && !c.at(v) && !(2 * wt1.w[u] < wt2.w[v]))
                return {LemmaCheck::Status::violated, 2, u, v};
        }
    }
    return res;
}

struct KsumReduction {
    int k = 0;
    bool pointwise = false;  // wt (+)_C wt coincides with wt (+)_k wt everywhere
};

// Witness threshold for conditions that keep wt (+)_C wt in the class of wt:
// the least weight of a condition-satisfying vector (one past the maximum if
// the condition never fires).
inline std::optional<KsumReduction> is_ksum_reducible(const SWeightTable& wt, const SupportCondition& c) {
    if (!condition_respects_support(c)) throw DomainError("condition does not respect support");
    SWeightTable summed = conditional_sum(wt, wt, c);
    if (!are_equivalent(wt, summed)) return std::nullopt;
    int k = wt.max_weight() + 1;
    bool any = false;
    for (std::size_t x = 0; x < wt.w.size(); ++x)
        if (c.at(static_cast<int>(x))) {
            any = true;
            k = std::min(k, wt.w[x]);
        }
    if (!any) k = wt.max_weight() + 1;
    KsumReduction red{k, k_sum(wt, wt, k) == summed};
    return red;
}

// ---- reachability by conditional sums of poset and combinatorial weights ----

struct ConditionInfo {
    enum class Type { hamming_ge, left_ge, upset } type = Type::hamming_ge;
    int k = 0;
    std::vector<std::uint32_t> upset;

    std::string describe() const {
        switch (type) {
            case Type::hamming_ge: return "hamming>=" + std::to_string(k);
            case Type::left_ge: return "left>=" + std::to_string(k);
            default: return "upset(" + std::to_string(upset.size()) + " supports)";
        }
    }
};

struct GeneratorInfo {
    enum class Family { poset, combinatorial } family = Family::poset;
    std::vector<std::pair<int, int>> poset_relations;  // 1-based cover pairs
    std::vector<std::vector<int>> covering_members;    // 1-based member lists
    SWeightTable table;
};

struct DerivationStep {
    int parent_class = -1;  // -1: class is a generator class
    int generator = -1;     // index into generators
    bool generator_on_left = false;
    ConditionInfo cond;
};

struct ReachabilityReport {
    CriterionCatalog catalog;  // unquotiented classes at (n, q=2)
    std::vector<GeneratorInfo> generators;
    std::vector<int> found_depth;       // per class, -1 when not reached
    std::vector<DerivationStep> step;   // how the class was first produced
    std::vector<SWeightTable> table;    // the concrete table that landed there

    std::size_t reached() const {
        std::size_t r = 0;
        for (int d : found_depth)
            if (d >= 0) ++r;
        return r;
    }
};

// Breadth-first closure of the generator set under conditional sums, states
// deduplicated per decoding-equivalence class (first table kept).
inline ReachabilityReport reach_all(int n, int max_depth, const Caps& caps = {}) {
    if (n > 3) throw CapExceeded("reachability search capped at n <= 3");
    const int q = 2;
    ReachabilityReport rep;
    rep.catalog = enumerate_criteria(n, q, false, caps);
    rep.found_depth.assign(rep.catalog.size(), -1);
    rep.step.assign(rep.catalog.size(), DerivationStep{});
    rep.table.assign(rep.catalog.size(), SWeightTable{});

    for (const Poset& p : enumerate_posets(n)) {
        GeneratorInfo info;
        info.family = GeneratorInfo::Family::poset;
        info.poset_relations = p.cover_relations();
        info.table = poset_weight(p, q);
        rep.generators.push_back(std::move(info));
    }
    for (const CoveringFamily& f : enumerate_covering_families(n)) {
        GeneratorInfo info;
        info.family = GeneratorInfo::Family::combinatorial;
        for (std::uint32_t m : f.members) {
            std::vector<int> lst;
            for (int i = 0; i < n; ++i)
                if (m >> i & 1u) lst.push_back(i + 1);
            info.covering_members.push_back(std::move(lst));
        }
        info.table = combinatorial_weight(f, q);
        rep.generators.push_back(std::move(info));
    }

    std::deque<int> frontier;
    auto admit = [&](const SWeightTable& wt, int depth, const DerivationStep& how) {
        auto id = classify_into_catalog(rep.catalog, wt);
        if (!id) return;  // cannot happen for valid tables; guarded by tests
        if (rep.found_depth[*id] >= 0) return;
        rep.found_depth[*id] = depth;
        rep.step[*id] = how;
        rep.table[*id] = wt;
        frontier.push_back(*id);
    };

    for (std::size_t g = 0; g < rep.generators.size(); ++g) {
        DerivationStep how;
        how.generator = static_cast<int>(g);
        admit(rep.generators[g].table, 0, how);
    }

    std::vector<SupportCondition> upsets;
    if (n <= 2) upsets = upward_closed_conditions(q, n);

    int depth = 0;
    while (!frontier.empty() && depth < max_depth) {
        ++depth;
        std::deque<int> current;
        std::swap(current, frontier);
        for (int cls : current) {
            SWeightTable left = rep.table[cls];
            for (std::size_t g = 0; g < rep.generators.size(); ++g) {
                const SWeightTable& gen = rep.generators[g].table;
                auto expand = [&](const SWeightTable& a, const SWeightTable& b, bool gen_left,
                                  const ConditionInfo& ci, const SupportCondition& cond) {
                    DerivationStep how;
                    how.parent_class = cls;
                    how.generator = static_cast<int>(g);
                    how.generator_on_left = gen_left;
                    how.cond = ci;
                    admit(conditional_sum(a, b, cond), depth, how);
                };
                for (int k = 0; k <= n + 1; ++k) {
                    SupportCondition cond = condition_hamming_ge(q, n, k);
                    ConditionInfo ci{ConditionInfo::Type::hamming_ge, k, {}};
                    expand(left, gen, false, ci, cond);
                    expand(gen, left, true, ci, cond);
                }
                for (int k = 0; k <= left.max_weight() + 1; ++k) {
                    ConditionInfo ci{ConditionInfo::Type::left_ge, k, {}};
                    expand(left, gen, false, ci, condition_weight_ge(left, k));
                }
                for (int k = 0; k <= gen.max_weight() + 1; ++k) {
                    ConditionInfo ci{ConditionInfo::Type::left_ge, k, {}};
                    expand(gen, left, true, ci, condition_weight_ge(gen, k));
                }
                for (const SupportCondition& cond : upsets) {
                    ConditionInfo ci{ConditionInfo::Type::upset, 0, {}};
                    for (std::uint32_t m = 0; m < (1u << n); ++m)
                        if (cond.at(get_space(q, n).indicator(m))) ci.upset.push_back(m);
                    expand(left, gen, false, ci, cond);
                    expand(gen, left, true, ci, cond);
                }
            }
        }
    }
    return rep;
}

// Derivation lookup for one target ordering, searched up to the given depth.
inline std::optional<std::pair<ReachabilityReport, int>> reachability_search(const WeightOrdering& target,
                                                                             int max_depth,
                                                                             const Caps& caps = {}) {
    if (target.q != 2) throw CapExceeded("reachability search supports q = 2 only");
    ReachabilityReport rep = reach_all(target.n, max_depth, caps);
    SWeightTable t = representative_weight(target);
    auto id = classify_into_catalog(rep.catalog, t);
    if (!id || rep.found_depth[*id] < 0) return std::nullopt;
    return std::make_pair(std::move(rep), *id);
}

}  // namespace sweights
