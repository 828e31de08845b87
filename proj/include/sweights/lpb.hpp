#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "sweights/isometry.hpp"
#include "sweights/linear_code.hpp"
#include "sweights/poset.hpp"
#include "sweights/weight_table.hpp"

namespace sweights {

// (P, pi, L): poset on the blocks, surjective block map, positive labels.
struct LpbStructure {
    Poset poset;
    std::vector<int> pi;      // coordinate -> block, 0-based
    std::vector<int> labels;  // per block, strictly positive
    int q = 2;

    int m() const { return poset.m(); }
    int n() const { return static_cast<int>(pi.size()); }
    const Space& space() const { return get_space(q, n()); }

    int block_size(int b) const {
        int k = 0;
        for (int v : pi)
            if (v == b) ++k;
        return k;
    }

    std::uint32_t block_coords(int b) const {
        std::uint32_t mask = 0;
        for (int i = 0; i < n(); ++i)
            if (pi[i] == b) mask |= 1u << i;
        return mask;
    }

    std::uint32_t pi_support(std::uint32_t coord_mask) const {
        std::uint32_t blocks = 0;
        for (int i = 0; i < n(); ++i)
            if (coord_mask >> i & 1u) blocks |= 1u << pi[i];
        return blocks;
    }
};

inline LpbStructure make_lpb(Poset poset, std::vector<int> pi, std::vector<int> labels, int q) {
    LpbStructure s{std::move(poset), std::move(pi), std::move(labels), q};
    if (static_cast<int>(s.labels.size()) != s.m()) throw DomainError("label function must cover all blocks");
    for (int l : s.labels)
        if (l <= 0) throw DomainError("labels must be strictly positive");
    std::vector<bool> hit(s.m(), false);
    for (int b : s.pi) {
        if (b < 0 || b >= s.m()) throw DomainError("block map value out of range");
        hit[b] = true;
    }
    for (bool h : hit)
        if (!h) throw DomainError("block map must be surjective");
    return s;
}

inline int label_sum(const LpbStructure& s, std::uint32_t block_mask) {
    int total = 0;
    for (int b = 0; b < s.m(); ++b)
        if (block_mask >> b & 1u) total += s.labels[b];
    return total;
}

inline int lpb_weight(const LpbStructure& s, int vector_index) {
    const Space& sp = s.space();
    return label_sum(s, s.poset.ideal(s.pi_support(sp.support_mask(vector_index))));
}

inline int lpb_weight(const LpbStructure& s, const FqVector& v) { return lpb_weight(s, s.space().index_of(v)); }

inline SWeightTable lpb_weight_table(const LpbStructure& s) {
    const Space& sp = s.space();
    std::vector<int> ideal_weight(1u << s.m());
    for (std::uint32_t bm = 0; bm < (1u << s.m()); ++bm) ideal_weight[bm] = label_sum(s, s.poset.ideal(bm));
    std::vector<int> w(sp.size());
    for (int x = 0; x < sp.size(); ++x) w[x] = ideal_weight[s.pi_support(sp.support_mask(x))];
    return SWeightTable{s.q, s.n(), std::move(w)};
}

inline int lpb_distance(const LpbStructure& s, int u, int v) { return lpb_weight(s, s.space().sub(u, v)); }
inline int lpb_distance(const LpbStructure& s, const FqVector& u, const FqVector& v) {
    const Space& sp = s.space();
    return lpb_distance(s, sp.index_of(u), sp.index_of(v));
}

// Order automorphism that also preserves labels and block sizes (0-based phi).
inline bool is_lpb_automorphism(const LpbStructure& s, const std::vector<int>& phi) {
    if (static_cast<int>(phi.size()) != s.m()) throw DomainError("permutation size mismatch");
    for (int a = 0; a < s.m(); ++a) {
        if (s.labels[a] != s.labels[phi[a]] || s.block_size(a) != s.block_size(phi[a])) return false;
        for (int b = 0; b < s.m(); ++b)
            if (s.poset.leq(a, b) != s.poset.leq(phi[a], phi[b])) return false;
    }
    return true;
}

inline std::vector<std::vector<int>> lpb_automorphisms(const LpbStructure& s) {
    if (s.m() > 8) throw CapExceeded("automorphism search capped at m <= 8");
    std::vector<int> phi(s.m());
    std::iota(phi.begin(), phi.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        if (is_lpb_automorphism(s, phi)) out.push_back(phi);
    } while (std::next_permutation(phi.begin(), phi.end()));
    return out;
}

// T_phi moves block i onto block phi(i), preserving the within-block
// coordinate order; needs matching block sizes to make sense.
inline LinearMap automorphism_isometry(const LpbStructure& s, const std::vector<int>& phi) {
    if (!is_lpb_automorphism(s, phi)) throw DomainError("phi is not a structure automorphism");
    std::vector<std::vector<int>> coords(s.m());
    for (int i = 0; i < s.n(); ++i) coords[s.pi[i]].push_back(i);
    FqMatrix mat(s.q, s.n(), s.n());
    for (int b = 0; b < s.m(); ++b)
        for (std::size_t j = 0; j < coords[b].size(); ++j) mat.at(coords[phi[b]][j], coords[b][j]) = 1;
    return LinearMap(std::move(mat));
}

// Membership in the perturbation subgroup: every block-supported vector maps
// to a nonzero vector of the same block plus something strictly below it.
inline bool is_n_subgroup_member(const LpbStructure& s, const LinearMap& map) {
    if (!map.invertible) return false;
    const Space& sp = s.space();
    if (map.n() != sp.n() || map.mat.q != sp.q()) throw DomainError("map does not act on this space");
    std::vector<int> img = image_table(sp, map.mat);
    for (int b = 0; b < s.m(); ++b) {
        std::uint32_t inside = s.block_coords(b);
        std::uint32_t below = s.poset.ideal(1u << b) & ~(1u << b);
        for (int x = 1; x < sp.size(); ++x) {
            if ((sp.support_mask(x) & ~inside) != 0) continue;  // not block-supported
            std::uint32_t image_blocks = s.pi_support(sp.support_mask(img[x]));
            if ((image_blocks & (1u << b)) == 0) return false;          // block part must stay nonzero
            if ((image_blocks & ~(1u << b) & ~below) != 0) return false;  // rest must sit strictly below
        }
    }
    return true;
}

inline std::vector<LinearMap> enumerate_gl_lpb(const LpbStructure& s, const Caps& caps = {}) {
    SWeightTable wt = lpb_weight_table(s);
    std::vector<LinearMap> out;
    for (FqMatrix& m : enumerate_isometries(s.space(), wt.w, caps.max_gl)) out.push_back(LinearMap(std::move(m)));
    return out;
}

// Size of the perturbation subgroup in closed form: per block, an invertible
// block-diagonal piece times arbitrary entries in the strictly-below rows.
inline unsigned long long n_subgroup_order(const LpbStructure& s) {
    unsigned long long total = 1;
    for (int b = 0; b < s.m(); ++b) {
        int kb = s.block_size(b);
        unsigned long long part = gl_order(kb, s.q);
        std::uint32_t below_blocks = s.poset.ideal(1u << b) & ~(1u << b);
        int below_coords = 0;
        for (int c = 0; c < s.n(); ++c)
            if (below_blocks >> s.pi[c] & 1u) ++below_coords;
        for (int t = 0; t < kb * below_coords; ++t) {
            if (part > (1ULL << 62) / static_cast<unsigned>(s.q)) return ~0ULL;
            part *= static_cast<unsigned>(s.q);
        }
        if (part != 0 && total > (~0ULL) / part) return ~0ULL;
        total *= part;
    }
    return total;
}

// Direct enumeration of the maps whose block-b columns are supported on block
// b and the blocks strictly below it, with invertible diagonal block pieces.
// These are exactly the maps the membership predicate accepts.
template <typename Fn>
void for_each_n_member(const LpbStructure& s, long long cap, Fn&& fn) {
    if (n_subgroup_order(s) > static_cast<unsigned long long>(cap))
        throw CapExceeded("perturbation subgroup exceeds the GL cap");
    int n = s.n();
    std::vector<std::vector<int>> coords(s.m());
    for (int c = 0; c < n; ++c) coords[s.pi[c]].push_back(c);
    std::vector<std::vector<int>> below(s.m());
    for (int b = 0; b < s.m(); ++b) {
        std::uint32_t below_blocks = s.poset.ideal(1u << b) & ~(1u << b);
        for (int c = 0; c < n; ++c)
            if (below_blocks >> s.pi[c] & 1u) below[b].push_back(c);
    }
    FqMatrix work(s.q, n, n);
    std::function<void(int)> per_block = [&](int b) {
        if (b == s.m()) {
            fn(work);
            return;
        }
        const std::vector<int>& bc = coords[b];
        int kb = static_cast<int>(bc.size());
        const Space& free_sp = get_space(s.q, static_cast<int>(below[b].size()));
        for_each_invertible(get_space(s.q, kb), [&](const FqMatrix& diag) {
            for (int r = 0; r < kb; ++r)
                for (int c = 0; c < kb; ++c) work.at(bc[r], bc[c]) = diag.at(r, c);
            // every filling of the strictly-below rows, one column at a time
            std::function<void(int)> per_col = [&](int col) {
                if (col == kb) {
                    per_block(b + 1);
                    return;
                }
                for (int fill = 0; fill < free_sp.size(); ++fill) {
                    for (std::size_t t = 0; t < below[b].size(); ++t)
                        work.at(below[b][t], bc[col]) = free_sp.digit(fill, static_cast<int>(t));
                    per_col(col + 1);
                }
            };
            per_col(0);
        }, Caps{1LL << 22, kHardMaxGl});
    };
    per_block(0);
}

struct LpbSemidirectReport {
    bool holds = false;
    std::size_t gl_size = 0, n_size = 0, aut_size = 0;
    bool all_isometries = false;        // members of N and A preserve the weight
    bool predicate_matches = false;     // membership predicate and construction agree inside GL
    bool n_is_group = false;
    bool n_is_normal = false;
    bool unique_factorization = false;  // every S = F o T_phi exactly once
    std::vector<std::pair<std::size_t, std::size_t>> factorization;  // per GL element: (N index, A index)
};

inline LpbSemidirectReport check_semidirect_lpb(const LpbStructure& s, const Caps& caps = {}) {
    const Space& sp = s.space();
    SWeightTable wt = lpb_weight_table(s);
    int n = s.n(), q = s.q;
    LpbSemidirectReport rep;

    std::vector<std::uint64_t> gl_keys;
    std::unordered_set<std::uint64_t> gl_set;
    for_each_isometry(sp, wt.w, caps.max_gl, [&](const FqMatrix& m) {
        std::uint64_t k = matrix_key(m);
        gl_keys.push_back(k);
        gl_set.insert(k);
    });
    rep.gl_size = gl_keys.size();

    std::vector<LinearMap> aut;
    for (const std::vector<int>& phi : lpb_automorphisms(s)) aut.push_back(automorphism_isometry(s, phi));
    rep.aut_size = aut.size();

    auto preserves = [&](const FqMatrix& m) {
        std::vector<int> img = image_table(sp, m);
        for (int x = 0; x < sp.size(); ++x)
            if (wt.w[img[x]] != wt.w[x]) return false;
        return true;
    };

    // (a) the constructed perturbation maps and automorphism maps are isometries.
    rep.all_isometries = true;
    rep.predicate_matches = true;
    std::vector<std::uint64_t> n_keys;
    std::unordered_map<std::uint64_t, std::size_t> n_index;
    for_each_n_member(s, caps.max_gl, [&](const FqMatrix& m) {
        std::uint64_t k = matrix_key(m);
        if (!gl_set.count(k)) rep.all_isometries = false;
        if (!is_n_subgroup_member(s, LinearMap(m))) rep.predicate_matches = false;
        n_index.emplace(k, n_keys.size());
        n_keys.push_back(k);
    });
    rep.n_size = n_keys.size();
    for (const LinearMap& a : aut)
        if (!gl_set.count(matrix_key(a.mat)) || !preserves(a.mat)) rep.all_isometries = false;

    // The membership predicate, swept over GL, recovers exactly the construction.
    std::size_t predicate_hits = 0;
    for (std::uint64_t k : gl_keys) {
        if (!is_n_subgroup_member(s, LinearMap(matrix_from_key(k, q, n, n)))) continue;
        ++predicate_hits;
        if (!n_index.count(k)) rep.predicate_matches = false;
    }
    if (predicate_hits != rep.n_size) rep.predicate_matches = false;

    // (b) N is a subgroup, normal in GL (conjugation checked on generators).
    auto n_gens = extract_generators_keys(n_keys, n, q);
    rep.n_is_group = n_gens.has_value();
    auto gl_gens = extract_generators_keys(gl_keys, n, q);
    if (rep.n_is_group && gl_gens) {
        rep.n_is_normal = true;
        for (std::uint64_t gk : *gl_gens) {
            FqMatrix g = matrix_from_key(gk, q, n, n);
            FqMatrix gi = *g.inverse();
            for (std::uint64_t fk : *n_gens) {
                FqMatrix conj = g.mul(matrix_from_key(fk, q, n, n)).mul(gi);
                if (!n_index.count(matrix_key(conj))) { rep.n_is_normal = false; break; }
            }
            if (!rep.n_is_normal) break;
        }
    }

    // (c) unique factorization S = F o T_phi.
    std::vector<FqMatrix> aut_inv;
    for (const LinearMap& a : aut) aut_inv.push_back(*a.mat.inverse());
    rep.unique_factorization = true;
    rep.factorization.reserve(gl_keys.size());
    for (std::uint64_t gk : gl_keys) {
        FqMatrix g = matrix_from_key(gk, q, n, n);
        std::size_t count = 0;
        std::pair<std::size_t, std::size_t> found{0, 0};
        for (std::size_t j = 0; j < aut.size(); ++j) {
            auto it = n_index.find(matrix_key(g.mul(aut_inv[j])));
            if (it != n_index.end()) {
                ++count;
                found = {it->second, j};
            }
        }
        if (count != 1) rep.unique_factorization = false;
        rep.factorization.push_back(found);
    }

    rep.holds = rep.all_isometries && rep.predicate_matches && rep.n_is_group && rep.n_is_normal &&
                rep.unique_factorization && rep.gl_size == rep.n_size * rep.aut_size;
    return rep;
}

// Dimensions of the per-level subcodes D cap V_i; they sum to k exactly when
// the code splits along the levels.
inline bool has_level_split_basis(const LpbStructure& s, const LinearCode& code) {
    LevelPartition lp = heights_and_levels(s.poset);
    int total = 0;
    for (const std::vector<int>& level : lp.levels) {
        std::uint32_t level_coords = 0;
        for (int b : level) level_coords |= s.block_coords(b - 1);
        // dim { x : x G has support inside the level } = k - rank(G outside).
        std::vector<int> outside_cols;
        for (int c = 0; c < s.n(); ++c)
            if (!(level_coords >> c & 1u)) outside_cols.push_back(c);
        FqMatrix restricted(s.q, code.k, static_cast<int>(outside_cols.size()));
        for (int r = 0; r < code.k; ++r)
            for (std::size_t t = 0; t < outside_cols.size(); ++t) restricted.at(r, static_cast<int>(t)) = code.gen.at(r, outside_cols[t]);
        total += code.k - restricted.rank();
    }
    return total == code.k;
}

struct CanonicalDecomposition {
    LinearMap isometry;       // member of the perturbation subgroup
    LinearCode decomposed;    // image code, level-split generators
};

// Level-descending elimination: echelonize with coordinates ordered by block
// level (high first), then strip each row below its pivot level with one
// perturbation map.  Hierarchy guarantees those strips sit inside the pivot
// block's strict ideal, so the composite map is an isometry.
inline CanonicalDecomposition canonical_decompose(const LpbStructure& s, const LinearCode& code) {
    if (!is_hierarchical(s.poset)) throw DomainError("canonical decomposition requires a hierarchical poset");
    if (code.q != s.q || code.n != s.n()) throw DomainError("code does not match the structure");
    const Space& sp = s.space();
    LevelPartition lp = heights_and_levels(s.poset);
    auto coord_level = [&](int c) { return lp.height[s.pi[c]]; };

    std::vector<int> order(s.n());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (coord_level(a) != coord_level(b)) return coord_level(a) > coord_level(b);
        if (s.pi[a] != s.pi[b]) return s.pi[a] < s.pi[b];
        return a < b;
    });

    FqMatrix reduced = code.gen;
    reduced.rref_in_place(order);

    FqMatrix t = FqMatrix::identity(s.n(), s.q);
    FqMatrix target(s.q, code.k, s.n());
    std::vector<int> rank_of(s.n());
    for (int t2 = 0; t2 < s.n(); ++t2) rank_of[order[t2]] = t2;
    for (int r = 0; r < code.k; ++r) {
        int pivot = -1;
        for (int c : order)
            if (reduced.at(r, c) != 0) { pivot = c; break; }
        if (pivot < 0) throw DomainError("generator matrix lost rank during reduction");
        int piv_level = coord_level(pivot);
        for (int c = 0; c < s.n(); ++c) {
            int v = reduced.at(r, c);
            if (v == 0) continue;
            if (coord_level(c) == piv_level)
                target.at(r, c) = v;
            else
                t.at(c, pivot) = (s.q - v) % s.q;  // T(e_pivot) = e_pivot - low part
        }
    }

    LinearMap map(std::move(t));
    if (!map.invertible) throw std::logic_error("constructed decomposition map is singular");
    SWeightTable wt = lpb_weight_table(s);
    std::vector<int> img = image_table(sp, map.mat);
    for (int x = 0; x < sp.size(); ++x)
        if (wt.w[img[x]] != wt.w[x]) throw std::logic_error("constructed decomposition map is not an isometry");

    LinearCode image = apply_map(LinearCode::from_generator(reduced), map, sp);
    LinearCode wanted = LinearCode::from_generator(target);
    if (!(image == wanted)) throw std::logic_error("decomposition image mismatch");
    if (!has_level_split_basis(s, image)) throw std::logic_error("decomposed code is not level-split");
    return CanonicalDecomposition{std::move(map), std::move(image)};
}

// Existence search used on the non-hierarchical side: some isometry must map
// the code onto a level-split one.
inline bool admits_decomposition_bruteforce(const LpbStructure& s, const LinearCode& code, const Caps& caps = {}) {
    if (has_level_split_basis(s, code)) return true;
    const Space& sp = s.space();
    for (const LinearMap& g : enumerate_gl_lpb(s, caps))
        if (has_level_split_basis(s, apply_map(code, g, sp))) return true;
    return false;
}

struct UdpReport {
    bool ok = true;
    int level = 0;                       // 1-based level of the witness
    std::vector<int> subset_a, subset_b; // 1-based elements with equal label sums
};

// Unique decomposition property: inside each level, equal label sums must be
// explained by a bijection matching labels and block sizes, i.e. equal
// multisets of (label, block size) pairs.
inline UdpReport udp_check(const LpbStructure& s) {
    LevelPartition lp = heights_and_levels(s.poset);
    for (std::size_t lev = 0; lev < lp.levels.size(); ++lev) {
        const std::vector<int>& gamma = lp.levels[lev];
        if (gamma.size() > 20) throw CapExceeded("level too large for subset enumeration");
        std::map<int, std::pair<std::vector<std::pair<int, int>>, std::uint32_t>> by_sum;
        for (std::uint32_t pick = 0; pick < (1u << gamma.size()); ++pick) {
            int sum = 0;
            std::vector<std::pair<int, int>> sig;
            for (std::size_t t = 0; t < gamma.size(); ++t)
                if (pick >> t & 1u) {
                    int b = gamma[t] - 1;
                    sum += s.labels[b];
                    sig.push_back({s.labels[b], s.block_size(b)});
                }
            std::sort(sig.begin(), sig.end());
            auto it = by_sum.find(sum);
            if (it == by_sum.end()) {
                by_sum[sum] = {std::move(sig), pick};
            } else if (it->second.first != sig) {
                UdpReport rep;
                rep.ok = false;
                rep.level = static_cast<int>(lev) + 1;
                for (std::size_t t = 0; t < gamma.size(); ++t) {
                    if (it->second.second >> t & 1u) rep.subset_a.push_back(gamma[t]);
                    if (pick >> t & 1u) rep.subset_b.push_back(gamma[t]);
                }
                return rep;
            }
        }
    }
    return UdpReport{};
}

// Deterministic sweep of structures: every poset on [m], every composition of
// n into m positive block sizes (blocks laid out contiguously), every label
// function bounded by max_label.
template <typename Fn>
void enumerate_lpb_structures(int max_m, int max_n, const std::vector<int>& qs, int max_label, Fn&& fn) {
    for (int m = 1; m <= max_m; ++m) {
        std::vector<Poset> posets = enumerate_posets(m);
        for (int n = m; n <= max_n; ++n) {
            std::vector<std::vector<int>> comps;
            std::vector<int> cur(m, 1);
            std::function<void(int, int)> gen = [&](int pos, int left) {
                if (pos == m) {
                    if (left == 0) comps.push_back(cur);
                    return;
                }
                for (int k = 1; k <= left - (m - pos - 1); ++k) {
                    cur[pos] = k;
                    gen(pos + 1, left - k);
                }
            };
            gen(0, n);
            for (const Poset& p : posets)
                for (const std::vector<int>& comp : comps) {
                    std::vector<int> pi;
                    for (int b = 0; b < m; ++b) pi.insert(pi.end(), comp[b], b);
                    std::vector<int> labels(m, 1);
                    for (;;) {
                        for (int q : qs) fn(make_lpb(p, pi, labels, q));
                        int i = 0;
                        while (i < m && labels[i] == max_label) labels[i++] = 1;
                        if (i == m) break;
                        ++labels[i];
                    }
                }
        }
    }
}

}  // namespace sweights
