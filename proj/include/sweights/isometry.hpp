#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <unordered_set>
#include <vector>

#include "sweights/delta_cube.hpp"
#include "sweights/field.hpp"
#include "sweights/weight_table.hpp"

namespace sweights {

// T(x)_k = x_{perm[k]} for a 0-based permutation of coordinate positions.
inline LinearMap permutation_map(const std::vector<int>& perm, int q) {
    int n = static_cast<int>(perm.size());
    FqMatrix m(q, n, n);
    for (int r = 0; r < n; ++r) m.at(r, perm[r]) = 1;
    return LinearMap(std::move(m));
}

// Whether the induced vertex permutation of the cube maps arcs to arcs with
// equal values.  The vertex image of mask has bit k set iff bit perm[k] is.
inline bool cube_automorphism_isometry(const std::vector<int>& perm, const DeltaCube& cube) {
    if (static_cast<int>(perm.size()) != cube.n) throw DomainError("permutation size mismatch");
    std::vector<int> inv(cube.n);
    for (int k = 0; k < cube.n; ++k) inv[perm[k]] = k;
    auto vertex_image = [&](std::uint32_t mask) {
        std::uint32_t out = 0;
        for (int k = 0; k < cube.n; ++k)
            if (mask >> perm[k] & 1u) out |= 1u << k;
        return out;
    };
    for (std::uint32_t mask = 0; mask < static_cast<std::uint32_t>(cube.vertices()); ++mask)
        for (int i = 0; i < cube.n; ++i) {
            if (!cube.has_arc(mask, i)) continue;
            if (cube.at(mask, i) != cube.at(vertex_image(mask), inv[i])) return false;
        }
    return true;
}

inline std::vector<std::vector<int>> cube_automorphisms(const DeltaCube& cube) {
    if (cube.n > 8) throw CapExceeded("cube automorphism search capped at n <= 8");
    std::vector<int> perm(cube.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        if (cube_automorphism_isometry(perm, cube)) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// Domination condition for T against the cube of wt:
//  (i)  the e_i coefficient of T(e_i) is nonzero;
//  (ii) for every cube vertex u with u_i = 1, the trail from u to
//       u + T(e_i) - e_i carries total 0, which for monotone arc values means
//       the endpoints and their meet share one weight.
inline bool respects_domination(const LinearMap& map, const DeltaCube& cube, const Space& sp) {
    if (map.n() != sp.n() || map.mat.q != sp.q()) throw DomainError("map does not act on this space");
    std::vector<int> w = weights_of_cube(cube);
    for (int i = 0; i < sp.n(); ++i) {
        if (map.mat.at(i, i) == 0) return false;
        int col = 0;
        for (int r = 0; r < sp.n(); ++r) col += map.mat.at(r, i) % sp.q() * sp.pow_q(r);
        int shift = sp.sub(col, sp.basis(i));
        for (std::uint32_t mask = 0; mask < static_cast<std::uint32_t>(cube.vertices()); ++mask) {
            if (!(mask >> i & 1u)) continue;
            int u = sp.indicator(mask);
            std::uint32_t target = sp.support_mask(sp.add(u, shift));
            std::uint32_t meet = mask & target;
            if (w[mask] != w[meet] || w[target] != w[meet]) return false;
        }
    }
    return true;
}

// All invertible maps respecting domination.  Condition (ii) constrains each
// column independently, so admissible columns are found first and combined
// with a span check.
inline std::vector<LinearMap> domination_maps(const SWeightTable& wt, const Caps& caps = {}) {
    const Space& sp = wt.space();
    DeltaCube cube = cube_from_sweight(wt);
    std::vector<int> w = weights_of_cube(cube);
    int n = sp.n();
    std::vector<std::vector<int>> admissible(n);
    for (int i = 0; i < n; ++i) {
        for (int c = 0; c < sp.size(); ++c) {
            if (sp.digit(c, i) == 0) continue;
            int shift = sp.sub(c, sp.basis(i));
            bool ok = true;
            for (std::uint32_t mask = 0; ok && mask < static_cast<std::uint32_t>(cube.vertices()); ++mask) {
                if (!(mask >> i & 1u)) continue;
                int u = sp.indicator(mask);
                std::uint32_t target = sp.support_mask(sp.add(u, shift));
                std::uint32_t meet = mask & target;
                if (w[mask] != w[meet] || w[target] != w[meet]) ok = false;
            }
            if (ok) admissible[i].push_back(c);
        }
    }
    std::vector<LinearMap> out;
    std::vector<int> cols(n);
    std::vector<char> in_span(sp.size(), 0);
    in_span[0] = 1;
    std::vector<int> span_list{0};
    std::function<void(int)> rec = [&](int r) {
        if (r == n) {
            FqMatrix m(sp.q(), n, n);
            for (int j = 0; j < n; ++j)
                for (int i = 0; i < n; ++i) m.at(i, j) = sp.digit(cols[j], i);
            out.push_back(LinearMap(std::move(m)));
            if (static_cast<long long>(out.size()) > caps.max_gl)
                throw CapExceeded("domination subgroup exceeds the GL cap");
            return;
        }
        for (int c : admissible[r]) {
            if (in_span[c]) continue;
            cols[r] = c;
            std::size_t mark = span_list.size();
            for (std::size_t t = 0; t < mark; ++t)
                for (int s = 1; s < sp.q(); ++s) {
                    int v = sp.add(span_list[t], sp.smul(s, c));
                    in_span[v] = 1;
                    span_list.push_back(v);
                }
            rec(r + 1);
            while (span_list.size() > mark) {
                in_span[span_list.back()] = 0;
                span_list.pop_back();
            }
        }
    };
    if (n == 0)
        out.push_back(LinearMap(FqMatrix(sp.q(), 0, 0)));
    else
        rec(0);
    return out;
}

// Exhaustive isometry enumeration for any weight function that vanishes only
// at 0: basis images are extended depth-first, and every vector that becomes
// expressible is checked at once, which both prunes and forces invertibility.
template <typename Fn>
void for_each_isometry(const Space& sp, const std::vector<int>& weights, long long cap, Fn&& fn) {
    if (static_cast<int>(weights.size()) != sp.size()) throw DomainError("weight array size mismatch");
    if (weights[0] != 0) throw DomainError("weights must vanish at 0");
    for (int x = 1; x < sp.size(); ++x)
        if (weights[x] <= 0) throw DomainError("weights must be positive away from 0");
    int n = sp.n();
    long long count = 0;
    std::vector<int> cols(n);
    std::vector<int> img(sp.size(), 0);
    std::function<void(int)> rec = [&](int r) {
        if (r == n) {
            FqMatrix m(sp.q(), n, n);
            for (int j = 0; j < n; ++j)
                for (int i = 0; i < n; ++i) m.at(i, j) = sp.digit(cols[j], i);
            if (++count > cap) throw CapExceeded("isometry group exceeds the GL cap");
            fn(m);
            return;
        }
        int block = sp.pow_q(r);
        for (int c = 1; c < sp.size(); ++c) {
            if (weights[c] != weights[sp.basis(r)]) continue;
            bool ok = true;
            for (int s = 1; ok && s < sp.q(); ++s) {
                int base = sp.smul(s, c);
                for (int x = 0; x < block; ++x) {
                    int image = sp.add(base, img[x]);
                    if (weights[image] != weights[s * block + x]) { ok = false; break; }
                    img[s * block + x] = image;
                }
            }
            if (!ok) continue;
            cols[r] = c;
            rec(r + 1);
        }
    };
    if (n == 0) {
        fn(FqMatrix(sp.q(), 0, 0));
        return;
    }
    rec(0);
}

inline std::vector<FqMatrix> enumerate_isometries(const Space& sp, const std::vector<int>& weights,
                                                  long long cap) {
    std::vector<FqMatrix> out;
    for_each_isometry(sp, weights, cap, [&](const FqMatrix& m) { out.push_back(m); });
    return out;
}

inline std::vector<LinearMap> enumerate_gl_bruteforce(const SWeightTable& wt, const Caps& caps = {}) {
    SWeightReport rep = validate_sweight(wt);
    if (!rep.ok) throw DomainError("GL enumeration needs a valid S-weight: " + rep.message);
    std::vector<LinearMap> out;
    for (FqMatrix& m : enumerate_isometries(wt.space(), wt.w, caps.max_gl)) out.push_back(LinearMap(std::move(m)));
    return out;
}

// ---- small finite matrix-group utilities ----

struct MatrixGroupSet {
    std::unordered_set<std::uint64_t> keys;
    bool contains(const FqMatrix& m) const { return keys.count(matrix_key(m)) > 0; }
    bool insert(const FqMatrix& m) { return keys.insert(matrix_key(m)).second; }
    std::size_t size() const { return keys.size(); }
};

inline std::vector<FqMatrix> subgroup_closure(const std::vector<FqMatrix>& generators, int n, int q,
                                              long long cap) {
    std::vector<FqMatrix> elements{FqMatrix::identity(n, q)};
    MatrixGroupSet seen;
    seen.insert(elements[0]);
    for (std::size_t head = 0; head < elements.size(); ++head) {
        for (const FqMatrix& g : generators) {
            FqMatrix prod = elements[head].mul(g);
            if (seen.insert(prod)) {
                elements.push_back(std::move(prod));
                if (static_cast<long long>(elements.size()) > cap)
                    throw CapExceeded("subgroup closure exceeds cap");
            }
        }
    }
    return elements;
}

// Greedy generating set (at most log2 |G| + stragglers).  Returns nothing if
// the input set is not closed under products, i.e. not a group.
inline std::optional<std::vector<FqMatrix>> extract_generators(const std::vector<FqMatrix>& elements) {
    if (elements.empty()) return std::nullopt;
    int n = elements[0].rows, q = elements[0].q;
    MatrixGroupSet all;
    for (const FqMatrix& m : elements) all.insert(m);
    std::vector<FqMatrix> gens;
    MatrixGroupSet known;
    known.insert(FqMatrix::identity(n, q));
    for (const FqMatrix& x : elements) {
        if (known.contains(x)) continue;
        gens.push_back(x);
        std::vector<FqMatrix> closure;
        try {
            closure = subgroup_closure(gens, n, q, static_cast<long long>(elements.size()));
        } catch (const CapExceeded&) {
            return std::nullopt;
        }
        known = MatrixGroupSet{};
        for (const FqMatrix& m : closure) {
            if (!all.contains(m)) return std::nullopt;
            known.insert(m);
        }
    }
    if (known.size() != all.size()) return std::nullopt;
    return gens;
}

inline bool is_matrix_group(const std::vector<FqMatrix>& elements) { return extract_generators(elements).has_value(); }

// Key-based variants for large groups: 8 bytes per element instead of a
// heap-allocated matrix, at the price of decoding around each product.
inline std::vector<std::uint64_t> subgroup_closure_keys(const std::vector<std::uint64_t>& gen_keys, int n,
                                                        int q, long long cap) {
    std::vector<FqMatrix> gens;
    gens.reserve(gen_keys.size());
    for (std::uint64_t k : gen_keys) gens.push_back(matrix_from_key(k, q, n, n));
    std::vector<std::uint64_t> elements{matrix_key(FqMatrix::identity(n, q))};
    std::unordered_set<std::uint64_t> seen(elements.begin(), elements.end());
    for (std::size_t head = 0; head < elements.size(); ++head) {
        FqMatrix cur = matrix_from_key(elements[head], q, n, n);
        for (const FqMatrix& g : gens) {
            std::uint64_t key = matrix_key(cur.mul(g));
            if (seen.insert(key).second) {
                elements.push_back(key);
                if (static_cast<long long>(elements.size()) > cap)
                    throw CapExceeded("subgroup closure exceeds cap");
            }
        }
    }
    return elements;
}

inline std::optional<std::vector<std::uint64_t>> extract_generators_keys(
    const std::vector<std::uint64_t>& element_keys, int n, int q) {
    std::unordered_set<std::uint64_t> all(element_keys.begin(), element_keys.end());
    std::vector<std::uint64_t> gens;
    std::unordered_set<std::uint64_t> known{matrix_key(FqMatrix::identity(n, q))};
    for (std::uint64_t x : element_keys) {
        if (known.count(x)) continue;
        gens.push_back(x);
        std::vector<std::uint64_t> closure;
        try {
            closure = subgroup_closure_keys(gens, n, q, static_cast<long long>(all.size()));
        } catch (const CapExceeded&) {
            return std::nullopt;
        }
        known.clear();
        for (std::uint64_t k : closure) {
            if (!all.count(k)) return std::nullopt;
            known.insert(k);
        }
    }
    if (known.size() != all.size()) return std::nullopt;
    return gens;
}

struct SemidirectReport {
    enum class Verdict { equal, contained, violated };
    Verdict verdict = Verdict::violated;
    std::size_t gl_size = 0, aut_size = 0, domination_size = 0, generated_size = 0;
    bool domination_set_is_group = false;
    bool strict_at_q2 = false;  // q == 2 and the generated subgroup is proper
};

// Compares the subgroup generated by the delta-preserving permutation maps
// and the domination-respecting maps against the brute-force isometry group.
inline SemidirectReport check_semidirect_theorem(const SWeightTable& wt, const Caps& caps = {}) {
    const Space& sp = wt.space();
    DeltaCube cube = cube_from_sweight(wt);
    std::vector<LinearMap> aut;
    for (const std::vector<int>& perm : cube_automorphisms(cube)) aut.push_back(permutation_map(perm, wt.q));
    std::vector<LinearMap> dom = domination_maps(wt, caps);
    std::vector<LinearMap> gl = enumerate_gl_bruteforce(wt, caps);

    SemidirectReport rep;
    rep.gl_size = gl.size();
    rep.aut_size = aut.size();
    rep.domination_size = dom.size();

    MatrixGroupSet gl_set;
    for (const LinearMap& m : gl) gl_set.insert(m.mat);
    for (const LinearMap& m : aut)
        if (!gl_set.contains(m.mat)) return rep;  // violated: a generator is not an isometry
    for (const LinearMap& m : dom)
        if (!gl_set.contains(m.mat)) return rep;

    std::vector<FqMatrix> dom_mats;
    for (const LinearMap& m : dom) dom_mats.push_back(m.mat);
    std::vector<FqMatrix> gens;
    if (auto dom_gens = extract_generators(dom_mats)) {
        rep.domination_set_is_group = true;
        gens = *dom_gens;
    } else {
        gens = dom_mats;
    }
    for (const LinearMap& m : aut) gens.push_back(m.mat);
    std::vector<FqMatrix> generated = subgroup_closure(gens, sp.n(), wt.q, static_cast<long long>(gl.size()));
    rep.generated_size = generated.size();

    if (generated.size() == gl.size()) {
        rep.verdict = SemidirectReport::Verdict::equal;
    } else if (wt.q == 2) {
        rep.verdict = SemidirectReport::Verdict::contained;
        rep.strict_at_q2 = true;
    } else {
        rep.verdict = SemidirectReport::Verdict::violated;  // equality is asserted for q > 2
    }
    return rep;
}

}  // namespace sweights
