#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "sweights/weight_table.hpp"

namespace sweights {

// Arc-weighted directed Hamming cube on F_2^n: one arc (u, u+e_i) per vertex
// u with u_i = 0. For q > 2 the cube lives on supports, so the table behind it
// has to be support-determined.
struct DeltaCube {
    int n = 0;
    std::vector<int> delta;  // arc (mask, mask | 1<<i) stored at [mask * n + i]

    static DeltaCube zeros(int n) {
        if (n < 0 || n > 20) throw DomainError("cube dimension out of range");
        return DeltaCube{n, std::vector<int>(static_cast<std::size_t>(n) << n, 0)};
    }

    int vertices() const { return 1 << n; }
    bool has_arc(std::uint32_t mask, int i) const { return !(mask >> i & 1u); }
    int at(std::uint32_t mask, int i) const { return delta[static_cast<std::size_t>(mask) * n + i]; }
    int& at(std::uint32_t mask, int i) { return delta[static_cast<std::size_t>(mask) * n + i]; }
};

struct CubeReport {
    enum class Kind { none, negative_arc, zero_initial_arc, unbalanced_face };
    bool ok = true;
    Kind kind = Kind::none;
    std::uint32_t mask = 0;
    int i = 0, j = 0;
    std::string message;
};

// Valid iff every arc out of 0 is positive and every 2-face balances; face
// balance makes all trail sums between fixed endpoints agree, because the
// 4-cycles generate the cube's cycle space.
inline CubeReport validate_cube(const DeltaCube& cube) {
    CubeReport rep;
    for (std::uint32_t mask = 0; mask < static_cast<std::uint32_t>(cube.vertices()); ++mask)
        for (int i = 0; i < cube.n; ++i) {
            if (!cube.has_arc(mask, i)) continue;
            if (cube.at(mask, i) < 0)
                return {false, CubeReport::Kind::negative_arc, mask, i, i, "negative arc value"};
        }
    for (int i = 0; i < cube.n; ++i)
        if (cube.at(0, i) <= 0)
            return {false, CubeReport::Kind::zero_initial_arc, 0, i, i, "arc from 0 must be positive"};
    for (std::uint32_t mask = 0; mask < static_cast<std::uint32_t>(cube.vertices()); ++mask)
        for (int i = 0; i < cube.n; ++i) {
            if (!cube.has_arc(mask, i)) continue;
            for (int j = i + 1; j < cube.n; ++j) {
                if (!cube.has_arc(mask, j)) continue;
                int via_i = cube.at(mask, i) + cube.at(mask | 1u << i, j);
                int via_j = cube.at(mask, j) + cube.at(mask | 1u << j, i);
                if (via_i != via_j)
                    return {false, CubeReport::Kind::unbalanced_face, mask, i, j, "2-face trail sums differ"};
            }
        }
    return rep;
}

inline bool is_support_determined(const SWeightTable& wt) {
    const Space& sp = wt.space();
    for (int x = 0; x < sp.size(); ++x)
        if (wt.w[x] != wt.w[sp.indicator(sp.support_mask(x))]) return false;
    return true;
}

inline DeltaCube cube_from_sweight(const SWeightTable& wt) {
    const Space& sp = wt.space();
    if (sp.q() > 2 && !is_support_determined(wt))
        throw DomainError("cube representation over q > 2 needs a support-determined weight");
    DeltaCube cube = DeltaCube::zeros(wt.n);
    auto wt_of_mask = [&](std::uint32_t mask) { return wt.w[sp.q() == 2 ? static_cast<int>(mask) : sp.indicator(mask)]; };
    for (std::uint32_t mask = 0; mask < static_cast<std::uint32_t>(cube.vertices()); ++mask)
        for (int i = 0; i < cube.n; ++i)
            if (cube.has_arc(mask, i)) cube.at(mask, i) = wt_of_mask(mask | 1u << i) - wt_of_mask(mask);
    return cube;
}

// Trail sums from 0 to every vertex; well defined exactly on valid cubes.
inline std::vector<int> weights_of_cube(const DeltaCube& cube) {
    std::vector<int> w(cube.vertices(), 0);
    for (std::uint32_t mask = 1; mask < static_cast<std::uint32_t>(cube.vertices()); ++mask) {
        int i = __builtin_ctz(mask);
        w[mask] = w[mask & ~(1u << i)] + cube.at(mask & ~(1u << i), i);
    }
    return w;
}

inline int weight_from_cube(const DeltaCube& cube, std::uint32_t mask) {
    CubeReport rep = validate_cube(cube);
    if (!rep.ok) throw DomainError("cube is not valid: " + rep.message);
    return weights_of_cube(cube)[mask];
}

inline int weight_from_cube(const DeltaCube& cube, const FqVector& v) {
    if (v.n() != cube.n) throw DomainError("vector length does not match cube dimension");
    std::uint32_t mask = 0;
    for (int i = 0; i < v.n(); ++i)
        if (v.entries[i] != 0) mask |= 1u << i;
    return weight_from_cube(cube, mask);
}

// Reads the (support-determined) weight table back off the cube.
inline SWeightTable table_from_cube(const DeltaCube& cube, int q) {
    const Space& sp = get_space(q, cube.n);
    std::vector<int> by_mask = weights_of_cube(cube);
    std::vector<int> w(sp.size());
    for (int x = 0; x < sp.size(); ++x) w[x] = by_mask[sp.support_mask(x)];
    return SWeightTable{q, cube.n, std::move(w)};
}

// Arc values in {0,1} characterize the weights coming from covering families.
inline bool is_combinatorial_shaped(const DeltaCube& cube) {
    for (std::uint32_t mask = 0; mask < static_cast<std::uint32_t>(cube.vertices()); ++mask)
        for (int i = 0; i < cube.n; ++i)
            if (cube.has_arc(mask, i) && (cube.at(mask, i) < 0 || cube.at(mask, i) > 1)) return false;
    return true;
}

// Standard form: the attained trail sums are exactly {0, 1, ..., max}.
inline bool is_standard_form(const DeltaCube& cube) {
    std::vector<int> w = weights_of_cube(cube);
    std::vector<int> values = w;
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i] != static_cast<int>(i)) return false;
    return true;
}

// Rank compression: each weight becomes its rank among the attained values,
// which is the unique order-preserving map onto a contiguous range.
inline DeltaCube standardize(const DeltaCube& cube) {
    CubeReport rep = validate_cube(cube);
    if (!rep.ok) throw DomainError("cannot standardize an invalid cube: " + rep.message);
    std::vector<int> w = weights_of_cube(cube);
    std::vector<int> values = w;
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    auto rank = [&](int v) {
        return static_cast<int>(std::lower_bound(values.begin(), values.end(), v) - values.begin());
    };
    DeltaCube out = DeltaCube::zeros(cube.n);
    for (std::uint32_t mask = 0; mask < static_cast<std::uint32_t>(cube.vertices()); ++mask)
        for (int i = 0; i < cube.n; ++i)
            if (cube.has_arc(mask, i)) out.at(mask, i) = rank(w[mask | 1u << i]) - rank(w[mask]);
    return out;
}

}  // namespace sweights
