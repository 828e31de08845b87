#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "sweights/field.hpp"

namespace sweights {

// k-dimensional subspace of F_q^n held as its reduced-echelon generator, the
// canonical representative: equal codes compare equal.
struct LinearCode {
    int q = 2, n = 0, k = 0;
    FqMatrix gen;  // k x n, RREF, full rank

    static LinearCode from_generator(const FqMatrix& g) {
        FqMatrix r = g.rref();
        int rank = 0;
        for (int row = 0; row < r.rows; ++row) {
            bool nonzero = false;
            for (int c = 0; c < r.cols; ++c)
                if (r.at(row, c) != 0) { nonzero = true; break; }
            if (nonzero) ++rank;
        }
        FqMatrix trimmed(g.q, rank, g.cols);
        for (int row = 0; row < rank; ++row)
            for (int c = 0; c < g.cols; ++c) trimmed.at(row, c) = r.at(row, c);
        return LinearCode{g.q, g.cols, rank, std::move(trimmed)};
    }

    static LinearCode zero(int q, int n) { return LinearCode{q, n, 0, FqMatrix(q, 0, n)}; }

    bool operator==(const LinearCode& o) const { return q == o.q && n == o.n && k == o.k && gen == o.gen; }
    bool operator<(const LinearCode& o) const { return gen.a < o.gen.a; }

    long long size() const {
        long long s = 1;
        for (int i = 0; i < k; ++i) s *= q;
        return s;
    }
};

// Visits every codeword as a packed vector index, zero word first.
template <typename Fn>
void for_each_codeword(const LinearCode& code, const Space& sp, Fn&& fn) {
    if (sp.n() != code.n || sp.q() != code.q) throw DomainError("code does not live in this space");
    std::vector<int> row_idx(code.k);
    for (int r = 0; r < code.k; ++r) {
        int idx = 0;
        for (int c = 0; c < code.n; ++c) idx += code.gen.at(r, c) * sp.pow_q(c);
        row_idx[r] = idx;
    }
    std::vector<int> words{0};
    words.reserve(static_cast<std::size_t>(code.size()));
    for (int r = 0; r < code.k; ++r) {
        std::size_t prev = words.size();
        for (int s = 1; s < sp.q(); ++s) {
            int base = sp.smul(s, row_idx[r]);
            for (std::size_t t = 0; t < prev; ++t) words.push_back(sp.add(base, words[t]));
        }
    }
    for (int wrd : words) fn(wrd);
}

// Null space of the generator under the standard inner product.
inline LinearCode dual_code(const LinearCode& code) {
    if (code.k == 0) return LinearCode::from_generator(FqMatrix::identity(code.n, code.q));
    FqMatrix ns = code.gen.null_space();
    if (ns.rows == 0) return LinearCode::zero(code.q, code.n);
    return LinearCode::from_generator(ns);
}

// Maps the code through an invertible matrix (codewords as column vectors).
inline LinearCode apply_map(const LinearCode& code, const LinearMap& map, const Space& sp) {
    if (!map.invertible) throw DomainError("code images need an invertible map");
    std::vector<int> img = image_table(sp, map.mat);
    FqMatrix g(code.q, code.k, code.n);
    for (int r = 0; r < code.k; ++r) {
        int idx = 0;
        for (int c = 0; c < code.n; ++c) idx += code.gen.at(r, c) * sp.pow_q(c);
        int mapped = img[idx];
        for (int c = 0; c < code.n; ++c) g.at(r, c) = sp.digit(mapped, c);
    }
    return LinearCode::from_generator(g);
}

inline unsigned long long gaussian_binomial(int n, int k, int q) {
    if (k < 0 || k > n) return 0;
    unsigned long long num = 1, den = 1;
    auto qpow_minus1 = [&](int e) {
        unsigned long long p = 1;
        for (int i = 0; i < e; ++i) p *= static_cast<unsigned>(q);
        return p - 1;
    };
    for (int i = 0; i < k; ++i) {
        num *= qpow_minus1(n - i);
        den *= qpow_minus1(i + 1);
        unsigned long long g = std::gcd(num, den);
        num /= g;
        den /= g;
    }
    return num / den;
}

// All k-dimensional subspaces, one canonical echelon generator each: pick the
// pivot columns, then run through every filling of the free entries.
inline std::vector<LinearCode> enumerate_subspaces(int n, int q, int k, const Caps& caps = {}) {
    if (k < 0 || k > n) throw DomainError("subspace dimension out of range");
    if (gaussian_binomial(n, k, q) > static_cast<unsigned long long>(caps.max_vectors))
        throw CapExceeded("subspace count exceeds the enumeration cap");
    std::vector<LinearCode> out;
    if (k == 0) {
        out.push_back(LinearCode::zero(q, n));
        return out;
    }
    std::vector<int> pivots(k);
    std::function<void(int, int)> pick = [&](int pos, int from) {
        if (pos == k) {
            // Free entries sit right of each pivot, outside later pivot columns.
            std::vector<std::pair<int, int>> free_cells;
            std::vector<bool> is_pivot(n, false);
            for (int p : pivots) is_pivot[p] = true;
            for (int r = 0; r < k; ++r)
                for (int c = pivots[r] + 1; c < n; ++c)
                    if (!is_pivot[c]) free_cells.push_back({r, c});
            long long fills = 1;
            for (std::size_t t = 0; t < free_cells.size(); ++t) fills *= q;
            for (long long code = 0; code < fills; ++code) {
                FqMatrix g(q, k, n);
                for (int r = 0; r < k; ++r) g.at(r, pivots[r]) = 1;
                long long c = code;
                for (auto [r, col] : free_cells) {
                    g.at(r, col) = static_cast<int>(c % q);
                    c /= q;
                }
                out.push_back(LinearCode{q, n, k, std::move(g)});
            }
            return;
        }
        for (int c = from; c <= n - (k - pos); ++c) {
            pivots[pos] = c;
            pick(pos + 1, c + 1);
        }
    };
    pick(0, 0);
    return out;
}

}  // namespace sweights
