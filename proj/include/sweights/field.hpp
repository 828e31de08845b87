#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sweights/errors.hpp"

namespace sweights {

inline bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

struct FieldParams {
    int q;
    explicit FieldParams(int modulus) : q(modulus) {
        if (!is_prime(q)) throw DomainError("field modulus must be prime, got " + std::to_string(q));
    }
};

// An element of F_q^n, entries in [0, q).
struct FqVector {
    int q = 2;
    std::vector<int> entries;

    int n() const { return static_cast<int>(entries.size()); }

    // 1-based indices of the nonzero coordinates.
    std::vector<int> support() const {
        std::vector<int> s;
        for (int i = 0; i < n(); ++i)
            if (entries[i] != 0) s.push_back(i + 1);
        return s;
    }

    bool is_zero() const {
        for (int e : entries)
            if (e != 0) return false;
        return true;
    }

    bool operator==(const FqVector& o) const { return q == o.q && entries == o.entries; }
};

inline FqVector vec_add(const FqVector& a, const FqVector& b) {
    if (a.q != b.q) throw DomainError("vector addition requires a common field");
    if (a.n() != b.n()) throw DomainError("vector addition requires equal lengths");
    FqVector r = a;
    for (int i = 0; i < a.n(); ++i) r.entries[i] = (a.entries[i] + b.entries[i]) % a.q;
    return r;
}

// F_q^n with vectors packed as little-endian base-q indices: digit i holds
// coordinate i+1, so for q = 2 the index doubles as the support bitmask.
class Space {
public:
    Space(int q, int n) : q_(q), n_(n) {
        FieldParams check(q);
        if (n < 0 || n > 22) throw DomainError("vector length out of range: " + std::to_string(n));
        long long sz = 1;
        for (int i = 0; i < n; ++i) {
            sz *= q;
            if (sz > kHardMaxVectors) throw DomainError("q^n exceeds the hard vector ceiling");
        }
        size_ = static_cast<int>(sz);
        pow_.resize(n + 1);
        pow_[0] = 1;
        for (int i = 1; i <= n; ++i) pow_[i] = pow_[i - 1] * q;
        support_.resize(size_);
        ham_.resize(size_);
        for (int x = 0; x < size_; ++x) {
            std::uint32_t m = 0;
            int t = x, h = 0;
            for (int i = 0; i < n; ++i, t /= q)
                if (t % q != 0) { m |= 1u << i; ++h; }
            support_[x] = m;
            ham_[x] = static_cast<std::uint8_t>(h);
        }
        if (q > 2 && size_ <= 512) {
            add_tbl_.resize(static_cast<std::size_t>(size_) * size_);
            for (int a = 0; a < size_; ++a)
                for (int b = 0; b < size_; ++b) add_tbl_[static_cast<std::size_t>(a) * size_ + b] = add_slow(a, b);
        }
        if (q > 2) {
            smul_tbl_.resize(static_cast<std::size_t>(q) * size_);
            for (int s = 0; s < q; ++s)
                for (int x = 0; x < size_; ++x) smul_tbl_[static_cast<std::size_t>(s) * size_ + x] = smul_slow(s, x);
        }
    }

    int q() const { return q_; }
    int n() const { return n_; }
    int size() const { return size_; }
    int pow_q(int i) const { return pow_[i]; }
    int basis(int i) const { return pow_[i]; }

    int digit(int x, int i) const { return (x / pow_[i]) % q_; }

    int add(int a, int b) const {
        if (q_ == 2) return a ^ b;
        if (!add_tbl_.empty()) return add_tbl_[static_cast<std::size_t>(a) * size_ + b];
        return add_slow(a, b);
    }

    int neg(int a) const {
        if (q_ == 2) return a;
        return smul(q_ - 1, a);
    }

    int sub(int a, int b) const { return add(a, neg(b)); }

    int smul(int s, int x) const {
        if (q_ == 2) return s ? x : 0;
        return smul_tbl_[static_cast<std::size_t>(s % q_) * size_ + x];
    }

    std::uint32_t support_mask(int x) const { return support_[x]; }
    int hamming(int x) const { return ham_[x]; }

    // Index of the 0/1 vector whose support is `mask`.
    int indicator(std::uint32_t mask) const {
        int x = 0;
        for (int i = 0; i < n_; ++i)
            if (mask >> i & 1u) x += pow_[i];
        return x;
    }

    FqVector to_vector(int x) const {
        FqVector v{q_, std::vector<int>(n_)};
        for (int i = 0; i < n_; ++i) v.entries[i] = digit(x, i);
        return v;
    }

    int index_of(const FqVector& v) const {
        if (v.q != q_ || v.n() != n_) throw DomainError("vector does not belong to this space");
        int x = 0;
        for (int i = 0; i < n_; ++i) {
            int e = v.entries[i];
            if (e < 0 || e >= q_) throw DomainError("vector entry out of range");
            x += e * pow_[i];
        }
        return x;
    }

    // Visits all indices ordered lexicographically by entries (coordinate 1 most
    // significant), the order external enumerations are specified in.
    template <typename Fn>
    void for_each_lex(Fn&& fn) const {
        std::vector<int> v(n_, 0);
        for (;;) {
            int x = 0;
            for (int i = 0; i < n_; ++i) x += v[i] * pow_[i];
            fn(x);
            int i = n_ - 1;
            while (i >= 0 && v[i] == q_ - 1) v[i--] = 0;
            if (i < 0) break;
            ++v[i];
        }
    }

private:
    int add_slow(int a, int b) const {
        int x = 0;
        for (int i = 0; i < n_; ++i) x += ((a / pow_[i] + b / pow_[i]) % q_) * pow_[i];
        return x;
    }
    int smul_slow(int s, int x) const {
        int r = 0;
        for (int i = 0; i < n_; ++i) r += (s * digit(x, i) % q_) * pow_[i];
        return r;
    }

    int q_, n_, size_ = 1;
    std::vector<int> pow_;
    std::vector<std::uint32_t> support_;
    std::vector<std::uint8_t> ham_;
    std::vector<int> add_tbl_;
    std::vector<int> smul_tbl_;
};

// Shared immutable registry; spaces are cheap but the tables are worth reusing.
inline const Space& get_space(int q, int n) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<Space>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{q, n}];
    if (!slot) slot = std::make_unique<Space>(q, n);
    return *slot;
}

inline std::vector<FqVector> enumerate_vectors(int n, int q, const Caps& caps = {}) {
    const Space& sp = get_space(q, n);
    if (sp.size() > caps.max_vectors || sp.size() > kHardMaxVectors)
        throw CapExceeded("q^n exceeds the vector enumeration cap");
    std::vector<FqVector> out;
    out.reserve(sp.size());
    sp.for_each_lex([&](int x) { out.push_back(sp.to_vector(x)); });
    return out;
}

// Row-major matrix over F_q.
struct FqMatrix {
    int q = 2, rows = 0, cols = 0;
    std::vector<int> a;

    FqMatrix() = default;
    FqMatrix(int q_, int r, int c) : q(q_), rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

    int& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    int at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    bool operator==(const FqMatrix& o) const { return q == o.q && rows == o.rows && cols == o.cols && a == o.a; }

    static FqMatrix identity(int n, int q) {
        FqMatrix m(q, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    FqMatrix mul(const FqMatrix& o) const {
        if (q != o.q || cols != o.rows) throw DomainError("matrix product shape mismatch");
        FqMatrix r(q, rows, o.cols);
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k < cols; ++k) {
                int v = at(i, k);
                if (v == 0) continue;
                for (int j = 0; j < o.cols; ++j) r.at(i, j) = (r.at(i, j) + v * o.at(k, j)) % q;
            }
        return r;
    }

    FqMatrix transpose() const {
        FqMatrix r(q, cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    // Reduced row echelon form, columns eliminated in the given priority
    // order. Returns the rank.
    int rref_in_place(const std::vector<int>& col_order) {
        int piv_row = 0;
        for (int c : col_order) {
            int sel = -1;
            for (int r = piv_row; r < rows; ++r)
                if (at(r, c) != 0) { sel = r; break; }
            if (sel < 0) continue;
            if (sel != piv_row)
                for (int j = 0; j < cols; ++j) std::swap(at(sel, j), at(piv_row, j));
            int inv = mod_inverse(at(piv_row, c));
            for (int j = 0; j < cols; ++j) at(piv_row, j) = at(piv_row, j) * inv % q;
            for (int r = 0; r < rows; ++r) {
                if (r == piv_row || at(r, c) == 0) continue;
                int f = at(r, c);
                for (int j = 0; j < cols; ++j) at(r, j) = (at(r, j) + (q - f) * at(piv_row, j)) % q;
            }
            if (++piv_row == rows) break;
        }
        return piv_row;
    }

    int rref_in_place() {
        std::vector<int> order(cols);
        for (int j = 0; j < cols; ++j) order[j] = j;
        return rref_in_place(order);
    }

    FqMatrix rref() const {
        FqMatrix r = *this;
        r.rref_in_place();
        return r;
    }

    int rank() const {
        FqMatrix r = *this;
        return r.rref_in_place();
    }

    // Basis of { x : M x^T = 0 }, rows in reduced echelon form.
    FqMatrix null_space() const {
        FqMatrix r = rref();
        std::vector<int> pivot_col;
        std::vector<bool> is_pivot(cols, false);
        for (int row = 0; row < rows; ++row) {
            int c = 0;
            while (c < cols && r.at(row, c) == 0) ++c;
            if (c == cols) break;
            pivot_col.push_back(c);
            is_pivot[c] = true;
        }
        FqMatrix ns(q, 0, cols);
        for (int f = 0; f < cols; ++f) {
            if (is_pivot[f]) continue;
            std::vector<int> x(cols, 0);
            x[f] = 1;
            for (std::size_t row = 0; row < pivot_col.size(); ++row)
                x[pivot_col[row]] = (q - r.at(static_cast<int>(row), f)) % q;
            ns.a.insert(ns.a.end(), x.begin(), x.end());
            ++ns.rows;
        }
        ns.rref_in_place();
        return ns;
    }

    std::optional<FqMatrix> inverse() const {
        if (rows != cols) return std::nullopt;
        FqMatrix aug(q, rows, 2 * cols);
        for (int i = 0; i < rows; ++i) {
            for (int j = 0; j < cols; ++j) aug.at(i, j) = at(i, j);
            aug.at(i, cols + i) = 1;
        }
        std::vector<int> order(cols);
        for (int j = 0; j < cols; ++j) order[j] = j;
        if (aug.rref_in_place(order) != rows) return std::nullopt;
        FqMatrix inv(q, rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) inv.at(i, j) = aug.at(i, cols + j);
        return inv;
    }

    int mod_inverse(int v) const {
        v %= q;
        for (int t = 1; t < q; ++t)
            if (v * t % q == 1) return t;
        throw DomainError("no inverse for 0");
    }
};

// Invertible-or-not linear endomorphism of F_q^n; columns are basis images.
struct LinearMap {
    FqMatrix mat;
    bool invertible = false;

    LinearMap() = default;
    explicit LinearMap(FqMatrix m) : mat(std::move(m)) {
        if (mat.rows != mat.cols) throw DomainError("linear map matrix must be square");
        invertible = mat.rank() == mat.rows;
    }

    int n() const { return mat.rows; }
    bool operator==(const LinearMap& o) const { return mat == o.mat; }
};

inline LinearMap compose(const LinearMap& f, const LinearMap& g) { return LinearMap(f.mat.mul(g.mat)); }

// img[x] = index of M(x); built in O(q^n) by extending one digit at a time.
inline std::vector<int> image_table(const Space& sp, const FqMatrix& m) {
    if (m.rows != sp.n() || m.cols != sp.n() || m.q != sp.q())
        throw DomainError("image table requires a square matrix over the same space");
    std::vector<int> col_img(sp.n());
    for (int j = 0; j < sp.n(); ++j) {
        int idx = 0;
        for (int i = 0; i < sp.n(); ++i) idx += m.at(i, j) % sp.q() * sp.pow_q(i);
        col_img[j] = idx;
    }
    std::vector<int> img(sp.size());
    img[0] = 0;
    for (int i = 0; i < sp.n(); ++i) {
        int block = sp.pow_q(i);
        for (int s = 1; s < sp.q(); ++s) {
            int base = sp.smul(s, col_img[i]);
            for (int x = 0; x < block; ++x) img[s * block + x] = sp.add(base, img[x]);
        }
    }
    return img;
}

// Packs the entries base q; collision-free for the desk scales we enumerate at.
inline std::uint64_t matrix_key(const FqMatrix& m) {
    std::uint64_t key = 0, scale = 1;
    for (int v : m.a) {
        if (scale > (~0ULL) / (static_cast<std::uint64_t>(m.q) * 2)) throw DomainError("matrix too large to key");
        key += static_cast<std::uint64_t>(v) * scale;
        scale *= static_cast<std::uint64_t>(m.q);
    }
    return key;
}

inline FqMatrix matrix_from_key(std::uint64_t key, int q, int rows, int cols) {
    FqMatrix m(q, rows, cols);
    for (int& v : m.a) {
        v = static_cast<int>(key % static_cast<std::uint64_t>(q));
        key /= static_cast<std::uint64_t>(q);
    }
    return m;
}

inline unsigned long long gl_order(int n, int q) {
    unsigned long long qn = 1;
    for (int i = 0; i < n; ++i) {
        if (qn > (1ULL << 62) / static_cast<unsigned>(q)) return ~0ULL;
        qn *= static_cast<unsigned>(q);
    }
    unsigned long long total = 1, qi = 1;
    for (int i = 0; i < n; ++i, qi *= static_cast<unsigned>(q)) {
        unsigned long long factor = qn - qi;
        if (total > (~0ULL) / factor) return ~0ULL;
        total *= factor;
    }
    return total;
}

// Visits every invertible n x n matrix over F_q exactly once, extending a
// linearly independent column list depth-first (columns tried in index order).
template <typename Fn>
void for_each_invertible(const Space& sp, Fn&& fn, const Caps& caps = {}) {
    if (gl_order(sp.n(), sp.q()) > static_cast<unsigned long long>(std::min(caps.max_gl, kHardMaxGl)))
        throw CapExceeded("|GL(n,q)| exceeds the enumeration cap");
    int n = sp.n();
    std::vector<int> cols(n);
    std::vector<char> in_span(sp.size(), 0);
    in_span[0] = 1;
    std::vector<int> span_list{0};

    auto emit = [&]() {
        FqMatrix m(sp.q(), n, n);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) m.at(i, j) = sp.digit(cols[j], i);
        fn(m);
    };

    std::function<void(int)> rec = [&](int r) {
        if (r == n) {
            emit();
            return;
        }
        for (int c = 1; c < sp.size(); ++c) {
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
        emit();
    else
        rec(0);
}

inline std::vector<LinearMap> invertible_maps(int n, int q, const Caps& caps = {}) {
    std::vector<LinearMap> out;
    for_each_invertible(get_space(q, n), [&](const FqMatrix& m) { out.push_back(LinearMap(m)); }, caps);
    return out;
}

}  // namespace sweights
