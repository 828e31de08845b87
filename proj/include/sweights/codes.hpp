#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sweights/linear_code.hpp"
#include "sweights/lpb.hpp"

namespace sweights {

struct WeightEnumerator {
    std::vector<long long> coeff;  // coeff[i] = number of codewords of weight i

    bool operator==(const WeightEnumerator& o) const { return coeff == o.coeff; }
    bool operator<(const WeightEnumerator& o) const { return coeff < o.coeff; }

    std::string to_string() const {
        std::ostringstream out;
        bool first = true;
        for (std::size_t i = 0; i < coeff.size(); ++i) {
            if (coeff[i] == 0) continue;
            if (!first) out << " + ";
            first = false;
            if (i == 0)
                out << coeff[i];
            else {
                if (coeff[i] != 1) out << coeff[i];
                out << "X";
                if (i > 1) out << "^" << i;
            }
        }
        if (first) out << "0";
        return out.str();
    }
};

inline WeightEnumerator weight_enumerator(const LinearCode& code, const LpbStructure& s,
                                          const Caps& caps = {}) {
    if (code.q != s.q || code.n != s.n()) throw DomainError("code does not match the structure");
    if (code.size() > caps.max_vectors) throw CapExceeded("codeword enumeration exceeds the cap");
    const Space& sp = s.space();
    SWeightTable wt = lpb_weight_table(s);
    WeightEnumerator e;
    e.coeff.assign(label_sum(s, (1u << s.m()) - 1) + 1, 0);
    for_each_codeword(code, sp, [&](int word) { ++e.coeff[wt.w[word]]; });
    return e;
}

inline bool equivalent_codes(const LinearCode& a, const LinearCode& b, const LpbStructure& s,
                             const Caps& caps = {}) {
    if (a.q != b.q || a.n != b.n) throw DomainError("codes live in different spaces");
    if (a.k != b.k) return false;
    if (a == b) return true;
    const Space& sp = s.space();
    for (const LinearMap& g : enumerate_gl_lpb(s, caps))
        if (apply_map(a, g, sp) == b) return true;
    return false;
}

struct MacWilliamsVerdict {
    bool admits = true;
    std::optional<std::pair<LinearCode, LinearCode>> witness;  // equal primal, different dual enumerators
};

// Functional-dependence reading of "determines": across every [n,k] code,
// equal primal enumerators must force equal dual enumerators, duals taken
// with the dual poset and the same blocks and labels.
inline MacWilliamsVerdict macwilliams_verdict(const LpbStructure& s, int k, const Caps& caps = {}) {
    LpbStructure dual_structure = make_lpb(dual_poset(s.poset), s.pi, s.labels, s.q);
    MacWilliamsVerdict verdict;
    std::map<std::vector<long long>, std::pair<std::vector<long long>, LinearCode>> buckets;
    for (const LinearCode& code : enumerate_subspaces(s.n(), s.q, k, caps)) {
        WeightEnumerator primal = weight_enumerator(code, s, caps);
        WeightEnumerator dual = weight_enumerator(dual_code(code), dual_structure, caps);
        auto it = buckets.find(primal.coeff);
        if (it == buckets.end()) {
            buckets.emplace(primal.coeff, std::make_pair(dual.coeff, code));
        } else if (it->second.first != dual.coeff) {
            verdict.admits = false;
            verdict.witness = std::make_pair(it->second.second, code);
            return verdict;
        }
    }
    return verdict;
}

struct Theorem5Row {
    LpbStructure structure;
    bool udp = false;
    bool admits_all_k = false;
    int failing_k = -1;
};

struct Theorem5Report {
    long long structures = 0;
    long long mismatches = 0;
    long long exchange_mismatches = 0;  // admits(S, all k) vs admits(dual S, all k)
    std::vector<Theorem5Row> mismatch_rows;
};

// Hierarchical structures only: the unique decomposition property must agree
// with the empirical MacWilliams verdict aggregated over every dimension.
inline Theorem5Report theorem5_sweep(int max_m, int max_n, int q, int max_label, const Caps& caps = {}) {
    Theorem5Report report;
    enumerate_lpb_structures(max_m, max_n, {q}, max_label, [&](const LpbStructure& s) {
        if (!is_hierarchical(s.poset)) return;
        ++report.structures;
        bool udp = udp_check(s).ok;
        bool admits_all = true;
        int failing_k = -1;
        for (int k = 0; k <= s.n() && admits_all; ++k)
            if (!macwilliams_verdict(s, k, caps).admits) {
                admits_all = false;
                failing_k = k;
            }
        if (udp != admits_all) {
            ++report.mismatches;
            report.mismatch_rows.push_back({s, udp, admits_all, failing_k});
        }
        LpbStructure dual_structure = make_lpb(dual_poset(s.poset), s.pi, s.labels, s.q);
        bool dual_admits_all = true;
        for (int k = 0; k <= s.n() && dual_admits_all; ++k)
            if (!macwilliams_verdict(dual_structure, k, caps).admits) dual_admits_all = false;
        if (admits_all != dual_admits_all) ++report.exchange_mismatches;
    });
    return report;
}

}  // namespace sweights
