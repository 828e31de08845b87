#pragma once

#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sweights/codes.hpp"
#include "sweights/condsum.hpp"
#include "sweights/families.hpp"
#include "sweights/linear_code.hpp"
#include "sweights/lpb.hpp"
#include "sweights/oracles.hpp"
#include "sweights/weight_table.hpp"

namespace sweights {

using json = nlohmann::json;

namespace jio {

inline const json& need(const json& j, const char* field) {
    if (!j.is_object() || !j.contains(field)) throw ParseError(std::string("missing field \"") + field + "\"");
    return j.at(field);
}

inline int need_int(const json& j, const char* field) {
    const json& v = need(j, field);
    if (!v.is_number_integer()) throw ParseError(std::string("field \"") + field + "\" must be an integer");
    return v.get<int>();
}

inline std::vector<std::pair<int, int>> need_pairs(const json& j, const char* field) {
    const json& v = need(j, field);
    if (!v.is_array()) throw ParseError(std::string("field \"") + field + "\" must be an array of pairs");
    std::vector<std::pair<int, int>> out;
    for (const json& p : v) {
        if (!p.is_array() || p.size() != 2) throw ParseError(std::string("entries of \"") + field + "\" must be pairs");
        out.push_back({p[0].get<int>(), p[1].get<int>()});
    }
    return out;
}

}  // namespace jio

// Digit strings put coordinate 1 first: "01" is the vector (0, 1).
inline std::string vector_string(const Space& sp, int index) {
    if (sp.q() > 9) throw DomainError("digit strings need q <= 9");
    std::string s(sp.n(), '0');
    for (int i = 0; i < sp.n(); ++i) s[i] = static_cast<char>('0' + sp.digit(index, i));
    return s;
}

inline int parse_vector_string(const Space& sp, const std::string& s) {
    if (static_cast<int>(s.size()) != sp.n()) throw ParseError("vector string has the wrong length: " + s);
    int idx = 0;
    for (int i = 0; i < sp.n(); ++i) {
        int d = s[i] - '0';
        if (d < 0 || d >= sp.q()) throw ParseError("vector digit out of range: " + s);
        idx += d * sp.pow_q(i);
    }
    return idx;
}

inline json vector_to_json(const FqVector& v) {
    return json{{"q", v.q}, {"n", v.n()}, {"entries", v.entries}};
}

inline FqVector vector_from_json(const json& j) {
    FqVector v{jio::need_int(j, "q"), jio::need(j, "entries").get<std::vector<int>>()};
    FieldParams check(v.q);
    if (j.contains("n") && jio::need_int(j, "n") != v.n()) throw ParseError("entry count disagrees with n");
    for (int e : v.entries)
        if (e < 0 || e >= v.q) throw ParseError("vector entry out of range");
    return v;
}

inline json matrix_to_json(const FqMatrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows; ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols; ++c) row.push_back(m.at(r, c));
        rows.push_back(std::move(row));
    }
    return json{{"q", m.q}, {"rows", m.rows}, {"cols", m.cols}, {"entries", rows}};
}

inline FqMatrix matrix_from_json(const json& j) {
    int q = jio::need_int(j, "q");
    FieldParams check(q);
    const json& rows = jio::need(j, "entries");
    if (!rows.is_array()) throw ParseError("matrix entries must be an array of rows");
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? (j.contains("cols") ? jio::need_int(j, "cols") : 0) : static_cast<int>(rows[0].size());
    FqMatrix m(q, r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw ParseError("ragged matrix rows");
        for (int jj = 0; jj < c; ++jj) {
            int v = rows[i][jj].get<int>();
            if (v < 0 || v >= q) throw ParseError("matrix entry out of range");
            m.at(i, jj) = v;
        }
    }
    return m;
}

inline json weight_table_to_json(const SWeightTable& wt) {
    const Space& sp = wt.space();
    json weights = json::object();
    sp.for_each_lex([&](int x) { weights[vector_string(sp, x)] = wt.w[x]; });
    return json{{"q", wt.q}, {"n", wt.n}, {"weights", std::move(weights)}};
}

inline SWeightTable weight_table_from_json(const json& j) {
    int q = jio::need_int(j, "q"), n = jio::need_int(j, "n");
    FieldParams check(q);
    const Space& sp = get_space(q, n);
    const json& weights = jio::need(j, "weights");
    if (!weights.is_object()) throw ParseError("weights must map vector strings to integers");
    if (static_cast<int>(weights.size()) != sp.size()) throw ParseError("weight table must cover all q^n vectors");
    std::vector<int> w(sp.size());
    for (auto it = weights.begin(); it != weights.end(); ++it) {
        if (!it.value().is_number_integer()) throw ParseError("weight values must be integers");
        w[parse_vector_string(sp, it.key())] = it.value().get<int>();
    }
    return SWeightTable{q, n, std::move(w)};
}

inline json poset_to_json(const Poset& p) {
    json rel = json::array();
    for (auto [a, b] : p.cover_relations()) rel.push_back(json::array({a, b}));
    return json{{"m", p.m()}, {"relations", std::move(rel)}};
}

inline Poset poset_from_json(const json& j) {
    int m = jio::need_int(j, "m");
    try {
        return Poset::from_relations(m, jio::need_pairs(j, "relations"));
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

inline CoveringFamily covering_from_json(const json& j) {
    int n = jio::need_int(j, "n");
    const json& members = jio::need(j, "members");
    std::vector<std::vector<int>> lists;
    for (const json& mem : members) lists.push_back(mem.get<std::vector<int>>());
    try {
        return CoveringFamily::from_lists(n, lists);
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

inline Digraph digraph_from_json(const json& j) {
    int n = jio::need_int(j, "n");
    try {
        return Digraph::from_arcs(n, jio::need_pairs(j, "arcs"));
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

inline json lpb_to_json(const LpbStructure& s) {
    json pi = json::array();
    for (int b : s.pi) pi.push_back(b + 1);
    json j = poset_to_json(s.poset);
    j["q"] = s.q;
    j["n"] = s.n();
    j["pi"] = std::move(pi);
    j["L"] = s.labels;
    return j;
}

inline LpbStructure lpb_from_json(const json& j) {
    Poset p = poset_from_json(j);
    int q = jio::need_int(j, "q");
    std::vector<int> pi = jio::need(j, "pi").get<std::vector<int>>();
    std::vector<int> labels = jio::need(j, "L").get<std::vector<int>>();
    if (j.contains("n") && jio::need_int(j, "n") != static_cast<int>(pi.size()))
        throw ParseError("pi length disagrees with n");
    for (int& b : pi) --b;  // 1-based on disk
    try {
        FieldParams check(q);
        return make_lpb(std::move(p), std::move(pi), std::move(labels), q);
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

inline json code_to_json(const LinearCode& c) {
    json j = matrix_to_json(c.gen);
    return json{{"q", c.q}, {"n", c.n}, {"k", c.k}, {"generator", j["entries"]}};
}

inline LinearCode code_from_json(const json& j) {
    int q = jio::need_int(j, "q"), n = jio::need_int(j, "n");
    json m{{"q", q}, {"cols", n}, {"entries", jio::need(j, "generator")}};
    FqMatrix gen = matrix_from_json(m);
    if (gen.rows > 0 && gen.cols != n) throw ParseError("generator width disagrees with n");
    gen.cols = gen.rows == 0 ? n : gen.cols;
    return LinearCode::from_generator(gen);
}

inline json enumerator_to_json(const WeightEnumerator& e) {
    return json{{"coefficients", e.coeff}, {"polynomial", e.to_string()}};
}

inline json ordering_to_json(const WeightOrdering& ord) {
    const Space& sp = get_space(ord.q, ord.n);
    std::vector<std::vector<std::string>> levels(ord.levels);
    sp.for_each_lex([&](int x) { levels[ord.ranks[x]].push_back(vector_string(sp, x)); });
    return json{{"q", ord.q}, {"n", ord.n}, {"levels", levels}};
}

inline WeightOrdering ordering_from_json(const json& j) {
    int q = jio::need_int(j, "q"), n = jio::need_int(j, "n");
    const Space& sp = get_space(q, n);
    const json& levels = jio::need(j, "levels");
    if (!levels.is_array()) throw ParseError("levels must be an array of vector-string arrays");
    std::vector<int> ranks(sp.size(), -1);
    for (std::size_t lev = 0; lev < levels.size(); ++lev)
        for (const json& vs : levels[lev]) ranks[parse_vector_string(sp, vs.get<std::string>())] = static_cast<int>(lev);
    for (int r : ranks)
        if (r < 0) throw ParseError("levels must cover every vector");
    return WeightOrdering{q, n, std::move(ranks), static_cast<int>(levels.size())};
}

inline json catalog_to_json(const CriterionCatalog& cat) {
    json classes = json::array();
    for (const WeightOrdering& ord : cat.classes) classes.push_back(ordering_to_json(ord));
    return json{{"n", cat.n}, {"q", cat.q}, {"quotiented", cat.quotiented}, {"classes", std::move(classes)}};
}

inline CriterionCatalog catalog_from_json(const json& j) {
    CriterionCatalog cat;
    cat.n = jio::need_int(j, "n");
    cat.q = jio::need_int(j, "q");
    cat.quotiented = jio::need(j, "quotiented").get<bool>();
    const Space& sp = get_space(cat.q, cat.n);
    for (const json& cj : jio::need(j, "classes")) cat.classes.push_back(ordering_from_json(cj));
    for (std::size_t i = 0; i < cat.classes.size(); ++i) {
        std::vector<int> fp = cat.quotiented ? detail::quotient_fingerprint(sp, cat.classes[i].ranks)
                                             : cat.classes[i].ranks;
        cat.index.emplace(std::move(fp), static_cast<int>(i));
    }
    return cat;
}

// Write-once read-many disk cache, one file per parameter triple.
inline CriterionCatalog enumerate_criteria_cached(int n, int q, bool quotient, const Caps& caps) {
    if (caps.cache_dir.empty()) return enumerate_criteria(n, q, quotient, caps);
    std::string path = caps.cache_dir + "/criteria_n" + std::to_string(n) + "_q" + std::to_string(q) +
                       (quotient ? "_quotiented" : "_full") + ".json";
    {
        std::ifstream in(path);
        if (in) {
            json j;
            in >> j;
            return catalog_from_json(j);
        }
    }
    CriterionCatalog cat = enumerate_criteria(n, q, quotient, caps);
    std::ofstream out(path);
    if (out) out << catalog_to_json(cat).dump(1) << "\n";
    return cat;
}

inline json condition_to_json(const ConditionInfo& c) {
    switch (c.type) {
        case ConditionInfo::Type::hamming_ge: return json{{"type", "hamming_ge"}, {"k", c.k}};
        case ConditionInfo::Type::left_ge: return json{{"type", "left_ge"}, {"k", c.k}};
        default: {
            json masks = json::array();
            for (std::uint32_t m : c.upset) {
                json members = json::array();
                for (int i = 0; i < 30; ++i)
                    if (m >> i & 1u) members.push_back(i + 1);
                masks.push_back(std::move(members));
            }
            return json{{"type", "upset"}, {"supports", std::move(masks)}};
        }
    }
}

inline json generator_to_json(const GeneratorInfo& g) {
    if (g.family == GeneratorInfo::Family::poset) {
        json rel = json::array();
        for (auto [a, b] : g.poset_relations) rel.push_back(json::array({a, b}));
        return json{{"op", "generator"}, {"family", "poset"}, {"relations", std::move(rel)}};
    }
    return json{{"op", "generator"}, {"family", "combinatorial"}, {"members", g.covering_members}};
}

// Left-leaning derivation tree ending at the class `cls`.
inline json derivation_to_json(const ReachabilityReport& rep, int cls) {
    const DerivationStep& step = rep.step[cls];
    if (step.parent_class < 0) return generator_to_json(rep.generators[step.generator]);
    json parent = derivation_to_json(rep, step.parent_class);
    json gen = generator_to_json(rep.generators[step.generator]);
    json left = step.generator_on_left ? std::move(gen) : std::move(parent);
    json right = step.generator_on_left ? std::move(parent) : std::move(gen);
    return json{{"op", "sum"},
                {"condition", condition_to_json(step.cond)},
                {"left", std::move(left)},
                {"right", std::move(right)}};
}

}  // namespace sweights
