#pragma once

#include <array>
#include <sstream>
#include <string>
#include <vector>

#include "sweights/families.hpp"
#include "sweights/oracles.hpp"

namespace sweights {

struct CriteriaRow {
    std::string criterion;
    FamilyFlags flags;
    int catalog_class = -1;
};

struct CriteriaTable {
    std::vector<CriteriaRow> rows;
    std::size_t class_count = 0;
    bool matches_expected = false;

    std::string render() const {
        std::ostringstream out;
        out << "criterion                    hamming  poset  poset-block  combinatorial  digraph\n";
        for (const CriteriaRow& r : rows) {
            std::string c = r.criterion;
            c.resize(29, ' ');
            auto mark = [](bool b) { return b ? "✓" : "·"; };
            out << c << mark(r.flags.hamming) << "        " << mark(r.flags.poset) << "      "
                << mark(r.flags.poset_block) << "            " << mark(r.flags.combinatorial)
                << "              " << mark(r.flags.digraph) << "\n";
        }
        return out.str();
    }
};

// The four decoding criteria of F_2^2 up to coordinate relabeling, classified
// from scratch against the five classical families.  The pinned pattern it is
// compared against: only the hamming-like row lies in every family and the
// strict row lies in none.
inline CriteriaTable decoding_criteria_table_f22(const Caps& caps = {}) {
    CriterionCatalog cat = enumerate_criteria(2, 2, true, caps);

    struct Pattern {
        std::array<int, 4> weights;  // 00, 10, 01, 11
        const char* label;
        FamilyFlags expected;
    };
    const std::vector<Pattern> patterns{
        {{0, 1, 1, 2}, "wt(10) = wt(01) < wt(11)", {true, true, true, true, true}},
        {{0, 1, 1, 1}, "wt(10) = wt(01) = wt(11)", {false, false, true, true, true}},
        {{0, 1, 2, 2}, "wt(10) < wt(01) = wt(11)", {false, true, true, false, true}},
        {{0, 1, 2, 3}, "wt(10) < wt(01) < wt(11)", {false, false, false, false, false}},
    };

    CriteriaTable table;
    table.class_count = cat.size();
    table.matches_expected = cat.size() == patterns.size();
    std::vector<bool> seen(cat.size(), false);
    for (const Pattern& p : patterns) {
        SWeightTable wt = make_table(2, 2, {p.weights[0], p.weights[1], p.weights[2], p.weights[3]});
        CriteriaRow row;
        row.criterion = p.label;
        row.flags = classify_criterion(wt);
        auto id = classify_into_catalog(cat, wt);
        if (id && !seen[*id])
            seen[*id] = true;
        else
            table.matches_expected = false;
        row.catalog_class = id.value_or(-1);
        auto same = [](const FamilyFlags& a, const FamilyFlags& b) {
            return a.hamming == b.hamming && a.poset == b.poset && a.poset_block == b.poset_block &&
                   a.combinatorial == b.combinatorial && a.digraph == b.digraph;
        };
        if (!same(row.flags, p.expected)) table.matches_expected = false;
        table.rows.push_back(std::move(row));
    }
    return table;
}

}  // namespace sweights
