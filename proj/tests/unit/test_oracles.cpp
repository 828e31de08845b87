#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "sweights/condsum.hpp"
#include "sweights/families.hpp"
#include "sweights/oracles.hpp"

using namespace sweights;

namespace {

// Slow independent count: all dense rank assignments on the nonzero vectors,
// filtered for support monotonicity.
int slow_class_count(int n) {
    const Space& sp = get_space(2, n);
    int nonzero = sp.size() - 1;
    std::set<std::vector<int>> classes;
    std::vector<int> rank(nonzero, 1);
    for (;;) {
        bool monotone = true;
        for (int u = 1; u <= nonzero && monotone; ++u)
            for (int v = 1; v <= nonzero; ++v) {
                std::uint32_t su = sp.support_mask(u), sv = sp.support_mask(v);
                if ((su & sv) == su && rank[u - 1] > rank[v - 1]) { monotone = false; break; }
            }
        if (monotone) {
            std::vector<int> values(rank);
            std::sort(values.begin(), values.end());
            values.erase(std::unique(values.begin(), values.end()), values.end());
            std::vector<int> dense(nonzero);
            for (int i = 0; i < nonzero; ++i)
                dense[i] = static_cast<int>(std::lower_bound(values.begin(), values.end(), rank[i]) - values.begin());
            classes.insert(dense);
        }
        int i = 0;
        while (i < nonzero && rank[i] == nonzero) rank[i++] = 1;
        if (i == nonzero) break;
        ++rank[i];
    }
    return static_cast<int>(classes.size());
}

}  // namespace

TEST_CASE("criterion catalog counts") {
    CHECK(enumerate_criteria(1, 2, false).size() == 1);
    CHECK(enumerate_criteria(2, 2, false).size() == 6);
    CHECK(enumerate_criteria(2, 2, true).size() == 4);
    CHECK(enumerate_criteria(3, 2, false).size() == 892);
}

TEST_CASE("catalog counts agree with the slow enumeration") {
    CHECK(slow_class_count(1) == 1);
    CHECK(slow_class_count(2) == 6);
    CHECK(static_cast<int>(enumerate_criteria(2, 2, false).size()) == slow_class_count(2));
}

TEST_CASE("catalog classes are pairwise inequivalent and valid") {
    CriterionCatalog cat = enumerate_criteria(2, 2, false);
    std::set<std::vector<int>> fps;
    for (const WeightOrdering& ord : cat.classes) {
        SWeightTable rep = representative_weight(ord);
        CHECK(validate_sweight(rep).ok);
        fps.insert(ordering_of(rep).ranks);
    }
    CHECK(fps.size() == cat.size());
}

TEST_CASE("representatives are standard-form level indices") {
    CriterionCatalog cat = enumerate_criteria(2, 2, false);
    SWeightTable strict = representative_weight(cat.classes[*classify_into_catalog(
        cat, make_table(2, 2, {0, 3, 7, 9}))]);
    CHECK(strict.w == std::vector<int>{0, 1, 2, 3});

    auto hamming_id = classify_into_catalog(cat, hamming_weight(2, 2));
    REQUIRE(hamming_id.has_value());
    CHECK(representative_weight(cat.classes[*hamming_id]).w == std::vector<int>{0, 1, 1, 2});

    auto flat_id = classify_into_catalog(cat, make_table(2, 2, {0, 5, 5, 5}));
    REQUIRE(flat_id.has_value());
    CHECK(representative_weight(cat.classes[*flat_id]).w == std::vector<int>{0, 1, 1, 1});
}

TEST_CASE("classification round-trips through representatives") {
    for (int n = 1; n <= 3; ++n) {
        CriterionCatalog cat = enumerate_criteria(n, 2, false);
        for (std::size_t i = 0; i < cat.size(); ++i) {
            auto id = classify_into_catalog(cat, representative_weight(cat.classes[i]));
            REQUIRE(id.has_value());
            CHECK(*id == static_cast<int>(i));
        }
    }
}

TEST_CASE("every family table lands in exactly one class") {
    CriterionCatalog cat = enumerate_criteria(3, 2, false);
    for (const Poset& p : enumerate_posets(3))
        CHECK(classify_into_catalog(cat, poset_weight(p, 2)).has_value());
    for (const Digraph& g : enumerate_digraphs(3))
        CHECK(classify_into_catalog(cat, digraph_weight(g, 2)).has_value());
    for (const CoveringFamily& f : enumerate_covering_families(3))
        CHECK(classify_into_catalog(cat, combinatorial_weight(f, 2)).has_value());
}

TEST_CASE("conditional sums land in the catalog too") {
    CriterionCatalog cat = enumerate_criteria(2, 2, false);
    SWeightTable chain = poset_weight(Poset::from_relations(2, {{1, 2}}), 2);
    SWeightTable h = hamming_weight(2, 2);
    for (int k = 0; k <= 3; ++k) {
        CHECK(classify_into_catalog(cat, k_sum(chain, h, k)).has_value());
        CHECK(classify_into_catalog(cat, hk_sum(chain, h, k)).has_value());
    }
}

TEST_CASE("quotient catalog identifies mirrored criteria") {
    CriterionCatalog cat = enumerate_criteria(2, 2, true);
    SWeightTable left = make_table(2, 2, {0, 1, 2, 2});
    SWeightTable right = make_table(2, 2, {0, 2, 1, 2});
    auto a = classify_into_catalog(cat, left);
    auto b = classify_into_catalog(cat, right);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(*a == *b);
}

TEST_CASE("enumeration is capped") {
    CHECK_THROWS_AS(enumerate_criteria(4, 2, false), CapExceeded);
}
