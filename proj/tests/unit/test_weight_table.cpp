#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "sweights/families.hpp"
#include "sweights/weight_table.hpp"

using namespace sweights;

namespace {

// (wt(10), wt(01), wt(11)) with wt(00) = 0, in index order 00,10,01,11.
SWeightTable table22(int w10, int w01, int w11) {
    return make_table(2, 2, {0, w10, w01, w11});
}

}  // namespace

TEST_CASE("hamming table is a valid S-weight") {
    CHECK(validate_sweight(hamming_weight(2, 2)).ok);
    CHECK(validate_sweight(hamming_weight(3, 3)).ok);
}

TEST_CASE("monotonicity violations are reported with the offending pair") {
    SWeightTable bad = table22(2, 1, 1);
    SWeightReport rep = validate_sweight(bad);
    REQUIRE_FALSE(rep.ok);
    CHECK(rep.kind == SWeightReport::Kind::monotonicity);
    const Space& sp = bad.space();
    CHECK(sp.support_mask(rep.u) == 1u);  // first lex violation: 10 against 11
    CHECK(sp.support_mask(rep.v) == 3u);
}

TEST_CASE("weights must vanish exactly at zero") {
    SWeightTable zero_at_01 = table22(1, 0, 1);
    SWeightReport rep = validate_sweight(zero_at_01);
    REQUIRE_FALSE(rep.ok);
    CHECK(rep.kind == SWeightReport::Kind::zero_at_nonzero);

    SWeightTable nonzero_at_zero = make_table(2, 1, {1, 1});
    CHECK(validate_sweight(nonzero_at_zero).kind == SWeightReport::Kind::nonzero_at_zero);
}

TEST_CASE("same support forces equal weight when q > 2") {
    SWeightTable t = hamming_weight(2, 3);
    t.w[t.space().index_of(FqVector{3, {2, 0}})] = 5;  // differs from wt(10)
    CHECK_FALSE(validate_sweight(t).ok);
}

TEST_CASE("equivalence is the equality of induced orderings") {
    SWeightTable h = hamming_weight(2, 2);
    SWeightTable doubled = h;
    for (int& v : doubled.w) v *= 2;
    CHECK(are_equivalent(h, doubled));

    SWeightTable pb = table22(1, 1, 1);   // single block: constant on nonzero
    SWeightTable dg = table22(2, 2, 2);   // 2-cycle closure: constant 2
    CHECK(are_equivalent(pb, dg));

    Poset chain = Poset::from_relations(2, {{1, 2}});
    CHECK_FALSE(are_equivalent(h, poset_weight(chain, 2)));
}

TEST_CASE("orderings expose ranked levels with zero alone at the bottom") {
    WeightOrdering ord = ordering_of(table22(1, 2, 3));
    CHECK(ord.levels == 4);
    auto levels = ordering_levels(ord);
    REQUIRE(levels.size() == 4);
    CHECK(levels[0].size() == 1);
    CHECK(levels[0][0].is_zero());
    CHECK(levels[1][0].entries == std::vector<int>{1, 0});
    CHECK(levels[2][0].entries == std::vector<int>{0, 1});
}

TEST_CASE("rescaled semi-metric values") {
    SECTION("hamming shift") {
        RescaledMetric d = rescale_to_metric(hamming_weight(2, 2));
        const Space& sp = d.wt.space();
        CHECK(d(sp.index_of(FqVector{2, {0, 0}}), sp.index_of(FqVector{2, {1, 1}})) == 4);
        for (int u = 0; u < sp.size(); ++u) CHECK(d(u, u) == 0);
    }
    SECTION("gapped table") {
        RescaledMetric d = rescale_to_metric(table22(1, 1, 3));
        const Space& sp = d.wt.space();
        CHECK(d(sp.index_of(FqVector{2, {1, 0}}), sp.index_of(FqVector{2, {0, 1}})) == 6);
    }
}

TEST_CASE("rescaled metrics satisfy the metric axioms exhaustively") {
    for (int q : {2, 3})
        for (int n = 1; n <= 2; ++n) {
            std::mt19937 rng(17);
            for (int trial = 0; trial < 10; ++trial) {
                SWeightTable wt = random_valid_table(q, n, rng);
                REQUIRE(validate_sweight(wt).ok);
                RescaledMetric d = rescale_to_metric(wt);
                const Space& sp = wt.space();
                for (int u = 0; u < sp.size(); ++u)
                    for (int v = 0; v < sp.size(); ++v) {
                        CHECK((d(u, v) == 0) == (u == v));
                        CHECK(d(u, v) == d(v, u));
                        for (int w = 0; w < sp.size(); ++w) CHECK(d(u, w) <= d(u, v) + d(v, w));
                    }
            }
        }
}

TEST_CASE("random tables are valid S-weights") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 200; ++trial) CHECK(validate_sweight(random_valid_table(2, 4, rng)).ok);
    for (int trial = 0; trial < 50; ++trial) CHECK(validate_sweight(random_valid_table(3, 3, rng)).ok);
}
