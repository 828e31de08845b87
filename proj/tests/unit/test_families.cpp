#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "sweights/condsum.hpp"
#include "sweights/families.hpp"

using namespace sweights;

TEST_CASE("hamming weight values") {
    SWeightTable h = hamming_weight(4, 2);
    CHECK(h.at(FqVector{2, {1, 0, 1, 1}}) == 3);
    CHECK(h.at(FqVector{2, {0, 0, 0, 0}}) == 0);
    CHECK(hamming_weight(2, 3).at(FqVector{3, {2, 1}}) == 2);
}

TEST_CASE("poset weight counts the generated ideal") {
    Poset chain = Poset::from_relations(2, {{1, 2}});
    SWeightTable wt = poset_weight(chain, 2);
    CHECK(wt.at(FqVector{2, {1, 0}}) == 1);
    CHECK(wt.at(FqVector{2, {0, 1}}) == 2);
    CHECK(wt.at(FqVector{2, {1, 1}}) == 2);
    CHECK(wt.at(FqVector{2, {0, 0}}) == 0);
    CHECK(poset_weight(Poset(3), 2) == hamming_weight(3, 2));
}

TEST_CASE("poset block weight") {
    SECTION("single block of size two is constant one") {
        SWeightTable wt = poset_block_weight(Poset(1), {0, 0}, 2);
        CHECK(wt.w == std::vector<int>{0, 1, 1, 1});
    }
    SECTION("trivial blocks on an antichain reduce to hamming") {
        CHECK(poset_block_weight(Poset(3), {0, 1, 2}, 2) == hamming_weight(3, 2));
    }
    SECTION("chain with trivial blocks reduces to the poset weight") {
        Poset chain = Poset::from_relations(2, {{1, 2}});
        SWeightTable wt = poset_block_weight(chain, {0, 1}, 2);
        CHECK(wt == poset_weight(chain, 2));
        CHECK(wt.at(FqVector{2, {0, 1}}) == 2);
    }
    SECTION("non-surjective block maps are rejected") {
        CHECK_THROWS_AS(poset_block_weight(Poset(2), {0, 0}, 2), DomainError);
    }
}

TEST_CASE("combinatorial weight is the exact minimum cover size") {
    SECTION("singletons give hamming") {
        CoveringFamily f = CoveringFamily::from_lists(2, {{1}, {2}});
        CHECK(combinatorial_weight(f, 2) == hamming_weight(2, 2));
    }
    SECTION("one big set is constant one") {
        CoveringFamily f = CoveringFamily::from_lists(2, {{1, 2}});
        CHECK(combinatorial_weight(f, 2).w == std::vector<int>{0, 1, 1, 1});
    }
    SECTION("overlapping pairs need two members for 101") {
        CoveringFamily f = CoveringFamily::from_lists(3, {{1, 2}, {2, 3}});
        CHECK(combinatorial_weight(f, 2).at(FqVector{2, {1, 0, 1}}) == 2);
    }
    SECTION("non-covering families are rejected") {
        CHECK_THROWS_AS(CoveringFamily::from_lists(2, {{1}}), DomainError);
    }
}

TEST_CASE("digraph weight uses the ancestor closure") {
    SECTION("two-cycle is constant two") {
        Digraph g = Digraph::from_arcs(2, {{1, 2}, {2, 1}});
        CHECK(digraph_weight(g, 2).w == std::vector<int>{0, 2, 2, 2});
    }
    SECTION("arcless digraph gives hamming") {
        CHECK(digraph_weight(Digraph::from_arcs(3, {}), 2) == hamming_weight(3, 2));
    }
    SECTION("a single arc reproduces the chain poset weight") {
        Digraph g = Digraph::from_arcs(2, {{1, 2}});
        SWeightTable wt = digraph_weight(g, 2);
        CHECK(wt.at(FqVector{2, {0, 1}}) == 2);
        CHECK(wt == poset_weight(Poset::from_relations(2, {{1, 2}}), 2));
    }
}

TEST_CASE("digraph condensation to labeled poset blocks") {
    SECTION("two-cycle contracts to one block of size two, label two") {
        LpbStructure s = digraph_to_lpb(Digraph::from_arcs(2, {{1, 2}, {2, 1}}), 2);
        CHECK(s.m() == 1);
        CHECK(s.block_size(0) == 2);
        CHECK(s.labels == std::vector<int>{2});
        CHECK(lpb_weight_table(s) == digraph_weight(Digraph::from_arcs(2, {{1, 2}, {2, 1}}), 2));
    }
    SECTION("arcless digraph condenses to the hamming structure") {
        LpbStructure s = digraph_to_lpb(Digraph::from_arcs(3, {}), 2);
        CHECK(s.m() == 3);
        CHECK(s.labels == std::vector<int>{1, 1, 1});
        CHECK(lpb_weight_table(s) == hamming_weight(3, 2));
    }
    SECTION("single arc condenses to the chain") {
        LpbStructure s = digraph_to_lpb(Digraph::from_arcs(2, {{1, 2}}), 2);
        CHECK(s.m() == 2);
        CHECK(s.labels == std::vector<int>{1, 1});
        CHECK(lpb_weight_table(s) == poset_weight(Poset::from_relations(2, {{1, 2}}), 2));
    }
}

TEST_CASE("condensation matches the digraph weight pointwise") {
    for (int n = 1; n <= 3; ++n)
        for (int q : {2, 3})
            for (const Digraph& g : enumerate_digraphs(n))
                CHECK(lpb_weight_table(digraph_to_lpb(g, q)) == digraph_weight(g, q));
    std::mt19937 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<std::pair<int, int>> arcs;
        for (int a = 1; a <= 4; ++a)
            for (int b = 1; b <= 4; ++b)
                if (a != b && rng() % 2) arcs.push_back({a, b});
        Digraph g = Digraph::from_arcs(4, arcs);
        CHECK(lpb_weight_table(digraph_to_lpb(g, 2)) == digraph_weight(g, 2));
    }
}

TEST_CASE("every family constructor yields valid S-weights") {
    for (int q : {2, 3}) {
        for (int n = 1; n <= 3; ++n) {
            CHECK(validate_sweight(hamming_weight(n, q)).ok);
            for (const Poset& p : enumerate_posets(n)) CHECK(validate_sweight(poset_weight(p, q)).ok);
            for (const Digraph& g : enumerate_digraphs(n)) CHECK(validate_sweight(digraph_weight(g, q)).ok);
            for (const CoveringFamily& f : enumerate_covering_families(n))
                CHECK(validate_sweight(combinatorial_weight(f, q)).ok);
        }
    }
}

TEST_CASE("specializations of all families coincide with hamming") {
    for (int q : {2, 3})
        for (int n = 1; n <= 4; ++n) {
            SWeightTable h = hamming_weight(n, q);
            CHECK(poset_weight(Poset(n), q) == h);
            std::vector<int> trivial(n);
            for (int i = 0; i < n; ++i) trivial[i] = i;
            CHECK(poset_block_weight(Poset(n), trivial, q) == h);
            std::vector<std::vector<int>> singletons(n);
            for (int i = 0; i < n; ++i) singletons[i] = {i + 1};
            CHECK(combinatorial_weight(CoveringFamily::from_lists(n, singletons), q) == h);
            CHECK(digraph_weight(Digraph::from_arcs(n, {}), q) == h);
        }
}

TEST_CASE("criterion classification against the five families") {
    SECTION("hamming-like criterion is in every family") {
        FamilyFlags f = classify_criterion(make_table(2, 2, {0, 1, 1, 2}));
        CHECK(f.hamming);
        CHECK(f.poset);
        CHECK(f.poset_block);
        CHECK(f.combinatorial);
        CHECK(f.digraph);
    }
    SECTION("flat criterion misses poset weights") {
        FamilyFlags f = classify_criterion(make_table(2, 2, {0, 1, 1, 1}));
        CHECK_FALSE(f.hamming);
        CHECK_FALSE(f.poset);
        CHECK(f.poset_block);
        CHECK(f.combinatorial);
        CHECK(f.digraph);
    }
    SECTION("strict chain criterion is outside all five families") {
        FamilyFlags f = classify_criterion(make_table(2, 2, {0, 1, 2, 3}));
        CHECK_FALSE(f.hamming);
        CHECK_FALSE(f.poset);
        CHECK_FALSE(f.poset_block);
        CHECK_FALSE(f.combinatorial);
        CHECK_FALSE(f.digraph);
    }
}
