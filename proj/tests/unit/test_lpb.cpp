#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "sweights/families.hpp"
#include "sweights/lpb.hpp"

using namespace sweights;

namespace {

// chain 1 < 2, trivial blocks, labels (1, 2)
LpbStructure chain_labeled(int q = 2) {
    return make_lpb(Poset::from_relations(2, {{1, 2}}), {0, 1}, {1, 2}, q);
}

LpbStructure chain_plain(int q = 2) {
    return make_lpb(Poset::from_relations(2, {{1, 2}}), {0, 1}, {1, 1}, q);
}

LinearMap map_from_cols(int q, std::vector<std::vector<int>> cols) {
    int n = static_cast<int>(cols.size());
    FqMatrix m(q, n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) m.at(i, j) = cols[j][i];
    return LinearMap(std::move(m));
}

}  // namespace

TEST_CASE("structure validation") {
    CHECK_THROWS_AS(make_lpb(Poset(2), {0, 0}, {1, 1}, 2), DomainError);   // block 2 empty
    CHECK_THROWS_AS(make_lpb(Poset(1), {0, 0}, {0}, 2), DomainError);      // zero label
    CHECK_THROWS_AS(make_lpb(Poset(1), {0, 1}, {1}, 2), DomainError);      // pi out of range
}

TEST_CASE("labeled weight values") {
    SECTION("antichain with trivial blocks and unit labels is hamming") {
        LpbStructure s = make_lpb(Poset(3), {0, 1, 2}, {1, 1, 1}, 2);
        CHECK(lpb_weight_table(s) == hamming_weight(3, 2));
    }
    SECTION("single size-two block labeled two is constant two") {
        LpbStructure s = make_lpb(Poset(1), {0, 0}, {2}, 2);
        CHECK(lpb_weight_table(s).w == std::vector<int>{0, 2, 2, 2});
    }
    SECTION("labeled chain sums the ideal labels") {
        CHECK(lpb_weight(chain_labeled(), FqVector{2, {0, 1}}) == 3);
        CHECK(lpb_weight(chain_labeled(), FqVector{2, {1, 0}}) == 1);
        CHECK(lpb_weight(chain_labeled(), FqVector{2, {1, 1}}) == 3);
    }
}

TEST_CASE("labeled distances") {
    LpbStructure s = chain_labeled();
    const Space& sp = s.space();
    for (int u = 0; u < sp.size(); ++u) {
        CHECK(lpb_distance(s, u, u) == 0);
        CHECK(lpb_distance(s, u, 0) == lpb_weight(s, u));
    }
    CHECK(lpb_distance(s, FqVector{2, {1, 0}}, FqVector{2, {0, 1}}) == 3);
}

TEST_CASE("distance axioms hold exhaustively on small structures") {
    enumerate_lpb_structures(2, 3, {2, 3}, 2, [&](const LpbStructure& s) {
        const Space& sp = s.space();
        for (int u = 0; u < sp.size(); ++u)
            for (int v = 0; v < sp.size(); ++v) {
                int duv = lpb_distance(s, u, v);
                CHECK((duv == 0) == (u == v));
                CHECK(duv == lpb_distance(s, v, u));
                for (int w = 0; w < sp.size(); ++w)
                    CHECK(lpb_distance(s, u, w) <= duv + lpb_distance(s, v, w));
            }
        CHECK(validate_sweight(lpb_weight_table(s)).ok);
    });
}

TEST_CASE("structure automorphisms") {
    LpbStructure vee_sym = make_lpb(Poset::from_relations(3, {{1, 3}, {2, 3}}), {0, 1, 2}, {1, 1, 2}, 2);
    CHECK(is_lpb_automorphism(vee_sym, {0, 1, 2}));
    CHECK(is_lpb_automorphism(vee_sym, {1, 0, 2}));
    CHECK_FALSE(is_lpb_automorphism(vee_sym, {2, 1, 0}));

    LpbStructure vee_asym = make_lpb(Poset::from_relations(3, {{1, 3}, {2, 3}}), {0, 1, 2}, {1, 2, 1}, 2);
    CHECK_FALSE(is_lpb_automorphism(vee_asym, {1, 0, 2}));

    LpbStructure size_mismatch = make_lpb(Poset(2), {0, 1, 1}, {1, 1}, 2);
    CHECK_FALSE(is_lpb_automorphism(size_mismatch, {1, 0}));
}

TEST_CASE("automorphism-induced isometries") {
    SECTION("identity induces the identity map") {
        CHECK(automorphism_isometry(chain_labeled(), {0, 1}).mat == FqMatrix::identity(2, 2));
    }
    SECTION("swapping symmetric singleton blocks is the coordinate swap") {
        LpbStructure s = make_lpb(Poset(2), {0, 1}, {1, 1}, 2);
        LinearMap t = automorphism_isometry(s, {1, 0});
        CHECK(t.mat == permutation_map({1, 0}, 2).mat);
    }
    SECTION("the swap preserves the weight on all vectors") {
        LpbStructure s = make_lpb(Poset::from_relations(3, {{1, 3}, {2, 3}}), {0, 1, 2}, {1, 1, 2}, 2);
        LinearMap t = automorphism_isometry(s, {1, 0, 2});
        const Space& sp = s.space();
        SWeightTable wt = lpb_weight_table(s);
        std::vector<int> img = image_table(sp, t.mat);
        for (int x = 0; x < sp.size(); ++x) CHECK(wt.w[img[x]] == wt.w[x]);
    }
    SECTION("non-automorphisms are rejected") {
        CHECK_THROWS_AS(automorphism_isometry(chain_labeled(), {1, 0}), DomainError);
    }
}

TEST_CASE("perturbation subgroup membership") {
    LpbStructure s = chain_plain();
    CHECK(is_n_subgroup_member(s, LinearMap(FqMatrix::identity(2, 2))));
    CHECK(is_n_subgroup_member(s, map_from_cols(2, {{1, 0}, {1, 1}})));   // e2 -> e2 + e1
    CHECK_FALSE(is_n_subgroup_member(s, map_from_cols(2, {{0, 1}, {1, 0}})));  // e1 -> e2 leaves its block
}

TEST_CASE("perturbation subgroup construction matches the predicate") {
    enumerate_lpb_structures(2, 3, {2, 3}, 2, [&](const LpbStructure& s) {
        std::set<std::uint64_t> constructed;
        for_each_n_member(s, 1'000'000, [&](const FqMatrix& m) {
            CHECK(is_n_subgroup_member(s, LinearMap(m)));
            constructed.insert(matrix_key(m));
        });
        CHECK(constructed.size() == n_subgroup_order(s));
    });
}

TEST_CASE("isometry group enumeration for small structures") {
    SECTION("hamming structure at n = 2") {
        LpbStructure s = make_lpb(Poset(2), {0, 1}, {1, 1}, 2);
        CHECK(enumerate_gl_lpb(s).size() == 2);
    }
    SECTION("plain chain has the identity and one shear") {
        CHECK(enumerate_gl_lpb(chain_plain()).size() == 2);
    }
    SECTION("single block of size two admits all of GL") {
        LpbStructure s = make_lpb(Poset(1), {0, 0}, {2}, 2);
        CHECK(enumerate_gl_lpb(s).size() == 6);
    }
}

TEST_CASE("semidirect decomposition on hand-checked structures") {
    SECTION("plain chain: two perturbations, trivial automorphisms") {
        LpbSemidirectReport rep = check_semidirect_lpb(chain_plain());
        CHECK(rep.holds);
        CHECK(rep.gl_size == 2);
        CHECK(rep.n_size == 2);
        CHECK(rep.aut_size == 1);
    }
    SECTION("symmetric antichain: trivial perturbations, the swap") {
        LpbSemidirectReport rep = check_semidirect_lpb(make_lpb(Poset(2), {0, 1}, {1, 1}, 2));
        CHECK(rep.holds);
        CHECK(rep.n_size == 1);
        CHECK(rep.aut_size == 2);
        CHECK(rep.gl_size == 2);
    }
    SECTION("full sweep at m <= 2, n <= 3, q in {2,3}") {
        enumerate_lpb_structures(2, 3, {2, 3}, 2, [&](const LpbStructure& s) {
            LpbSemidirectReport rep = check_semidirect_lpb(s);
            CHECK(rep.holds);
        });
    }
}

TEST_CASE("level-split detection") {
    LpbStructure s = chain_plain();
    CHECK(has_level_split_basis(s, LinearCode::from_generator([&] {
        FqMatrix g(2, 1, 2);
        g.at(0, 1) = 1;
        return g;
    }())));
    CHECK_FALSE(has_level_split_basis(s, LinearCode::from_generator([&] {
        FqMatrix g(2, 1, 2);
        g.at(0, 0) = 1;
        g.at(0, 1) = 1;
        return g;
    }())));
}

TEST_CASE("canonical decomposition on the plain chain") {
    FqMatrix g(2, 1, 2);
    g.at(0, 0) = 1;
    g.at(0, 1) = 1;  // span{11}
    LinearCode code = LinearCode::from_generator(g);
    CanonicalDecomposition dec = canonical_decompose(chain_plain(), code);
    // the image is span{01}, supported in the top level
    CHECK(dec.decomposed.k == 1);
    CHECK(dec.decomposed.gen.at(0, 0) == 0);
    CHECK(dec.decomposed.gen.at(0, 1) == 1);
    CHECK(dec.isometry.mat.at(0, 1) == 1);  // T(e2) = e1 + e2
    CHECK(is_n_subgroup_member(chain_plain(), dec.isometry));
}

TEST_CASE("already decomposed codes get the identity") {
    FqMatrix g(2, 1, 2);
    g.at(0, 1) = 1;
    CanonicalDecomposition dec = canonical_decompose(chain_plain(), LinearCode::from_generator(g));
    CHECK(dec.isometry.mat == FqMatrix::identity(2, 2));

    CanonicalDecomposition zero = canonical_decompose(chain_plain(), LinearCode::zero(2, 2));
    CHECK(zero.decomposed.k == 0);
}

TEST_CASE("hierarchical structures decompose every subspace") {
    LpbStructure vee = make_lpb(Poset::from_relations(3, {{1, 3}, {2, 3}}), {0, 1, 2}, {1, 1, 1}, 2);
    REQUIRE(is_hierarchical(vee.poset));
    for (int k = 0; k <= 3; ++k)
        for (const LinearCode& code : enumerate_subspaces(3, 2, k)) {
            CanonicalDecomposition dec = canonical_decompose(vee, code);
            CHECK(has_level_split_basis(vee, dec.decomposed));
            CHECK(apply_map(code, dec.isometry, vee.space()) == dec.decomposed);
        }
}

TEST_CASE("non-hierarchical structures refuse constructive decomposition") {
    LpbStructure mixed = make_lpb(Poset::from_relations(3, {{1, 2}}), {0, 1, 2}, {1, 1, 1}, 2);
    REQUIRE_FALSE(is_hierarchical(mixed.poset));
    CHECK_THROWS_AS(canonical_decompose(mixed, LinearCode::zero(2, 3)), DomainError);
}

TEST_CASE("brute-force decomposition finds a witness on the broken chain") {
    LpbStructure mixed = make_lpb(Poset::from_relations(3, {{1, 2}}), {0, 1, 2}, {1, 1, 1}, 2);
    bool all_admit = true;
    for (int k = 0; k <= 3 && all_admit; ++k)
        for (const LinearCode& code : enumerate_subspaces(3, 2, k))
            if (!admits_decomposition_bruteforce(mixed, code)) { all_admit = false; break; }
    CHECK_FALSE(all_admit);

    CHECK(admits_decomposition_bruteforce(mixed, LinearCode::zero(2, 3)));
}

TEST_CASE("unique decomposition property") {
    SECTION("unit labels with trivial blocks always satisfy it") {
        LpbStructure s = make_lpb(Poset(3), {0, 1, 2}, {1, 1, 1}, 2);
        CHECK(udp_check(s).ok);
    }
    SECTION("labels 1,1,2 on one level fail with the expected witness") {
        LpbStructure s = make_lpb(Poset(3), {0, 1, 2}, {1, 1, 2}, 2);
        UdpReport rep = udp_check(s);
        REQUIRE_FALSE(rep.ok);
        CHECK(rep.level == 1);
        std::set<int> a(rep.subset_a.begin(), rep.subset_a.end());
        std::set<int> b(rep.subset_b.begin(), rep.subset_b.end());
        CHECK((a == std::set<int>{3} || b == std::set<int>{3}));
        CHECK((a == std::set<int>{1, 2} || b == std::set<int>{1, 2}));
    }
    SECTION("equal labels with unequal block sizes fail") {
        LpbStructure s = make_lpb(Poset(2), {0, 1, 1}, {1, 1}, 2);
        UdpReport rep = udp_check(s);
        REQUIRE_FALSE(rep.ok);
    }
}
