#include <catch2/catch_amalgamated.hpp>

#include "sweights/poset.hpp"

using namespace sweights;

namespace {

Poset chain3() { return Poset::from_relations(3, {{1, 2}, {2, 3}}); }
Poset vee() { return Poset::from_relations(3, {{1, 3}, {2, 3}}); }

}  // namespace

TEST_CASE("relations are closed transitively and checked for antisymmetry") {
    Poset c = chain3();
    CHECK(c.leq(0, 2));  // 1 below 3 through 2
    CHECK_FALSE(c.leq(2, 0));
    CHECK_THROWS_AS(Poset::from_relations(2, {{1, 2}, {2, 1}}), DomainError);
}

TEST_CASE("generated ideals") {
    Poset anti(3);
    CHECK(anti.ideal(0b010) == 0b010);
    CHECK(chain3().ideal(0b100) == 0b111);
    CHECK(vee().ideal(0b011) == 0b011);
    CHECK(chain3().ideal(0) == 0);
}

TEST_CASE("ideal closure is idempotent and maximal elements regenerate ideals") {
    for (int m = 1; m <= 3; ++m)
        for (const Poset& p : enumerate_posets(m))
            for (std::uint32_t a = 0; a < (1u << m); ++a) {
                std::uint32_t ideal = p.ideal(a);
                CHECK(p.ideal(ideal) == ideal);
                CHECK(p.ideal(p.maximal_elements(ideal)) == ideal);
            }
}

TEST_CASE("maximal elements") {
    CHECK(chain3().maximal_elements(0b111) == 0b100);
    Poset anti(3);
    CHECK(anti.maximal_elements(0b101) == 0b101);
    CHECK(vee().maximal_elements(0b011) == 0b011);
}

TEST_CASE("heights and levels") {
    LevelPartition lc = heights_and_levels(chain3());
    CHECK(lc.levels == std::vector<std::vector<int>>{{1}, {2}, {3}});

    LevelPartition la = heights_and_levels(Poset(3));
    CHECK(la.poset_height() == 1);
    CHECK(la.levels[0] == std::vector<int>{1, 2, 3});

    LevelPartition lv = heights_and_levels(vee());
    CHECK(lv.levels == std::vector<std::vector<int>>{{1, 2}, {3}});
}

TEST_CASE("hierarchical posets") {
    CHECK(is_hierarchical(vee()));
    CHECK(is_hierarchical(Poset(3)));
    CHECK(is_hierarchical(chain3()));
    // chain of two next to an isolated point: levels {1,3} and {2}, 3 not below 2
    Poset mixed = Poset::from_relations(3, {{1, 2}});
    CHECK_FALSE(is_hierarchical(mixed));
}

TEST_CASE("dual poset reverses and involutes") {
    Poset anti(3);
    CHECK(dual_poset(anti) == anti);

    Poset c = chain3();
    Poset d = dual_poset(c);
    CHECK(d.leq(2, 0));
    CHECK_FALSE(d.leq(0, 2));
    CHECK(dual_poset(d) == c);

    Poset lam = dual_poset(vee());
    CHECK(lam.leq(2, 0));
    CHECK(lam.leq(2, 1));
}

TEST_CASE("poset enumeration counts") {
    CHECK(enumerate_posets(1).size() == 1);
    CHECK(enumerate_posets(2).size() == 3);
    CHECK(enumerate_posets(3).size() == 19);
    CHECK(enumerate_posets(4).size() == 219);
}

TEST_CASE("cover relations give the transitive reduction") {
    auto covers = chain3().cover_relations();
    CHECK(covers == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});
    CHECK(Poset::from_relations(3, covers) == chain3());
}
