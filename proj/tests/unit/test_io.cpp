#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <random>

#include "sweights/criteria_table.hpp"
#include "sweights/dot_export.hpp"
#include "sweights/json_io.hpp"

using namespace sweights;

TEST_CASE("vector json round trip") {
    std::mt19937 rng(13);
    for (int q : {2, 3, 5}) {
        std::uniform_int_distribution<int> entry(0, q - 1);
        for (int trial = 0; trial < 20; ++trial) {
            FqVector v{q, {entry(rng), entry(rng), entry(rng)}};
            CHECK(vector_from_json(vector_to_json(v)) == v);
        }
    }
    CHECK_THROWS_AS(vector_from_json(json{{"q", 2}, {"entries", {0, 2}}}), ParseError);
    CHECK_THROWS_AS(vector_from_json(json{{"entries", {0, 1}}}), ParseError);
}

TEST_CASE("matrix json round trip") {
    FqMatrix m(3, 2, 3);
    m.at(0, 0) = 1; m.at(0, 2) = 2; m.at(1, 1) = 1;
    CHECK(matrix_from_json(matrix_to_json(m)) == m);
}

TEST_CASE("weight table json uses digit-string keys") {
    SWeightTable h = hamming_weight(2, 2);
    json j = weight_table_to_json(h);
    CHECK(j["weights"]["00"] == 0);
    CHECK(j["weights"]["01"] == 1);
    CHECK(j["weights"]["10"] == 1);
    CHECK(j["weights"]["11"] == 2);
    CHECK(weight_table_from_json(j) == h);

    j["weights"].erase("11");
    CHECK_THROWS_AS(weight_table_from_json(j), ParseError);
}

TEST_CASE("weight table round trips on random tables") {
    std::mt19937 rng(19);
    for (int trial = 0; trial < 25; ++trial) {
        SWeightTable wt = random_valid_table(2, 3, rng);
        CHECK(weight_table_from_json(weight_table_to_json(wt)) == wt);
    }
    for (int trial = 0; trial < 10; ++trial) {
        SWeightTable wt = random_valid_table(3, 2, rng);
        CHECK(weight_table_from_json(weight_table_to_json(wt)) == wt);
    }
}

TEST_CASE("poset json accepts cover relations and closes them") {
    json j{{"m", 3}, {"relations", {{1, 2}, {2, 3}}}};
    Poset p = poset_from_json(j);
    CHECK(p.leq(0, 2));
    CHECK(poset_from_json(poset_to_json(p)) == p);
    CHECK_THROWS_AS(poset_from_json(json{{"m", 2}, {"relations", {{1, 2}, {2, 1}}}}), ParseError);
}

TEST_CASE("lpb structure json round trip") {
    json j{{"q", 2}, {"m", 2}, {"n", 3}, {"relations", {{1, 2}}}, {"pi", {1, 1, 2}}, {"L", {1, 2}}};
    LpbStructure s = lpb_from_json(j);
    CHECK(s.m() == 2);
    CHECK(s.block_size(0) == 2);
    CHECK(lpb_from_json(lpb_to_json(s)).pi == s.pi);
    CHECK_THROWS_AS(lpb_from_json(json{{"q", 2}, {"m", 2}, {"relations", json::array()},
                                       {"pi", {1, 1}}, {"L", {1, 0}}}),
                    ParseError);
}

TEST_CASE("code json round trip") {
    json j{{"q", 2}, {"n", 3}, {"generator", {{1, 0, 1}, {0, 1, 1}}}};
    LinearCode c = code_from_json(j);
    CHECK(c.k == 2);
    CHECK(code_from_json(code_to_json(c)) == c);
}

TEST_CASE("ordering and catalog json round trip") {
    CriterionCatalog cat = enumerate_criteria(2, 2, false);
    CriterionCatalog back = catalog_from_json(catalog_to_json(cat));
    REQUIRE(back.size() == cat.size());
    for (std::size_t i = 0; i < cat.size(); ++i) CHECK(back.classes[i].ranks == cat.classes[i].ranks);
}

TEST_CASE("catalog disk cache reproduces the computed catalog") {
    std::filesystem::path dir = std::filesystem::temp_directory_path() / "sweights_cache_test";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    Caps caps;
    caps.cache_dir = dir.string();
    CriterionCatalog first = enumerate_criteria_cached(2, 2, false, caps);
    CHECK(std::filesystem::exists(dir / "criteria_n2_q2_full.json"));
    CriterionCatalog second = enumerate_criteria_cached(2, 2, false, caps);
    REQUIRE(second.size() == first.size());
    for (std::size_t i = 0; i < first.size(); ++i) CHECK(second.classes[i].ranks == first.classes[i].ranks);
    std::filesystem::remove_all(dir);
}

TEST_CASE("derivation trees serialize generators and conditions") {
    ReachabilityReport rep = reach_all(2, 2);
    auto id = classify_into_catalog(rep.catalog, make_table(2, 2, {0, 1, 2, 3}));
    REQUIRE(id.has_value());
    json tree = derivation_to_json(rep, *id);
    CHECK(tree["op"] == "sum");
    CHECK(tree.contains("condition"));
    CHECK(tree["left"].contains("op"));
}

TEST_CASE("cube dot export ranks vertices by hamming weight") {
    std::string dot = cube_to_dot(cube_from_sweight(hamming_weight(2, 2)));
    CHECK(dot.find("rankdir=BT") != std::string::npos);
    CHECK(dot.find("\"00\" -> \"10\" [label=\"1\"]") != std::string::npos);
    CHECK(dot.find("rank=same") != std::string::npos);
}

TEST_CASE("hasse dot export labels blocks") {
    LpbStructure s = make_lpb(Poset::from_relations(2, {{1, 2}}), {0, 1, 1}, {1, 2}, 2);
    std::string dot = lpb_to_dot(s);
    CHECK(dot.find("1: L=1, k=1") != std::string::npos);
    CHECK(dot.find("2: L=2, k=2") != std::string::npos);
    CHECK(dot.find("v1 -> v2") != std::string::npos);
}

TEST_CASE("criteria table regenerates the expected family pattern") {
    CriteriaTable t = decoding_criteria_table_f22();
    REQUIRE(t.rows.size() == 4);
    CHECK(t.class_count == 4);
    CHECK(t.matches_expected);
    CHECK(t.rows[0].flags.hamming);
    CHECK_FALSE(t.rows[3].flags.digraph);
    CHECK(t.render().find("✓") != std::string::npos);
}
