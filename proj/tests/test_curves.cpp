#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tetra/curves.hpp"
#include "tetra/json_io.hpp"

using namespace tetra;

TEST_CASE("configuration and core point JSON round trips") {
    auto cs = sample_configs(70, 2, {.require_nonzero_edges = true});
    for (const auto& c : cs) {
        TetraConfig back = config_from_json(config_to_json(c));
        for (int sid = 0; sid < kNumSubsets; ++sid)
            CHECK(back.plueckers[static_cast<std::size_t>(sid)] ==
                  c.plueckers[static_cast<std::size_t>(sid)]);
        CorePoint z = core_from_chart(normalize(c));
        CHECK(core_point_from_json(core_point_to_json(z)) == z);
    }
}

TEST_CASE("constant weights: the curve sits still") {
    auto cs = sample_configs(71, 1, {.require_nonzero_edges = true});
    auto res = degenerate_and_limit(cs[0], OneParamWeights{});
    CHECK(res.profile == std::array<int, 3>{4, 6, 4});
    for (int sid = 0; sid < kNumSubsets; ++sid)
        CHECK(projectively_equal(res.limit.plueckers[static_cast<std::size_t>(sid)],
                                 cs[0].plueckers[static_cast<std::size_t>(sid)]));
    // the induced core point is the canonical lift
    CHECK(res.core == core_from_chart(normalize(cs[0])));
}

TEST_CASE("a curve evaluates consistently with its stored coordinates") {
    auto cs = sample_configs(72, 1, {.require_nonzero_edges = true});
    OneParamWeights w{{0, 0, 1, 1}};
    ConfigCurve curve = weight_curve(cs[0], w);
    Rat t0 = rat(3, 5);
    TetraConfig at = curve.eval(t0);
    for (int sid = 0; sid < kNumSubsets; ++sid) {
        const auto& stored = curve.plueckers_t[static_cast<std::size_t>(sid)];
        for (std::size_t j = 0; j < stored.size(); ++j)
            CHECK(stored[j].eval(t0) ==
                  at.plueckers[static_cast<std::size_t>(sid)][j]);
    }
    // the limit exists in the cell and its core satisfies the relations
    auto res = degenerate_and_limit(cs[0], w);
    CHECK(core_point_on_variety(res.core));
    CHECK(res.profile[1] == 1);  // these weights press all six planes together
}

TEST_CASE("weights that push the limit out of the cell are reported") {
    auto cs = sample_configs(73, 1, {.require_nonzero_edges = true});
    OneParamWeights w{{1, 0, 0, 0}};  // every line drops its first coordinate
    CHECK_THROWS_WITH_AS(degenerate_and_limit(cs[0], w),
                         doctest::Contains("normalization coordinate"), std::invalid_argument);
}

TEST_CASE("weights can erase all line distinctions: split fails") {
    auto cs = sample_configs(74, 1, {.require_nonzero_edges = true});
    OneParamWeights w{{0, 1, 1, 1}};  // all lines tend to the first basis direction
    auto res = degenerate_and_limit(cs[0], w);
    CHECK(res.profile[0] == 1);  // not split
}

TEST_CASE("duality: valid configs, reversed profile, involutive") {
    auto cs = sample_configs(75, 3, {});
    for (const auto& c : cs) {
        TetraConfig d = dual_config(c);
        std::string why;
        CHECK_MESSAGE(config_valid(d, &why), why);
        auto np = n_profile(c), nd = n_profile(d);
        CHECK(nd == std::array<int, 3>{np[2], np[1], np[0]});
        TetraConfig dd = dual_config(d);
        for (int sid = 0; sid < kNumSubsets; ++sid)
            CHECK(projectively_equal(dd.plueckers[static_cast<std::size_t>(sid)],
                                     c.plueckers[static_cast<std::size_t>(sid)]));
    }
}

TEST_CASE("minimally split degenerations for every realizable type") {
    const Catalog cat = enumerate_special();
    std::map<std::string, std::string> expected_match{
        {"22,51,22", "DDE"},      {"31,51,22", "CDE"},      {"22,51,31", "CDE"},
        {"31,51,31", "CC*E"},     {"31,42,31", "CC*_nopD"}, {"31,33,31", "CC*_opD"},
    };
    for (const auto& t : realizable_splits()) {
        std::string key = t.lines + "," + t.planes + "," + t.hyperplanes;
        CAPTURE(key);
        auto res = build_split_degeneration(t, 2024);
        REQUIRE(res.has_value());
        CHECK(res->profile == std::array<int, 3>{2, 2, 2});
        std::string why;
        CHECK_MESSAGE(core_point_on_variety(res->core, &why), why);
        auto m = match_against_catalog(res->core, cat);
        REQUIRE(m.has_value());
        CHECK(special_type_name(m->type) == expected_match[key]);
        // deterministic from the seed
        auto res2 = build_split_degeneration(t, 2024);
        CHECK(res2->core == res->core);
    }
    CHECK_FALSE(build_split_degeneration({"22", "42", "22"}, 1).has_value());
    CHECK_FALSE(split_realizable({"22", "33", "22"}));
}

TEST_CASE("generic members of a split curve are nondegenerate tetrahedra") {
    auto res = build_split_degeneration({"22", "51", "22"}, 99);
    REQUIRE(res.has_value());
    for (long num : {1L, 2L, 5L}) {
        TetraConfig c = res->curve.eval(rat(num, 7));
        CHECK(config_valid(c));
        CHECK(n_profile(c) == std::array<int, 3>{4, 6, 4});
        CHECK(is_general_position(c));
    }
}
