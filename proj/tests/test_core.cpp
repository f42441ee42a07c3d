#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "tetra/core.hpp"
#include "tetra/curves.hpp"

using namespace tetra;

namespace {

const Catalog& catalog() {
    static const Catalog cat = enumerate_special();
    return cat;
}

CorePoint lift_of_sample(std::uint64_t seed) {
    auto cs = sample_configs(seed, 1, {.require_nonzero_edges = true});
    return core_from_chart(normalize(cs[0]));
}

}  // namespace

TEST_CASE("canonical lifts: membership, scaling invariance, no zeros") {
    auto cs = sample_configs(21, 5, {.require_nonzero_edges = true});
    SplitMix64 rng(4);
    for (const auto& c : cs) {
        NormalizedChart ch = normalize(c);
        CorePoint z = core_from_chart(ch);
        CHECK(core_point_on_variety(z));
        for (const auto& q : z.y) CHECK_FALSE(is_zero(q));

        // rescaling x by a constant per rank leaves the projective point
        NormalizedChart scaled = ch;
        std::array<Rat, 4> ck{Rat(0), Rat(rng.range(1, 7)), Rat(rng.range(1, 7)),
                              Rat(rng.range(1, 7))};
        for (const auto& e : all_edges())
            scaled.x[static_cast<std::size_t>(e.index)] *= ck[static_cast<std::size_t>(e.rank)];
        CHECK(core_from_chart(scaled) == z);
    }
}

TEST_CASE("five possible related-triangle patterns") {
    auto cases = allowed_related_patterns();
    CHECK(cases.size() == 5);
    int with_all = 0, matched_one = 0, none_none = 0;
    for (const auto& c : cases) {
        if (c.host_a == TrianglePattern::AllZero || c.host_b == TrianglePattern::AllZero) ++with_all;
        if (c.host_a == TrianglePattern::OneZero && c.host_b == TrianglePattern::OneZero) {
            CHECK(c.matched_position);
            ++matched_one;
        }
        if (c.host_a == TrianglePattern::NoneZero && c.host_b == TrianglePattern::NoneZero)
            ++none_none;
    }
    CHECK(with_all == 3);  // (all,all), (all,one), (all,none)
    CHECK(matched_one == 1);
    CHECK(none_none == 1);
}

TEST_CASE("special locus census") {
    const Catalog& cat = catalog();
    CHECK(cat.isolated_count() == 66);
    CHECK(cat.family_count() == 4);
    std::map<SpecialType, int> sizes;
    for (const auto& [t, n] : cat.orbit_sizes()) sizes[t] = n;
    CHECK(sizes[SpecialType::DDE] == 6);
    CHECK(sizes[SpecialType::CDE] == 24);
    CHECK(sizes[SpecialType::CCstarE] == 24);
    CHECK(sizes[SpecialType::CCstarNopD] == 12);
    CHECK(sizes[SpecialType::CCstarOpD] == 4);
    CHECK(sizes.count(SpecialType::Unclassified) == 0);
}

TEST_CASE("catalog points conform to the five allowed patterns and the relations") {
    for (const auto& r : catalog().records)
        for (const auto& z : r.representatives) {
            std::string why;
            CHECK_MESSAGE(core_point_on_variety(z, &why), why);
            CHECK_MESSAGE(conforms_to_related_patterns(z, &why), why);
        }
}

TEST_CASE("families: one linear relation between the two parameters") {
    int families = 0;
    for (const auto& r : catalog().records) {
        if (r.dimension != 1) continue;
        ++families;
        REQUIRE(r.family.has_value());
        CHECK(r.family->relation.find("u") != std::string::npos);
        CHECK(r.family->relation.find("v") != std::string::npos);
        CHECK(r.representatives.size() >= 3);
        // the family sits at line split (3,1), plane split (3,3)
        CHECK(r.splits[0].type() == "31");
        CHECK(r.splits[1].type() == "33");
        CHECK(r.splits[2].type() == "31");
    }
    CHECK(families == 4);
}

TEST_CASE("certificates: corank 3 everywhere, chart independent, oracle agrees") {
    for (const auto& r : catalog().records)
        for (const auto& z : r.representatives) {
            auto cert = jacobian_certificate(z);
            CHECK(cert.on_variety);
            CHECK(cert.corank == 3);
            CHECK(cert.smooth);
            auto alt = jacobian_certificate_alt_chart(z);
            CHECK(alt.corank == cert.corank);
            auto bound = propagation_bound(z, r.dimension == 1);
            REQUIRE(bound.has_value());
            CHECK(*bound == 3);
        }
}

TEST_CASE("corank 3 at generic lifts; propagation never undercuts") {
    for (std::uint64_t seed = 31; seed < 34; ++seed) {
        CorePoint z = lift_of_sample(seed);
        auto cert = jacobian_certificate(z);
        CHECK(cert.corank == 3);
        auto bound = propagation_bound(z);
        REQUIRE(bound.has_value());
        CHECK(*bound >= cert.corank);
    }
}

TEST_CASE("catalog closed under the symmetry group; value transport works") {
    const Catalog& cat = catalog();
    // pattern closure is what the orbit grouping already walked; check
    // values: transported representatives still satisfy every relation
    // and match a record of the same type
    SplitMix64 rng(12);
    const auto& grp = full_symmetry_group();
    for (const auto& r : cat.records) {
        const auto& g = grp[rng.below(grp.size())];
        CorePoint w = transport(r.representatives[0], g);
        std::string why;
        CHECK_MESSAGE(core_point_on_variety(w, &why), why);
        auto m = match_against_catalog(w, cat);
        REQUIRE(m.has_value());
        CHECK(m->type == r.type);
    }
}

TEST_CASE("transport agrees with relabeling the configuration") {
    auto cs = sample_configs(41, 3, {.require_nonzero_edges = true});
    for (const auto& c : cs) {
        CorePoint z = core_from_chart(normalize(c));
        for (const auto& g : symmetric_group()) {
            // relabel the configuration; its chart may leave the cell, in
            // which case skip (transport is still defined upstairs)
            TetraConfig p;
            for (int sid = 0; sid < kNumSubsets; ++sid)
                p.plueckers[static_cast<std::size_t>(sid_of(g.apply(mask_of_sid(sid))))] =
                    c.plueckers[static_cast<std::size_t>(sid)];
            bool zero_edge = false;
            NormalizedChart ch = normalize(p);
            for (const auto& q : ch.x)
                if (is_zero(q)) zero_edge = true;
            if (zero_edge) continue;
            CHECK(transport(z, g) == core_from_chart(ch));
        }
    }
}

TEST_CASE("matching: permuted specials match their class, lifts match nothing") {
    const Catalog& cat = catalog();
    const SpecialPointRecord* dde = nullptr;
    for (const auto& r : cat.records)
        if (r.type == SpecialType::DDE) {
            dde = &r;
            break;
        }
    REQUIRE(dde);
    SymmetryElement g;
    g.perm = {3, 1, 4, 2};
    auto m = match_against_catalog(transport(dde->representatives[0], g), cat);
    REQUIRE(m.has_value());
    CHECK(m->type == SpecialType::DDE);

    CHECK_FALSE(match_against_catalog(lift_of_sample(55), cat).has_value());
}

TEST_CASE("related value triples are proportional on sampled lifts") {
    auto cs = sample_configs(61, 100, {.require_nonzero_edges = true});
    for (const auto& c : cs) {
        CorePoint z = core_from_chart(normalize(c));
        for (const auto& rp : related_pairs())
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j) {
                    const Rat& ai = z.at(rp.a.host, rp.matched[static_cast<std::size_t>(i)][0]);
                    const Rat& aj = z.at(rp.a.host, rp.matched[static_cast<std::size_t>(j)][0]);
                    const Rat& bi = z.at(rp.b.host, rp.matched[static_cast<std::size_t>(i)][1]);
                    const Rat& bj = z.at(rp.b.host, rp.matched[static_cast<std::size_t>(j)][1]);
                    CHECK(ai * bj == aj * bi);
                }
    }
}
