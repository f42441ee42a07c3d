#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "tetra/config.hpp"
#include "tetra/qmatrix.hpp"
#include "tetra/relations.hpp"

using namespace tetra;

namespace {

std::vector<QVec> chart_points(std::uint64_t seed, int n) {
    std::vector<QVec> pts;
    for (const auto& c : sample_configs(seed, n, {.require_nonzero_edges = true})) {
        NormalizedChart ch = normalize(c);
        pts.emplace_back(ch.x.begin(), ch.x.end());
    }
    return pts;
}

QVec lift_of(const QVec& x) {
    QVec y(kNumPairs);
    for (const auto& p : all_pairs())
        y[static_cast<std::size_t>(pair_index(p.face, p.edge))] =
            x[static_cast<std::size_t>(p.edge)];
    return y;
}

int count_family(const std::vector<Relation>& rels, RelFamily f) {
    int n = 0;
    for (const auto& r : rels)
        if (r.family == f) ++n;
    return n;
}

}  // namespace

TEST_CASE("chart generator census") {
    const auto& rels = chart_relations();
    CHECK(count_family(rels, RelFamily::Linear) == 16);  // one per triangular face
    CHECK(count_family(rels, RelFamily::QuadricRotated) > 0);
    CHECK(count_family(rels, RelFamily::Cubic) > 0);
    CHECK(count_family(rels, RelFamily::Quartic) > 0);
    for (const auto& r : rels) {
        if (r.family == RelFamily::Linear) CHECK(r.poly.term_count() == 3);
        else CHECK(r.poly.term_count() == 2);
    }
    // no duplicates up to sign
    std::set<std::string> canon;
    for (const auto& r : rels) canon.insert(r.poly.sign_normalized().to_string(chart_variable_names()));
    CHECK(canon.size() == rels.size());
    // deterministic generation
    CHECK(&chart_relations() == &rels);
}

TEST_CASE("the printed quartic index pattern appears") {
    auto var = [](const char* a, const char* b) {
        return edge_index(subset_from_name(a), subset_from_name(b));
    };
    std::set<int> expect{var("1", "2"), var("2", "3"), var("3", "4"), var("1", "4"),
                         var("134", "234"), var("124", "134"), var("123", "124"),
                         var("123", "234")};
    bool found = false;
    for (const auto& r : chart_relations()) {
        if (r.family != RelFamily::Quartic) continue;
        auto vars = r.poly.variables();
        if (std::set<int>(vars.begin(), vars.end()) == expect) found = true;
    }
    CHECK(found);
}

TEST_CASE("all chart generators vanish on 100 sampled charts") {
    auto pts = chart_points(1, 100);
    auto rep = verify_vanishing(chart_relations(), pts);
    CHECK(rep.ok());
}

TEST_CASE("core generators: census and vanishing at canonical lifts") {
    const auto& rels = core_relations();
    CHECK(count_family(rels, RelFamily::Linear) == 32);  // 16 triangles + 4+8+4 in the maxima
    CHECK(count_family(rels, RelFamily::QuadricShared) == 48);
    auto pts = chart_points(2, 100);
    std::vector<QVec> lifts;
    for (const auto& x : pts) lifts.push_back(lift_of(x));
    auto rep = verify_vanishing(rels, lifts);
    CHECK(rep.ok());
}

TEST_CASE("substituting y -> x sends core generators to chart generators or zero") {
    std::set<std::string> chart_forms;
    for (const auto& r : chart_relations())
        chart_forms.insert(r.poly.sign_normalized().to_string(chart_variable_names()));
    for (const auto& r : core_relations()) {
        SparsePoly sub;
        for (const auto& [m, c] : r.poly.terms()) {
            Monomial mapped;
            for (const auto& [v, e] : m.factors) {
                int edge = all_pairs()[static_cast<std::size_t>(v)].edge;
                mapped = mapped.times(Monomial{{{edge, e}}});
            }
            sub.add_term(mapped, c);
        }
        if (sub.zero()) continue;
        // normalize scale: leading coefficient to +-1
        Rat lead = sub.terms().begin()->second;
        sub = sub.scaled(Rat(1) / lead).sign_normalized();
        CHECK(chart_forms.count(sub.to_string(chart_variable_names())) == 1);
    }
}

TEST_CASE("a quartic generator separates random assignments from the locus") {
    const Relation* quartic = nullptr;
    for (const auto& r : chart_relations())
        if (r.family == RelFamily::Quartic) quartic = &r;
    REQUIRE(quartic);
    SplitMix64 rng(13);
    int nonzero = 0;
    for (int trial = 0; trial < 20; ++trial) {
        QVec x;
        for (int v = 0; v < 24; ++v) x.push_back(rat(rng.range(-9, 9), 1 + rng.range(0, 4)));
        if (!is_zero(quartic->poly.evaluate(x))) ++nonzero;
    }
    CHECK(nonzero >= 1);
}

TEST_CASE("verification notices corrupted samples; zero assignment vanishes") {
    auto pts = chart_points(3, 5);
    pts[2][4] += 1;
    auto rep = verify_vanishing(chart_relations(), pts);
    CHECK_FALSE(rep.ok());
    bool points_to_corrupt = false;
    for (const auto& f : rep.failures)
        if (f.point == 2) points_to_corrupt = true;
    CHECK(points_to_corrupt);

    QVec zeros(24, Rat(0));
    CHECK(verify_vanishing(chart_relations(), {zeros}).ok());
}

TEST_CASE("incidence components: both substitution patterns absorb linear+quadric") {
    auto reports = incidence_component_check();
    REQUIRE(reports.size() == 2);
    for (const auto& r : reports) {
        CAPTURE(r.pattern);
        CHECK(r.ok);
        CHECK(r.linear_killed + r.linear_reduced == 16);
    }
    CHECK(reports[0].pattern == "E2");
    CHECK(reports[0].cubic_nonvanishing == 0);   // cubics live on the octahedron edges
    CHECK(reports[1].cubic_nonvanishing > 0);    // and survive zeroing the two simplices
}

TEST_CASE("symbolic identities: one representative per family") {
    const Relation* by_family[5] = {nullptr, nullptr, nullptr, nullptr, nullptr};
    for (const auto& r : chart_relations()) {
        auto& slot = by_family[static_cast<int>(r.family)];
        if (!slot) slot = &r;
    }
    for (const Relation* r : by_family) {
        if (!r) continue;
        auto rep = symbolic_identity_check(*r);
        CAPTURE(r->describe());
        CHECK(rep.identical_zero);
    }
}

TEST_CASE("a sign-flipped quartic is caught probabilistically") {
    const Relation* quartic = nullptr;
    for (const auto& r : chart_relations())
        if (r.family == RelFamily::Quartic) quartic = &r;
    REQUIRE(quartic);
    Relation wrong = *quartic;
    wrong.poly = SparsePoly();
    bool first = true;
    for (const auto& [m, c] : quartic->poly.terms()) {
        wrong.poly.add_term(m, first ? -c : c);  // break one sign
        first = false;
    }
    auto rep = symbolic_identity_check_probabilistic(wrong, 8, 77, 1000);
    CHECK_FALSE(rep.identical_zero);
    auto good = symbolic_identity_check_probabilistic(*quartic, 8, 77, 1000);
    CHECK(good.identical_zero);
}

TEST_CASE("chart relation set is stable under relabeling, with signs") {
    std::set<std::string> forms;
    for (const auto& r : chart_relations())
        forms.insert(r.poly.sign_normalized().to_string(chart_variable_names()));
    for (const auto& g : symmetric_group()) {
        for (const auto& r : chart_relations()) {
            SparsePoly img;
            for (const auto& [m, c] : r.poly.terms()) {
                Rat coeff = c;
                Monomial mapped;
                for (const auto& [v, e] : m.factors) {
                    const EdgeLabel& el = edge_at(v);
                    Mask a = g.apply(el.lo), b = g.apply(el.hi);
                    if (!subset_less(a, b)) coeff = -coeff;
                    for (int t = 0; t < e; ++t)
                        mapped = mapped.times(Monomial::var(edge_index(a, b)));
                }
                img.add_term(mapped, coeff);
            }
            CHECK(forms.count(img.sign_normalized().to_string(chart_variable_names())) == 1);
        }
    }
}

TEST_CASE("jacobian ranks: chart relations rank 18, core corank 3 at lifts") {
    auto pts = chart_points(4, 3);
    for (const auto& x : pts) {
        const auto& rels = chart_relations();
        QMatrix jac(static_cast<int>(rels.size()), 24);
        for (std::size_t r = 0; r < rels.size(); ++r)
            for (int v = 0; v < 24; ++v) {
                SparsePoly d = rels[r].poly.derivative(v);
                if (!d.zero()) jac.at(static_cast<int>(r), v) = d.evaluate(x);
            }
        CHECK(jac.rank() == 18);  // chart locus of dimension 6
    }
}
