#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "tetra/config.hpp"
#include "tetra/parallel.hpp"
#include "tetra/relations.hpp"

using namespace tetra;

TEST_CASE("parallel_for covers every index exactly once") {
    std::vector<int> hits(1000, 0);
    parallel_for(hits.size(), [&](std::size_t i) { hits[i] += 1; });
    CHECK(std::accumulate(hits.begin(), hits.end(), 0) == 1000);
}

TEST_CASE("parallel verification reproduces the serial reference") {
    std::vector<QVec> pts;
    for (const auto& c : sample_configs(81, 40, {.require_nonzero_edges = true})) {
        NormalizedChart ch = normalize(c);
        pts.emplace_back(ch.x.begin(), ch.x.end());
    }
    // corrupt a few points so the failure lists are nontrivial
    pts[7][3] += 1;
    pts[21][11] -= 2;

    auto serial = verify_vanishing_serial(chart_relations(), pts);
    auto par = verify_vanishing(chart_relations(), pts);
    REQUIRE(serial.failures.size() == par.failures.size());
    auto key = [](const VanishingFailure& f) {
        return std::tuple(f.point, f.relation, f.value);
    };
    auto sorted = [&](std::vector<VanishingFailure> v) {
        std::sort(v.begin(), v.end(),
                  [&](const auto& a, const auto& b) { return key(a) < key(b); });
        return v;
    };
    auto a = sorted(serial.failures), b = sorted(par.failures);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].point == b[i].point);
        CHECK(a[i].relation == b[i].relation);
        CHECK(a[i].value == b[i].value);
    }

    // the runtime switch forces the fallback path
    parallel_enabled() = false;
    auto forced = verify_vanishing(chart_relations(), pts);
    parallel_enabled() = true;
    CHECK(forced.failures.size() == serial.failures.size());
}
