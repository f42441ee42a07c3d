#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "tetra/combinatorics.hpp"
#include "tetra/rational.hpp"

using namespace tetra;

TEST_CASE("total order matches the printed subset list") {
    const char* expect[] = {"1", "2", "3", "4", "12", "13", "14", "23", "24", "34",
                            "123", "124", "134", "234"};
    for (int i = 0; i < kNumSubsets; ++i) CHECK(subset_name(mask_of_sid(i)) == expect[i]);
    CHECK(subset_less(subset_from_name("4"), subset_from_name("12")));
    CHECK(subset_less(subset_from_name("34"), subset_from_name("123")));
}

TEST_CASE("edge census against brute-force enumeration") {
    // Oracle: pairs of equal-rank vertices, with the octahedron
    // adjacency filter |I cap J| = 1 in rank 2.
    std::set<std::pair<Mask, Mask>> oracle;
    for (int a = 1; a < 15; ++a)
        for (int b = a + 1; b < 15; ++b) {
            Mask ma = static_cast<Mask>(a), mb = static_cast<Mask>(b);
            if (subset_rank(ma) != subset_rank(mb)) continue;
            if (subset_rank(ma) == 2 && subset_rank(static_cast<Mask>(ma & mb)) != 1) continue;
            if (subset_rank(ma) > 3) continue;
            Mask lo = subset_less(ma, mb) ? ma : mb, hi = lo == ma ? mb : ma;
            oracle.insert({lo, hi});
        }
    CHECK(oracle.size() == 24);
    CHECK(all_edges().size() == 24);
    int by_rank[4] = {0, 0, 0, 0};
    for (const auto& e : all_edges()) {
        ++by_rank[e.rank];
        CHECK(oracle.count({e.lo, e.hi}) == 1);
    }
    CHECK(by_rank[1] == 6);
    CHECK(by_rank[2] == 12);
    CHECK(by_rank[3] == 6);

    CHECK(edge_index(subset_from_name("12"), subset_from_name("34")) == -1);  // antipodal
    CHECK(edge_index(subset_from_name("12"), subset_from_name("13")) >= 0);
}

TEST_CASE("face census") {
    CHECK(all_faces().size() == 19);
    int triangles_by_rank[4] = {0, 0, 0, 0};
    for (const auto& f : all_faces())
        if (f.is_triangle()) ++triangles_by_rank[f.rank];
    CHECK(triangles_by_rank[1] == 4);
    CHECK(triangles_by_rank[2] == 8);
    CHECK(triangles_by_rank[3] == 4);
    CHECK(face_at(maximal_face_id(1)).edges.size() == 6);
    CHECK(face_at(maximal_face_id(2)).edges.size() == 12);
    CHECK(face_at(maximal_face_id(3)).edges.size() == 6);

    int tid = triangle_face_id(subset_from_name("12"), subset_from_name("13"),
                               subset_from_name("23"));
    REQUIRE(tid >= 0);
    std::set<int> expect{edge_index(subset_from_name("12"), subset_from_name("13")),
                         edge_index(subset_from_name("12"), subset_from_name("23")),
                         edge_index(subset_from_name("13"), subset_from_name("23"))};
    std::set<int> got(face_at(tid).edges.begin(), face_at(tid).edges.end());
    CHECK(got == expect);

    CHECK(all_pairs().size() == 72);
    CHECK(72 - kNumFaces == 53);
}

TEST_CASE("ordered triangles follow the total order") {
    auto tri = [](const char* a, const char* b, const char* c) {
        return ordered_triangle(
            triangle_face_id(subset_from_name(a), subset_from_name(b), subset_from_name(c)));
    };
    auto e = [](const char* a, const char* b) {
        return edge_index(subset_from_name(a), subset_from_name(b));
    };
    OrderedTriangle t = tri("12", "13", "23");
    CHECK(t.edges == std::array<int, 3>{e("13", "23"), e("12", "23"), e("12", "13")});
    t = tri("1", "2", "3");
    CHECK(t.edges == std::array<int, 3>{e("2", "3"), e("1", "3"), e("1", "2")});
    t = tri("123", "124", "134");
    CHECK(t.edges == std::array<int, 3>{e("124", "134"), e("123", "134"), e("123", "124")});
}

TEST_CASE("every triangle face hosts one ordered triangle, edges share a face") {
    int own_hosted = 0;
    for (const auto& f : all_faces()) {
        if (!f.is_triangle()) continue;
        ++own_hosted;
        OrderedTriangle t = ordered_triangle(f.id);
        auto host = face_containing_edges({t.edges[0], t.edges[1], t.edges[2]}, false);
        REQUIRE(host.has_value());
        CHECK(*host == f.id);
    }
    CHECK(own_hosted == 16);
    CHECK(triangles_in_faces().size() == 32);  // 16 own + 4 + 8 + 4 in the maximal faces
}

TEST_CASE("related pairs: count, symmetry, equivariance, duality closure") {
    const auto& rp = related_pairs();
    CHECK(rp.size() == 48);

    // symmetric: related_to sees the pair from both sides
    for (const auto& p : rp) {
        bool found = false;
        for (const auto& q : related_to(p.b))
            if (q.b.triangle == p.a.triangle && q.b.host == p.a.host) found = true;
        CHECK(found);
    }

    // the set of (triangle,host)+(triangle,host) pairs is stable under
    // the full symmetry group, duality included
    std::set<std::array<int, 4>> key_set;
    for (const auto& p : rp) {
        key_set.insert({p.a.triangle, p.a.host, p.b.triangle, p.b.host});
        key_set.insert({p.b.triangle, p.b.host, p.a.triangle, p.a.host});
    }
    for (const auto& g : full_symmetry_group())
        for (const auto& p : rp) {
            std::array<int, 4> img{g.apply_face(p.a.triangle), g.apply_face(p.a.host),
                                   g.apply_face(p.b.triangle), g.apply_face(p.b.host)};
            CHECK(key_set.count(img) == 1);
        }
}

TEST_CASE("rotated partners pair across adjacent hypersimplices") {
    int t1 = triangle_face_id(subset_from_name("1"), subset_from_name("2"), subset_from_name("3"));
    auto rp = rotated_partner(t1);
    REQUIRE(rp.has_value());
    CHECK(rp->triangle == triangle_face_id(subset_from_name("12"), subset_from_name("13"),
                                           subset_from_name("23")));
    // edge {1,2} (third vertex 3) pairs with {13,23}
    OrderedTriangle t = ordered_triangle(t1);
    for (int i = 0; i < 3; ++i)
        if (t.edges[static_cast<std::size_t>(i)] ==
            edge_index(subset_from_name("1"), subset_from_name("2")))
            CHECK(rp->edge_for[static_cast<std::size_t>(i)] ==
                  edge_index(subset_from_name("13"), subset_from_name("23")));
}

TEST_CASE("symmetry action: identity, relabeling, duality, group laws") {
    SymmetryElement id;
    for (const auto& e : all_edges()) CHECK(id.apply_edge(e.index) == e.index);

    SymmetryElement swap12;
    swap12.perm = {2, 1, 3, 4};
    EdgeLabel e13 = edge_at(edge_index(subset_from_name("1"), subset_from_name("3")));
    CHECK(swap12.apply(e13).name() == "{2,3}");

    SymmetryElement dual;
    dual.dualize = true;
    CHECK(dual.apply_face(maximal_face_id(1)) == maximal_face_id(3));
    CHECK(dual.apply_face(maximal_face_id(2)) == maximal_face_id(2));

    // composition law on faces and edges
    SplitMix64 rng(3);
    const auto& grp = full_symmetry_group();
    for (int trial = 0; trial < 25; ++trial) {
        const auto& a = grp[rng.below(grp.size())];
        const auto& b = grp[rng.below(grp.size())];
        SymmetryElement ab = a.compose(b);
        for (const auto& e : all_edges())
            CHECK(ab.apply_edge(e.index) == b.apply_edge(a.apply_edge(e.index)));
        for (int f = 0; f < kNumFaces; ++f)
            CHECK(ab.apply_face(f) == b.apply_face(a.apply_face(f)));
    }
}

TEST_CASE("Gamma: 19 components, 72 edges, reproducible DOT") {
    GammaGraph g = gamma_graph();
    CHECK(g.components == 19);
    CHECK(g.edge_count == 72);
    std::string dot1 = gamma_to_dot(), dot2 = gamma_to_dot();
    CHECK(dot1 == dot2);
    std::size_t subgraphs = 0, pos = 0;
    while ((pos = dot1.find("subgraph", pos)) != std::string::npos) {
        ++subgraphs;
        ++pos;
    }
    CHECK(subgraphs == 19);
}
