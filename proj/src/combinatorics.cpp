#include "tetra/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <stdexcept>

namespace tetra {

int subset_rank(Mask m) { return std::popcount(static_cast<unsigned>(m)); }

std::string subset_name(Mask m) {
    std::string s;
    for (int i = 1; i <= 4; ++i)
        if (m & (1 << (i - 1))) s += static_cast<char>('0' + i);
    return s.empty() ? "0" : s;
}

Mask subset_from_name(const std::string& s) {
    Mask m = 0;
    for (char c : s) {
        if (c < '1' || c > '4') throw std::invalid_argument("bad subset name: " + s);
        m |= static_cast<Mask>(1 << (c - '1'));
    }
    return m;
}

Mask subset_complement(Mask m) { return static_cast<Mask>(0xF & ~m); }

namespace {

std::array<int, 16> build_order_pos() {
    // Cardinality first, then lexicographic on the sorted digit string.
    std::vector<Mask> all(16);
    for (int m = 0; m < 16; ++m) all[m] = static_cast<Mask>(m);
    std::sort(all.begin(), all.end(), [](Mask a, Mask b) {
        int ra = subset_rank(a), rb = subset_rank(b);
        if (ra != rb) return ra < rb;
        return subset_name(a) < subset_name(b);
    });
    std::array<int, 16> pos{};
    for (int i = 0; i < 16; ++i) pos[all[i]] = i;
    return pos;
}

const std::array<int, 16>& order_pos_table() {
    static const std::array<int, 16> table = build_order_pos();
    return table;
}

}  // namespace

int subset_order_pos(Mask m) { return order_pos_table()[m]; }

bool subset_less(Mask a, Mask b) { return subset_order_pos(a) < subset_order_pos(b); }

const std::array<Mask, kNumSubsets>& proper_subsets() {
    static const std::array<Mask, kNumSubsets> list = [] {
        std::array<Mask, kNumSubsets> out{};
        int n = 0;
        std::vector<Mask> all;
        for (int m = 1; m < 15; ++m) all.push_back(static_cast<Mask>(m));
        std::sort(all.begin(), all.end(), subset_less);
        for (Mask m : all) out[n++] = m;
        return out;
    }();
    return list;
}

int sid_of(Mask m) {
    const auto& list = proper_subsets();
    for (int i = 0; i < kNumSubsets; ++i)
        if (list[i] == m) return i;
    return -1;
}

Mask mask_of_sid(int sid) { return proper_subsets()[static_cast<std::size_t>(sid)]; }

Mask subset_base(Mask m) {
    switch (subset_rank(m)) {
        case 1: return 0b0001;
        case 2: return 0b0011;
        case 3: return 0b0111;
        default: throw std::invalid_argument("subset_base: rank out of range");
    }
}

const std::vector<Mask>& rank_subsets(int k) {
    static const std::array<std::vector<Mask>, 4> table = [] {
        std::array<std::vector<Mask>, 4> t{};
        for (int m = 1; m < 16; ++m) {
            int r = subset_rank(static_cast<Mask>(m));
            if (r <= 3) t[r].push_back(static_cast<Mask>(m));
        }
        for (int r = 1; r <= 3; ++r) std::sort(t[r].begin(), t[r].end(), subset_less);
        return t;
    }();
    return table[k];
}

int pluecker_coord_pos(int k, Mask coord) {
    const auto& list = rank_subsets(k);
    for (std::size_t i = 0; i < list.size(); ++i)
        if (list[i] == coord) return static_cast<int>(i);
    return -1;
}

// ------------------------------------------------------------------ edges

std::string EdgeLabel::name() const {
    return "{" + subset_name(lo) + "," + subset_name(hi) + "}";
}

bool is_edge(Mask a, Mask b) {
    if (a == b) return false;
    int r = subset_rank(a);
    if (r != subset_rank(b) || r < 1 || r > 3) return false;
    // Octahedron edges join vertices at Hamming distance 2; the three
    // antipodal pairs (distance 4) are excluded. Both simplices are
    // complete graphs on their vertices.
    if (r == 2 && subset_rank(static_cast<Mask>(a & b)) != 1) return false;
    return true;
}

const std::vector<EdgeLabel>& all_edges() {
    static const std::vector<EdgeLabel> edges = [] {
        std::vector<EdgeLabel> out;
        for (int r = 1; r <= 3; ++r) {
            const auto& verts = rank_subsets(r);
            for (std::size_t i = 0; i < verts.size(); ++i)
                for (std::size_t j = i + 1; j < verts.size(); ++j)
                    if (is_edge(verts[i], verts[j]))
                        out.push_back({verts[i], verts[j], r, -1});
        }
        std::sort(out.begin(), out.end(), [](const EdgeLabel& a, const EdgeLabel& b) {
            if (a.rank != b.rank) return a.rank < b.rank;
            if (a.lo != b.lo) return subset_less(a.lo, b.lo);
            return subset_less(a.hi, b.hi);
        });
        for (std::size_t i = 0; i < out.size(); ++i) out[i].index = static_cast<int>(i);
        return out;
    }();
    return edges;
}

namespace {
const std::array<std::array<int, 16>, 16>& edge_index_table() {
    static const std::array<std::array<int, 16>, 16> table = [] {
        std::array<std::array<int, 16>, 16> t{};
        for (auto& row : t) row.fill(-1);
        for (const auto& e : all_edges()) {
            t[e.lo][e.hi] = e.index;
            t[e.hi][e.lo] = e.index;
        }
        return t;
    }();
    return table;
}
}  // namespace

int edge_index(Mask a, Mask b) { return edge_index_table()[a][b]; }

const EdgeLabel& edge_at(int index) { return all_edges()[static_cast<std::size_t>(index)]; }

OrientedEdge oriented_edge(Mask from, Mask to) {
    int idx = edge_index(from, to);
    if (idx < 0)
        throw std::invalid_argument("not an edge: {" + subset_name(from) + "," +
                                    subset_name(to) + "}");
    OrientedEdge oe;
    oe.from = from;
    oe.to = to;
    oe.edge = idx;
    oe.sign = subset_less(from, to) ? 1 : -1;
    return oe;
}

// ------------------------------------------------------------------ faces

std::string FaceLabel::name() const {
    if (maximal) return "D" + std::to_string(rank);
    std::string s = "T(";
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i) s += ",";
        s += subset_name(vertices[i]);
    }
    return s + ")";
}

namespace {

std::vector<FaceLabel> build_faces() {
    std::vector<FaceLabel> out;
    auto edges_among = [](const std::vector<Mask>& verts) {
        std::vector<int> es;
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (std::size_t j = i + 1; j < verts.size(); ++j) {
                int e = edge_index(verts[i], verts[j]);
                if (e >= 0) es.push_back(e);
            }
        std::sort(es.begin(), es.end());
        return es;
    };

    for (int r = 1; r <= 3; ++r) {
        FaceLabel f;
        f.maximal = true;
        f.rank = r;
        f.vertices = rank_subsets(r);
        f.edges = edges_among(f.vertices);
        out.push_back(std::move(f));
    }

    // Triangular faces: every vertex triple that is pairwise adjacent.
    // For the octahedron that is one vertex per antipodal pair, giving
    // the 8 two-dimensional faces; for the simplices, all 4 triples.
    for (int r = 1; r <= 3; ++r) {
        const auto& verts = rank_subsets(r);
        std::vector<FaceLabel> tris;
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (std::size_t j = i + 1; j < verts.size(); ++j)
                for (std::size_t k = j + 1; k < verts.size(); ++k) {
                    if (!is_edge(verts[i], verts[j]) || !is_edge(verts[i], verts[k]) ||
                        !is_edge(verts[j], verts[k]))
                        continue;
                    FaceLabel f;
                    f.maximal = false;
                    f.rank = r;
                    f.vertices = {verts[i], verts[j], verts[k]};
                    f.edges = edges_among(f.vertices);
                    tris.push_back(std::move(f));
                }
        for (auto& f : tris) out.push_back(std::move(f));
    }
    for (std::size_t i = 0; i < out.size(); ++i) out[i].id = static_cast<int>(i);
    return out;
}

}  // namespace

const std::vector<FaceLabel>& all_faces() {
    static const std::vector<FaceLabel> faces = build_faces();
    return faces;
}

const FaceLabel& face_at(int id) { return all_faces()[static_cast<std::size_t>(id)]; }

int maximal_face_id(int rank) { return rank - 1; }

int triangle_face_id(Mask a, Mask b, Mask c) {
    std::vector<Mask> v{a, b, c};
    std::sort(v.begin(), v.end(), subset_less);
    for (const auto& f : all_faces())
        if (!f.maximal && f.vertices == v) return f.id;
    return -1;
}

std::optional<int> face_containing_edges(const std::vector<int>& edges, bool maximal) {
    for (const auto& f : all_faces()) {
        if (f.maximal != maximal) continue;
        bool ok = true;
        for (int e : edges)
            if (!std::binary_search(f.edges.begin(), f.edges.end(), e)) {
                ok = false;
                break;
            }
        if (ok) return f.id;
    }
    return std::nullopt;
}

const std::vector<int>& faces_of_edge(int edge) {
    static const std::vector<std::vector<int>> table = [] {
        std::vector<std::vector<int>> t(all_edges().size());
        for (const auto& f : all_faces())
            for (int e : f.edges) t[static_cast<std::size_t>(e)].push_back(f.id);
        return t;
    }();
    return table[static_cast<std::size_t>(edge)];
}

// ------------------------------------------------- (edge,face) incidence

const std::vector<PairLabel>& all_pairs() {
    static const std::vector<PairLabel> pairs = [] {
        std::vector<PairLabel> out;
        for (const auto& f : all_faces())
            for (int e : f.edges) out.push_back({f.id, e});
        return out;
    }();
    return pairs;
}

int pair_index(int face, int edge) {
    static const std::vector<std::array<int, 24>> table = [] {
        std::vector<std::array<int, 24>> t(all_faces().size());
        for (auto& row : t) row.fill(-1);
        const auto& pairs = all_pairs();
        for (std::size_t i = 0; i < pairs.size(); ++i)
            t[static_cast<std::size_t>(pairs[i].face)][pairs[i].edge] = static_cast<int>(i);
        return t;
    }();
    return table[static_cast<std::size_t>(face)][edge];
}

// --------------------------------------------------------- triangles

OrderedTriangle ordered_triangle(int triangle_face) {
    const auto& f = face_at(triangle_face);
    if (f.maximal) throw std::invalid_argument("ordered_triangle: face is not a triangle");
    Mask I = f.vertices[0], J = f.vertices[1], K = f.vertices[2];  // I < J < K
    OrderedTriangle t;
    t.face = triangle_face;
    t.edges = {edge_index(J, K), edge_index(I, K), edge_index(I, J)};
    return t;
}

std::vector<TriangleInFace> triangles_in_faces() {
    std::vector<TriangleInFace> out;
    for (const auto& f : all_faces()) {
        if (f.is_triangle()) {
            out.push_back({f.id, f.id});
        } else {
            for (const auto& g : all_faces())
                if (g.is_triangle() && g.rank == f.rank) out.push_back({g.id, f.id});
        }
    }
    return out;
}

std::optional<RotatedPartner> rotated_partner(int triangle_face) {
    const auto& f = face_at(triangle_face);
    if (f.maximal) return std::nullopt;
    Mask A = f.vertices[0], B = f.vertices[1], C = f.vertices[2];
    Mask all = static_cast<Mask>(A | B | C);

    // Vertex unions climb one rank (rank-1 triangles and vertex-type
    // octahedron triangles); vertex intersections descend (face-type
    // octahedron triangles and rank-3 triangles). A face-type rank-2
    // triangle has three distinct pairwise unions only downward.
    bool up;
    if (f.rank == 1) up = true;
    else if (f.rank == 3) up = false;
    else up = subset_rank(all) == 4;  // vertex-type {il,jl,kl} spans all labels

    auto partner_vertex = [&](Mask x, Mask y) -> Mask {
        return up ? static_cast<Mask>(x | y) : static_cast<Mask>(x & y);
    };
    int pid = triangle_face_id(partner_vertex(B, C), partner_vertex(A, C), partner_vertex(A, B));
    if (pid < 0) return std::nullopt;

    // Edge {X,Y} (third vertex Z) pairs with the partner edge joining the
    // images of X and Y through Z: a 180 degree turn of the triangle.
    RotatedPartner rp;
    rp.triangle = pid;
    OrderedTriangle t = ordered_triangle(triangle_face);
    std::array<Mask, 3> verts = {A, B, C};
    for (int i = 0; i < 3; ++i) {
        const EdgeLabel& e = edge_at(t.edges[static_cast<std::size_t>(i)]);
        Mask third = 0;
        for (Mask v : verts)
            if (v != e.lo && v != e.hi) third = v;
        Mask u = up ? static_cast<Mask>(e.lo | third) : static_cast<Mask>(e.lo & third);
        Mask w = up ? static_cast<Mask>(e.hi | third) : static_cast<Mask>(e.hi & third);
        rp.edge_for[static_cast<std::size_t>(i)] = edge_index(u, w);
    }
    return rp;
}

const std::vector<RelatedPair>& related_pairs() {
    static const std::vector<RelatedPair> pairs = [] {
        std::vector<RelatedPair> out;
        for (const auto& f : all_faces()) {
            if (!f.is_triangle()) continue;
            OrderedTriangle t = ordered_triangle(f.id);
            int dk = maximal_face_id(f.rank);

            // Same ordered triangle, hosted in its own face and in the
            // maximal face of its rank.
            RelatedPair same;
            same.a = {f.id, f.id};
            same.b = {f.id, dk};
            for (int i = 0; i < 3; ++i)
                same.matched[static_cast<std::size_t>(i)] = {t.edges[static_cast<std::size_t>(i)],
                                                             t.edges[static_cast<std::size_t>(i)]};
            out.push_back(same);

            // Rotated copies in the adjacent hypersimplex, every host
            // combination; emitted once per unordered pair.
            auto rp = rotated_partner(f.id);
            if (rp && face_at(rp->triangle).rank > f.rank) {
                const auto& g = face_at(rp->triangle);
                int dk2 = maximal_face_id(g.rank);
                for (int ha : {f.id, dk})
                    for (int hb : {rp->triangle, dk2}) {
                        RelatedPair r;
                        r.a = {f.id, ha};
                        r.b = {rp->triangle, hb};
                        for (int i = 0; i < 3; ++i)
                            r.matched[static_cast<std::size_t>(i)] = {
                                t.edges[static_cast<std::size_t>(i)],
                                rp->edge_for[static_cast<std::size_t>(i)]};
                        out.push_back(r);
                    }
            }
        }
        return out;
    }();
    return pairs;
}

std::vector<RelatedPair> related_to(const TriangleInFace& t) {
    std::vector<RelatedPair> out;
    for (const auto& rp : related_pairs()) {
        if (rp.a.triangle == t.triangle && rp.a.host == t.host) out.push_back(rp);
        else if (rp.b.triangle == t.triangle && rp.b.host == t.host) {
            RelatedPair flipped;
            flipped.a = rp.b;
            flipped.b = rp.a;
            for (int i = 0; i < 3; ++i)
                flipped.matched[static_cast<std::size_t>(i)] = {
                    rp.matched[static_cast<std::size_t>(i)][1],
                    rp.matched[static_cast<std::size_t>(i)][0]};
            out.push_back(flipped);
        }
    }
    return out;
}

// ---------------------------------------------------------------- symmetry

Mask SymmetryElement::apply(Mask m) const {
    Mask r = 0;
    for (int i = 1; i <= 4; ++i)
        if (m & (1 << (i - 1))) r |= static_cast<Mask>(1 << (perm[static_cast<std::size_t>(i - 1)] - 1));
    if (dualize) r = subset_complement(r);
    return r;
}

EdgeLabel SymmetryElement::apply(const EdgeLabel& e) const {
    Mask a = apply(e.lo), b = apply(e.hi);
    int idx = edge_index(a, b);
    if (idx < 0) throw std::logic_error("symmetry broke an edge");
    return edge_at(idx);
}

int SymmetryElement::apply_edge(int edge) const { return apply(edge_at(edge)).index; }

int SymmetryElement::apply_face(int face) const {
    const auto& f = face_at(face);
    int rank = dualize ? 4 - f.rank : f.rank;
    if (f.maximal) return maximal_face_id(rank);
    return triangle_face_id(apply(f.vertices[0]), apply(f.vertices[1]), apply(f.vertices[2]));
}

SymmetryElement SymmetryElement::compose(const SymmetryElement& then) const {
    // apply(this) first, then `then`; complementation commutes with
    // relabeling, so the flags just add mod 2.
    SymmetryElement r;
    for (int i = 0; i < 4; ++i)
        r.perm[static_cast<std::size_t>(i)] =
            then.perm[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)] - 1)];
    r.dualize = dualize != then.dualize;
    return r;
}

const std::vector<SymmetryElement>& symmetric_group() {
    static const std::vector<SymmetryElement> group = [] {
        std::vector<SymmetryElement> out;
        std::array<int, 4> p{1, 2, 3, 4};
        do {
            SymmetryElement s;
            s.perm = p;
            out.push_back(s);
        } while (std::next_permutation(p.begin(), p.end()));
        return out;
    }();
    return group;
}

const std::vector<SymmetryElement>& full_symmetry_group() {
    static const std::vector<SymmetryElement> group = [] {
        std::vector<SymmetryElement> out = symmetric_group();
        for (SymmetryElement s : symmetric_group()) {
            s.dualize = true;
            out.push_back(s);
        }
        return out;
    }();
    return group;
}

// ------------------------------------------------------------------ Gamma

GammaGraph gamma_graph() {
    GammaGraph g;
    g.components = kNumFaces;
    for (const auto& f : all_faces()) {
        for (Mask v : f.vertices) g.node_ids.push_back(f.name() + ":" + subset_name(v));
        for (int e : f.edges) {
            const auto& el = edge_at(e);
            g.edge_rows.push_back({f.name() + ":" + subset_name(el.lo) + "-" + subset_name(el.hi),
                                   f.name() + ":" + subset_name(el.lo),
                                   f.name() + ":" + subset_name(el.hi)});
        }
    }
    g.edge_count = static_cast<int>(g.edge_rows.size());
    return g;
}

std::string gamma_to_dot() {
    std::ostringstream os;
    os << "graph Gamma {\n";
    for (const auto& f : all_faces()) {
        os << "  subgraph \"cluster_" << f.name() << "\" {\n";
        os << "    label=\"" << f.name() << "\";\n";
        for (Mask v : f.vertices)
            os << "    \"" << f.name() << ":" << subset_name(v) << "\";\n";
        for (int e : f.edges) {
            const auto& el = edge_at(e);
            os << "    \"" << f.name() << ":" << subset_name(el.lo) << "\" -- \"" << f.name()
               << ":" << subset_name(el.hi) << "\" [label=\"" << f.name() << ":"
               << subset_name(el.lo) << "-" << subset_name(el.hi) << "\"];\n";
        }
        os << "  }\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace tetra
