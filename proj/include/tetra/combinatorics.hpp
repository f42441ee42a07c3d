#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tetra {

// Combinatorics of the three hypersimplices on the label set {1,2,3,4}:
// vertices are proper nonempty subsets, edges are the polytope edges
// (all pairs for the two simplices, non-antipodal pairs for the
// octahedron), and the face set keeps everything of dimension >= 2.

// ---------------------------------------------------------------- subsets

// Subsets of {1,2,3,4} as 4-bit masks; bit (i-1) set <=> i in the subset.
using Mask = std::uint8_t;

int subset_rank(Mask m);
std::string subset_name(Mask m);          // "13", "124", ...
Mask subset_from_name(const std::string&);
Mask subset_complement(Mask m);

// Total order: empty < 1 < 2 < 3 < 4 < 12 < 13 < 14 < 23 < 24 < 34 <
// 123 < 124 < 134 < 234 < 1234 (cardinality first, then the digit list).
int subset_order_pos(Mask m);
bool subset_less(Mask a, Mask b);

// The 14 proper nonempty subsets, in the total order. "sid" = index here.
inline constexpr int kNumSubsets = 14;
const std::array<Mask, kNumSubsets>& proper_subsets();
int sid_of(Mask m);           // -1 for empty/full
Mask mask_of_sid(int sid);

// base(I): 1, 12 or 123 according to the rank of I.
Mask subset_base(Mask m);

// k-subsets of {1,2,3,4} in order, used to index Pluecker coordinates.
const std::vector<Mask>& rank_subsets(int k);
int pluecker_coord_pos(int k, Mask coord);

// ------------------------------------------------------------------ edges

struct EdgeLabel {
    Mask lo = 0, hi = 0;  // canonical: lo < hi in the total order
    int rank = 0;
    int index = -1;       // position in all_edges()

    bool operator==(const EdgeLabel& o) const { return lo == o.lo && hi == o.hi; }
    std::string name() const;  // "{12,13}"
};

// The 24 hypersimplex edges sorted by (rank, lo, hi): 6 + 12 + 6.
const std::vector<EdgeLabel>& all_edges();
bool is_edge(Mask a, Mask b);
int edge_index(Mask a, Mask b);           // -1 if not an edge
const EdgeLabel& edge_at(int index);

// Ordered reference to an edge: (from,to) means the coordinate difference
// f_to - f_from, so flipping the ends flips the sign of the value.
struct OrientedEdge {
    Mask from = 0, to = 0;
    int edge = -1;  // canonical edge index
    int sign = 0;   // +1 if from<to, else -1
};
OrientedEdge oriented_edge(Mask from, Mask to);

// ------------------------------------------------------------------ faces

struct FaceLabel {
    int id = -1;             // position in all_faces()
    bool maximal = false;    // one of the three whole hypersimplices
    int rank = 0;            // common cardinality of the vertices
    std::vector<Mask> vertices;
    std::vector<int> edges;  // edge indices, ascending

    bool is_triangle() const { return !maximal; }
    std::string name() const;  // "D2" or "T(12,13,23)"
};

// 19 faces: D1, D2, D3 first, then the 16 triangles by (rank, vertices).
inline constexpr int kNumFaces = 19;
const std::vector<FaceLabel>& all_faces();
const FaceLabel& face_at(int id);
int maximal_face_id(int rank);                      // 0,1,2
int triangle_face_id(Mask a, Mask b, Mask c);       // -1 if not a face
std::optional<int> face_containing_edges(const std::vector<int>& edges, bool maximal);

// Faces whose edge set contains the given edge (two triangles + the
// maximal face of its rank).
const std::vector<int>& faces_of_edge(int edge);

// ------------------------------------------------- (edge,face) incidence

// The 72 incident pairs (alpha, beta), alpha an edge of beta. These index
// the homogeneous coordinates of the product of projective spaces; the
// graph Gamma below has exactly one edge per pair.
inline constexpr int kNumPairs = 72;

struct PairLabel {
    int face = -1;
    int edge = -1;
};

const std::vector<PairLabel>& all_pairs();   // face-major order
int pair_index(int face, int edge);          // -1 if not incident

// --------------------------------------------------------- triangles

// Ordered triangle of a triangular face {I<J<K}: the edge triple
// (JK, IK, IJ).
struct OrderedTriangle {
    int face = -1;                 // triangle face id
    std::array<int, 3> edges{};    // edge indices in the order above
};
OrderedTriangle ordered_triangle(int triangle_face);

// All triangles that can be read inside a face: for a triangular face its
// own ordered triangle, for a maximal face every triangle of that rank.
// Returned as (triangle_face, hosting_face) pairs.
struct TriangleInFace {
    int triangle = -1;  // triangle face id carrying the vertex triple
    int host = -1;      // face whose component the values live in
};
std::vector<TriangleInFace> triangles_in_faces();

// Rotated partner of a triangle: {A,B,C} at rank 1 pairs with
// {A|C, B|C, A|B} at rank 2 (vertex unions), a vertex-type rank-2
// triangle pairs with the rank-3 triangle of unions, and conversely by
// intersections. Face-type rank-2 triangles rotate down, vertex-type
// rotate up. Returns the partner triangle id and, for each edge of the
// ordered triangle of `triangle`, the corresponding partner edge.
struct RotatedPartner {
    int triangle = -1;
    std::array<int, 3> edge_for{};  // edge_for[i] pairs with edges[i]
};
std::optional<RotatedPartner> rotated_partner(int triangle_face);

// Related pairs of triangle-in-face subgraphs: same ordered triangle in
// two different hosts, or rotated copies in adjacent hypersimplices. The
// correspondence lists matched edge pairs.
struct RelatedPair {
    TriangleInFace a, b;
    std::array<std::array<int, 2>, 3> matched{};  // {edge in a, edge in b}
};
const std::vector<RelatedPair>& related_pairs();
std::vector<RelatedPair> related_to(const TriangleInFace& t);

// ---------------------------------------------------------------- symmetry

// Relabeling by a permutation of {1,2,3,4}, optionally composed with the
// complementation I -> {1,2,3,4} \ I (which swaps ranks 1 and 3).
struct SymmetryElement {
    std::array<int, 4> perm{1, 2, 3, 4};  // perm[i-1] = sigma(i)
    bool dualize = false;

    Mask apply(Mask m) const;
    EdgeLabel apply(const EdgeLabel& e) const;
    int apply_edge(int edge) const;
    int apply_face(int face) const;
    SymmetryElement compose(const SymmetryElement& then) const;
};

const std::vector<SymmetryElement>& symmetric_group();       // 24 elements
const std::vector<SymmetryElement>& full_symmetry_group();   // 48, with duals

// ------------------------------------------------------------------ Gamma

// Gamma: one 19-component graph, a component per face; the nodes of the
// beta-component are beta's vertices and its edges are the 72 pairs.
struct GammaGraph {
    int components = 0;
    int edge_count = 0;
    std::vector<std::string> node_ids;                  // "<face>:<vertex>"
    std::vector<std::array<std::string, 3>> edge_rows;  // {label, node, node}
};
GammaGraph gamma_graph();
std::string gamma_to_dot();

}  // namespace tetra
