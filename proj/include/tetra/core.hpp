#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tetra/combinatorics.hpp"
#include "tetra/config.hpp"
#include "tetra/relations.hpp"

namespace tetra {

// Points of the core: an exact value for each of the 72 incident pairs
// (alpha, beta), one projective scale per face. Canonical normalization
// scales every component so its least-indexed nonzero coordinate is 1.

struct CorePoint {
    std::array<Rat, kNumPairs> y{};

    const Rat& at(int face, int edge) const {
        return y[static_cast<std::size_t>(pair_index(face, edge))];
    }

    // Per-component normalization; nullopt if some component is all zero.
    static std::optional<CorePoint> normalized(const std::array<Rat, kNumPairs>& raw);

    std::vector<bool> zero_pattern() const;
    bool operator==(const CorePoint& o) const { return y == o.y; }
};

// Canonical lift of a chart: y_{alpha,beta} = x_alpha. Requires every
// edge coordinate nonzero (otherwise the lift does not determine a point
// of every blown-up factor).
CorePoint core_from_chart(const NormalizedChart& chart);

// Does z satisfy every core relation? (Single membership authority.)
bool core_point_on_variety(const CorePoint& z, std::string* why = nullptr);

// Transport of values by a relabeling; flips the sign of an edge value
// when the permutation reverses the order of its two vertices. Duality
// transports {I,J} to {J^c, I^c}, which preserves vertex order.
CorePoint transport(const CorePoint& z, const SymmetryElement& g);

// -------------------------------------------------------- zero patterns

enum class TrianglePattern { NoneZero, OneZero, AllZero };

struct RelatedPatternCase {
    TrianglePattern host_a = TrianglePattern::NoneZero;
    TrianglePattern host_b = TrianglePattern::NoneZero;
    bool matched_position = false;  // for the (one,one) case
};

// Case analysis of the linear relation a - b + c = 0 together with the
// shape proportionality of related triangles: exactly five combinations
// of zero counts can occur.
std::vector<RelatedPatternCase> allowed_related_patterns();

// Check a core point against the five cases on all related pairs.
bool conforms_to_related_patterns(const CorePoint& z, std::string* why = nullptr);

// ------------------------------------------------------ split partitions

// Two-block partition of the rank-k vertices with both blocks connected
// in the hypersimplex edge graph (so that the zero pattern it induces has
// exactly two equivalence classes, i.e. exactly two distinct subspaces).
struct SplitPartition {
    int rank = 0;
    std::vector<Mask> block_a, block_b;  // canonical: block containing the least vertex first

    std::string type() const;  // "31", "22", "51", "42", "33"
    bool same_block(Mask u, Mask v) const;
};

std::vector<SplitPartition> split_partitions(int rank);

// -------------------------------------------------------- special locus

enum class SpecialType { DDE, CDE, CCstarE, CCstarNopD, CCstarOpD, Unclassified };
std::string special_type_name(SpecialType t);

struct FamilyDescription {
    // Bihomogeneous relation between the two free cluster parameters,
    // rendered in affine parameters u, v.
    std::string relation;
    // Parameter values of the stored representatives.
    std::vector<Rat> parameter_values;
};

struct SpecialPointRecord {
    int id = -1;
    SpecialType type = SpecialType::Unclassified;
    int dimension = 0;  // 0 isolated, 1 family
    int orbit_size = 0;
    std::array<SplitPartition, 3> splits;  // line/plane/hyperplane partitions
    std::vector<bool> maximal_zero_pattern;  // per pair index, zeros forced on D1,D2,D3
    std::vector<CorePoint> representatives;  // 1 for isolated, >= 3 for a family
    std::optional<FamilyDescription> family;
    int orbit_id = -1;
};

struct EnumerationStats {
    int partition_triples = 0;
    int rejected_linear = 0;      // no consistent maximal component values
    int rejected_consistency = 0; // maximal values violate a relation
    int rejected_triangles = 0;   // some triangle component forced to zero
    int solved_isolated = 0;
    int solved_families = 0;
};

struct Catalog {
    std::vector<SpecialPointRecord> records;
    EnumerationStats stats;

    int isolated_count() const;
    int family_count() const;
    std::vector<std::pair<SpecialType, int>> orbit_sizes() const;
};

// Enumerate the special locus: for every triple of split partitions,
// force the induced zeros on the maximal components, solve the full
// relation system over the triangle components by linear propagation,
// quadric transport and cubic/quartic closure, and classify solutions.
Catalog enumerate_special();

// ---------------------------------------------------------- certificates

struct SmoothnessCertificate {
    bool on_variety = false;
    std::array<int, kNumFaces> chart_edge{};  // chosen unit coordinate per face
    int jacobian_rank = 0;
    int corank = 0;
    std::optional<int> propagation;
    bool smooth = false;  // corank == 3
};

// Jacobian of all core relations in the 53-coordinate affine chart at z;
// chart picks the least-indexed nonzero coordinate of each component.
SmoothnessCertificate jacobian_certificate(const CorePoint& z);

// Chart choice with a different tie-break, for the chart-independence
// cross-check.
SmoothnessCertificate jacobian_certificate_alt_chart(const CorePoint& z);

// Combinatorial differential propagation: differentials of the linear
// relations plus the two-term rules (zero forcing and identification
// with coefficients) read off quadric/cubic/quartic relations whose
// differential at z has at most two surviving terms. For family points
// the closure additionally needs the full differentials of the cubic and
// quartic relations (include_closure_cuts).
std::optional<int> propagation_bound(const CorePoint& z, bool include_closure_cuts = false);

// ------------------------------------------------------------- matching

struct CatalogMatch {
    int record_id = -1;
    SpecialType type = SpecialType::Unclassified;
    SymmetryElement symmetry;  // transport applied to z for the match
};

// Find a catalog entry equal to z up to per-component scale and the
// symmetry group; family entries match by zero pattern plus membership.
std::optional<CatalogMatch> match_against_catalog(const CorePoint& z, const Catalog& catalog);

}  // namespace tetra
