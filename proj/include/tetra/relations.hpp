#pragma once

#include <string>
#include <vector>

#include "tetra/combinatorics.hpp"
#include "tetra/sparse_poly.hpp"

namespace tetra {

// Generators of the defining ideals, produced mechanically from the index
// patterns. Chart-level polynomials live in the 24 edge coordinates
// (variable id = edge index); core-level polynomials live in the 72
// homogeneous coordinates y_{alpha,beta} (variable id = pair index).
//
// Every 2-term core generator is multihomogeneous: the two monomials use
// the same multiset of faces, so the polynomial is well defined on the
// product of projective spaces. For the cubic and quartic patterns we
// emit every face assignment with that property, not only the one where
// all coordinates sit on the maximal components: all of them restrict to
// the same chart-level identity under y_{alpha,beta} -> x_alpha, and the
// extra ones are what pin down the positive-dimensional special locus.

enum class RelFamily { Linear, QuadricShared, QuadricRotated, Cubic, Quartic };
enum class RelLevel { Chart, Core };

std::string family_name(RelFamily f);

struct Relation {
    SparsePoly poly;
    RelFamily family = RelFamily::Linear;
    RelLevel level = RelLevel::Chart;
    std::vector<int> tuple;       // generating label tuple
    std::vector<int> faces;       // face ids used (core level)
    bool maximal_hosts = true;    // all coordinates on maximal components

    std::string describe() const;   // provenance one-liner
    std::string render() const;     // human/CAS readable polynomial
};

// Chart level: 16 linear + quadrics + cubics + quartics, deduplicated up
// to global sign.
const std::vector<Relation>& chart_relations();

// Core level: full multihomogeneous list (see above).
const std::vector<Relation>& core_relations();
// The sublist with every host maximal: the printed shape of the families.
std::vector<Relation> core_relations_maximal_hosts();

std::vector<std::string> chart_variable_names();  // "x_1_2", "x_12_13", ...
std::vector<std::string> core_variable_names();   // "y[{12,13}|D2]", ...

// ----------------------------------------------------------- verification

struct VanishingFailure {
    std::size_t relation = 0;
    std::size_t point = 0;
    Rat value;
};

struct VanishingReport {
    std::size_t relations = 0, points = 0;
    std::vector<VanishingFailure> failures;
    bool ok() const { return failures.empty(); }
};

// Exact evaluation of every relation at every assignment. The parallel
// version distributes points across threads; the serial one is the
// reference and produces an identical report.
VanishingReport verify_vanishing(const std::vector<Relation>& rels,
                                 const std::vector<QVec>& points);
VanishingReport verify_vanishing_serial(const std::vector<Relation>& rels,
                                        const std::vector<QVec>& points);

// ------------------------------------------- incidence component check

// Substituting x = 0 on the octahedron edges (or on both simplices)
// annihilates every linear and quadric generator modulo the surviving
// linear ones; the cubics survive the second substitution. This is the
// machine form of the three-component decomposition of the variety cut
// out by the linear and quadric equations alone.
struct IncidencePatternReport {
    std::string pattern;             // "E2" or "E1+E3"
    int linear_killed = 0, linear_reduced = 0;
    int quadric_killed = 0;
    int cubic_nonvanishing = 0;      // cubics NOT killed by this pattern
    bool ok = false;                 // all linear+quadric generators die
};
std::vector<IncidencePatternReport> incidence_component_check();

// ------------------------------------------------- symbolic identities

// Treats the 16 entries of the group element as indeterminates, writes
// each edge coordinate as a ratio of minor polynomials, clears
// denominators and expands. Exact mode proves the generator is the zero
// polynomial; probabilistic mode evaluates at random integer matrices.
struct SymbolicCheckReport {
    bool identical_zero = false;
    int trials = 0;          // probabilistic mode
    int degree_bound = 0;    // cleared-numerator degree bound
    long long terms = 0;     // expanded term count (exact mode)
};
SymbolicCheckReport symbolic_identity_check(const Relation& rel);
SymbolicCheckReport symbolic_identity_check_probabilistic(const Relation& rel, int trials,
                                                          std::uint64_t seed,
                                                          long coeff_bound = 1000000);

}  // namespace tetra
