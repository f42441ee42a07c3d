#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tetra/combinatorics.hpp"
#include "tetra/qmatrix.hpp"
#include "tetra/rational.hpp"

namespace tetra {

// A configuration of 14 subspaces of Q^4 (4 lines, 6 planes, 4
// hyperplanes) recorded by raw Pluecker vectors, one per proper nonempty
// subset, each defined up to scale. Incidence pi_I < pi_J for I < J is an
// invariant of the type, checked on demand.
struct TetraConfig {
    // indexed by sid (subset order); vector lengths 4/6/4 by rank
    std::array<QVec, kNumSubsets> plueckers;

    const QVec& vec(Mask m) const { return plueckers[static_cast<std::size_t>(sid_of(m))]; }
    QVec& vec(Mask m) { return plueckers[static_cast<std::size_t>(sid_of(m))]; }
};

// Pluecker vector of the span of k columns (the k x k minors, coordinates
// in rank_subsets(k) order).
QVec pluecker_of_columns(const QMatrix& g, const std::vector<int>& columns);

// Spanning vectors recovered from a (decomposable) Pluecker vector by
// contraction; exact, no normalization.
std::vector<QVec> span_from_pluecker(int rank, const QVec& p);

// Do two Pluecker vectors of equal rank agree projectively? (All 2x2
// minors of the stacked pair vanish.)
bool projectively_equal(const QVec& a, const QVec& b);

TetraConfig config_from_matrix(const QMatrix& g);  // throws on det g = 0

// Validity of the type invariants: nonzero vectors, the quadratic
// Pluecker relation in rank 2, and incidence between nested subsets.
bool config_valid(const TetraConfig& c, std::string* why = nullptr);

// Membership in the affine cell around the reference flag: the
// normalization coordinate (index 1 / 12 / 123) of every subspace is
// nonzero. Exactly the condition for all chart sections to exist.
bool is_general_position(const TetraConfig& c);
std::optional<Mask> general_position_failure(const TetraConfig& c);

// Number of projectively distinct rank-k subspaces, k = 1,2,3.
int n_k(const TetraConfig& c, int k);
std::array<int, 3> n_profile(const TetraConfig& c);

// ----------------------------------------------------------------- chart

// Normalized chart data of a general-position configuration: all ratios
// f_{I,J} = p^I_J / p^I_{J0}, the six flag coordinates, and the 24 edge
// coordinates x_{I,J} = f_{J,K} - f_{I,K} (K = 2, 13, 124 by rank).
struct NormalizedChart {
    // f[sid of I][pluecker coord pos of J]
    std::array<QVec, kNumSubsets> f;
    std::array<Rat, 6> flag;  // f_{1,2}, f_{1,3}, f_{1,4}, f_{12,13}, f_{12,14}, f_{123,124}
    std::array<Rat, 24> x;    // by edge index

    Rat f_of(Mask I, Mask J) const {
        return f[static_cast<std::size_t>(sid_of(I))]
                [static_cast<std::size_t>(pluecker_coord_pos(subset_rank(I), J))];
    }
};

// The distinguished section of a subspace: the unique vector of pi_I
// meeting the reference flag, normalized to have 1 in slot rank(I).
QVec section_vector(const NormalizedChart& chart, Mask I);

// Exact; verifies the edge identity s_J - s_I = x_{IJ} s_{I u J} for all
// 24 edges and throws if the input violates general position.
NormalizedChart normalize(const TetraConfig& c);

// Rebuild the full chart from the 6 flag coordinates and 24 edge
// coordinates, walking sections in the order
// 1, 12, 123, 2, 13, 3, 23, 124, 14, 4, 24, 134, 34, 234.
// Inputs must satisfy the chart relations (checked; throws otherwise).
NormalizedChart reconstruct_chart(const std::array<Rat, 6>& flag, const std::array<Rat, 24>& x);

// The configuration a chart describes (subspaces spanned by sections).
TetraConfig config_from_chart(const NormalizedChart& chart);

// -------------------------------------------------------------- sampling

struct SampleOptions {
    long entry_bound = 9;              // entries uniform in [-bound, bound]
    bool require_nonzero_edges = false;  // also reject charts with some x = 0
    long max_rejections = 1000000;
};

struct SampleStats {
    long rejected_singular = 0;
    long rejected_position = 0;
    long rejected_edge_zero = 0;
};

// Deterministic from the seed: draw integer matrices, reject until the
// configuration lies in the chart cell.
std::vector<TetraConfig> sample_configs(std::uint64_t seed, int count,
                                        const SampleOptions& opts = {},
                                        SampleStats* stats = nullptr);
QMatrix sample_matrix(SplitMix64& rng, long bound);

}  // namespace tetra
