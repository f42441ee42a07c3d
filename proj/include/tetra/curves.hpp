#pragma once

#include <array>
#include <optional>
#include <string>

#include "tetra/config.hpp"
#include "tetra/core.hpp"
#include "tetra/unipoly.hpp"

namespace tetra {

// One-parameter families of configurations. Coordinates are exact
// rational functions of the deformation parameter t; the limit at t = 0
// is read off leading coefficients, and the induced core point comes
// from renormalizing each face's edge-coordinate vector by its minimal
// t-order. Multihomogeneity of the defining equations makes that limit
// satisfy every core relation automatically.

struct ConfigCurve {
    std::array<std::vector<UniRat>, kNumSubsets> plueckers_t;

    TetraConfig eval(const Rat& t) const;

    // Leading-coefficient configuration; throws if the limit leaves the
    // chart cell (naming the failing normalization coordinate).
    TetraConfig limit() const;

    // Limit of the induced core values along the curve.
    CorePoint core_limit() const;

    std::array<int, 3> limit_profile() const;
};

struct OneParamWeights {
    std::array<int, 4> a{0, 0, 0, 0};
};

// Diagonal one-parameter subgroup: the coordinate indexed by the basis
// monomial e_J scales by t^(sum of a_j over j in J).
ConfigCurve weight_curve(const TetraConfig& c, const OneParamWeights& w);

struct DegenerationResult {
    ConfigCurve curve;
    TetraConfig limit;
    CorePoint core;
    std::array<int, 3> profile;
};

// Requires a general-position input; the limit must stay in the cell.
DegenerationResult degenerate_and_limit(const TetraConfig& c, const OneParamWeights& w);

// Curve of configurations spanned by four polynomial column vectors.
using PolyColumn = std::array<UniPoly, 4>;
ConfigCurve curve_from_columns(const std::array<PolyColumn, 4>& cols);

// Annihilator duality: the rank-k subspace labeled I becomes the
// annihilator of the old subspace labeled by the complement of I.
// Exchanges lines and hyperplanes and reverses n_1/n_3.
TetraConfig dual_config(const TetraConfig& c);
ConfigCurve dual_curve(const ConfigCurve& c);

// ---------------------------------------------------------- target splits

// A minimal split type: block sizes for lines, planes, hyperplanes.
struct TargetSplit {
    std::string lines, planes, hyperplanes;  // "31"/"22", "51"/"42"/"33", "31"/"22"
};

bool split_realizable(const TargetSplit& t);
std::vector<TargetSplit> realizable_splits();

// Deterministic-from-seed construction of a curve of nondegenerate
// configurations whose limit is minimally split of the requested type
// and stays inside the chart cell. Returns nullopt for unrealizable
// types. Throws if the retry budget is exhausted (not expected).
std::optional<DegenerationResult> build_split_degeneration(const TargetSplit& target,
                                                           std::uint64_t seed);

}  // namespace tetra
