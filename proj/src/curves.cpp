#include "tetra/curves.hpp"

#include <stdexcept>

namespace tetra {

namespace {

UniRat t_pow(int k) {
    if (k >= 0) return UniRat(UniPoly::t_power(k), UniPoly(Rat(1)));
    return UniRat(UniPoly(Rat(1)), UniPoly::t_power(-k));
}

std::vector<int> subset_elements(Mask m) {
    std::vector<int> out;
    for (int i = 1; i <= 4; ++i)
        if (m & (1 << (i - 1))) out.push_back(i);
    return out;
}

// k x k minors of a 4 x k matrix of polynomials, in coordinate order.
std::vector<UniRat> poly_pluecker(const std::vector<PolyColumn>& cols) {
    int k = static_cast<int>(cols.size());
    const auto& coords = rank_subsets(k);
    std::vector<UniRat> out;
    for (Mask rowset : coords) {
        auto rows = subset_elements(rowset);
        UniPoly det;
        std::vector<int> perm(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) perm[static_cast<std::size_t>(i)] = i;
        do {
            int sign = 1;
            for (int a = 0; a < k; ++a)
                for (int b = a + 1; b < k; ++b)
                    if (perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)])
                        sign = -sign;
            UniPoly term{Rat(sign)};
            for (int a = 0; a < k; ++a)
                term = term *
                       cols[static_cast<std::size_t>(perm[static_cast<std::size_t>(a)])]
                           [static_cast<std::size_t>(rows[static_cast<std::size_t>(a)] - 1)];
            det = det + term;
        } while (std::next_permutation(perm.begin(), perm.end()));
        out.push_back(UniRat(det, UniPoly(Rat(1))));
    }
    return out;
}

}  // namespace

TetraConfig ConfigCurve::eval(const Rat& t) const {
    TetraConfig c;
    for (int sid = 0; sid < kNumSubsets; ++sid) {
        const auto& v = plueckers_t[static_cast<std::size_t>(sid)];
        QVec w;
        w.reserve(v.size());
        for (const auto& f : v) w.push_back(f.eval(t));
        c.plueckers[static_cast<std::size_t>(sid)] = std::move(w);
    }
    return c;
}

TetraConfig ConfigCurve::limit() const {
    TetraConfig c;
    for (int sid = 0; sid < kNumSubsets; ++sid) {
        const auto& v = plueckers_t[static_cast<std::size_t>(sid)];
        auto lead = leading_at_order(v);
        if (!lead)
            throw std::invalid_argument("curve limit: subspace " + subset_name(mask_of_sid(sid)) +
                                        " degenerates entirely");
        if (is_zero((*lead)[0]))
            throw std::invalid_argument(
                "curve limit leaves the chart cell: normalization coordinate of " +
                subset_name(mask_of_sid(sid)) + " vanishes in the limit");
        c.plueckers[static_cast<std::size_t>(sid)] = std::move(*lead);
    }
    return c;
}

CorePoint ConfigCurve::core_limit() const {
    // Edge coordinates as rational functions: x = f_{hi,K} - f_{lo,K}
    // with f_{I,J}(t) = p_J(t)/p_J0(t) on the subspace I.
    std::array<UniRat, 24> x;
    for (const auto& e : all_edges()) {
        Mask K = e.rank == 1 ? 0b0010 : e.rank == 2 ? 0b0101 : 0b1011;
        int pos = pluecker_coord_pos(e.rank, K);
        const auto& plo = plueckers_t[static_cast<std::size_t>(sid_of(e.lo))];
        const auto& phi = plueckers_t[static_cast<std::size_t>(sid_of(e.hi))];
        if (plo[0].zero() || phi[0].zero())
            throw std::invalid_argument("core limit: curve leaves the chart identically");
        x[static_cast<std::size_t>(e.index)] =
            phi[static_cast<std::size_t>(pos)] / phi[0] - plo[static_cast<std::size_t>(pos)] / plo[0];
    }
    std::array<Rat, kNumPairs> raw;
    for (const auto& f : all_faces()) {
        std::vector<UniRat> vals;
        for (int e : f.edges) vals.push_back(x[static_cast<std::size_t>(e)]);
        auto lead = leading_at_order(vals);
        if (!lead)
            throw std::invalid_argument("core limit: face vector of " + f.name() +
                                        " vanishes identically along the curve");
        for (std::size_t i = 0; i < f.edges.size(); ++i)
            raw[static_cast<std::size_t>(pair_index(f.id, f.edges[i]))] = (*lead)[i];
    }
    auto z = CorePoint::normalized(raw);
    if (!z) throw std::logic_error("core limit: normalization failed");
    return *z;
}

std::array<int, 3> ConfigCurve::limit_profile() const { return n_profile(limit()); }

ConfigCurve weight_curve(const TetraConfig& c, const OneParamWeights& w) {
    ConfigCurve curve;
    for (int sid = 0; sid < kNumSubsets; ++sid) {
        Mask m = mask_of_sid(sid);
        int k = subset_rank(m);
        const auto& coords = rank_subsets(k);
        std::vector<UniRat> v;
        for (std::size_t j = 0; j < coords.size(); ++j) {
            int wt = 0;
            for (int i = 1; i <= 4; ++i)
                if (coords[j] & (1 << (i - 1))) wt += w.a[static_cast<std::size_t>(i - 1)];
            v.push_back(UniRat(c.plueckers[static_cast<std::size_t>(sid)][j]) * t_pow(wt));
        }
        curve.plueckers_t[static_cast<std::size_t>(sid)] = std::move(v);
    }
    return curve;
}

DegenerationResult degenerate_and_limit(const TetraConfig& c, const OneParamWeights& w) {
    if (auto bad = general_position_failure(c))
        throw std::invalid_argument("degenerate_and_limit: input outside the chart cell at " +
                                    subset_name(*bad));
    DegenerationResult res;
    res.curve = weight_curve(c, w);
    res.limit = res.curve.limit();
    res.core = res.curve.core_limit();
    res.profile = n_profile(res.limit);
    return res;
}

ConfigCurve curve_from_columns(const std::array<PolyColumn, 4>& cols) {
    ConfigCurve curve;
    for (int sid = 0; sid < kNumSubsets; ++sid) {
        Mask m = mask_of_sid(sid);
        std::vector<PolyColumn> chosen;
        for (int i : subset_elements(m)) chosen.push_back(cols[static_cast<std::size_t>(i - 1)]);
        curve.plueckers_t[static_cast<std::size_t>(sid)] = poly_pluecker(chosen);
    }
    return curve;
}

namespace {

// Hodge sign for the annihilator: position of J inside (J, J^c).
int hodge_sign(Mask J) {
    auto a = subset_elements(J), b = subset_elements(subset_complement(J));
    std::vector<int> seq = a;
    seq.insert(seq.end(), b.begin(), b.end());
    int sign = 1;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] > seq[j]) sign = -sign;
    return sign;
}

}  // namespace

TetraConfig dual_config(const TetraConfig& c) {
    TetraConfig d;
    for (int sid = 0; sid < kNumSubsets; ++sid) {
        Mask I = mask_of_sid(sid);
        Mask Ic = subset_complement(I);
        int k = subset_rank(I);
        const auto& coords = rank_subsets(k);
        const QVec& src = c.vec(Ic);
        QVec v;
        for (Mask J : coords) {
            Mask Jc = subset_complement(J);
            int pos = pluecker_coord_pos(4 - k, Jc);
            Rat q = src[static_cast<std::size_t>(pos)];
            if (hodge_sign(J) < 0) q = -q;
            v.push_back(q);
        }
        d.plueckers[static_cast<std::size_t>(sid)] = std::move(v);
    }
    return d;
}

ConfigCurve dual_curve(const ConfigCurve& c) {
    ConfigCurve d;
    for (int sid = 0; sid < kNumSubsets; ++sid) {
        Mask I = mask_of_sid(sid);
        Mask Ic = subset_complement(I);
        int k = subset_rank(I);
        const auto& coords = rank_subsets(k);
        const auto& src = c.plueckers_t[static_cast<std::size_t>(sid_of(Ic))];
        std::vector<UniRat> v;
        for (Mask J : coords) {
            Mask Jc = subset_complement(J);
            int pos = pluecker_coord_pos(4 - k, Jc);
            UniRat q = src[static_cast<std::size_t>(pos)];
            if (hodge_sign(J) < 0) q = -q;
            v.push_back(std::move(q));
        }
        d.plueckers_t[static_cast<std::size_t>(sid)] = std::move(v);
    }
    return d;
}

// ---------------------------------------------------------- target splits

bool split_realizable(const TargetSplit& t) {
    for (const auto& r : realizable_splits())
        if (r.lines == t.lines && r.planes == t.planes && r.hyperplanes == t.hyperplanes)
            return true;
    return false;
}

std::vector<TargetSplit> realizable_splits() {
    // Lines collapsing (2,2) force the four mixed planes onto one plane,
    // so the plane split must be (5,1); the other combinations below are
    // the ones the special locus actually contains.
    return {
        {"22", "51", "22"},  // DDE
        {"31", "51", "22"},  // CDE
        {"22", "51", "31"},  // CDE, dual presentation
        {"31", "51", "31"},  // CC*E
        {"31", "42", "31"},  // CC*_nopD
        {"31", "33", "31"},  // CC*_opD
    };
}

namespace {


// c0 + t c1 + t^2 c2 + t^3 c3 with vector coefficients
PolyColumn column(const std::array<QVec, 4>& levels) {
    PolyColumn col;
    for (int coord = 0; coord < 4; ++coord) {
        QVec cs;
        for (int lvl = 0; lvl < 4; ++lvl) cs.push_back(levels[static_cast<std::size_t>(lvl)][static_cast<std::size_t>(coord)]);
        col[static_cast<std::size_t>(coord)] = UniPoly(cs);
    }
    return col;
}

QVec rand_vec(SplitMix64& rng, long bound) {
    return {rat(rng.range(-bound, bound)), rat(rng.range(-bound, bound)),
            rat(rng.range(-bound, bound)), rat(rng.range(-bound, bound))};
}

QVec add(const QVec& a, const QVec& b, const Rat& s = Rat(1)) {
    QVec out(4);
    for (int i = 0; i < 4; ++i) out[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)] + s * b[static_cast<std::size_t>(i)];
    return out;
}

const QVec kZero4{Rat(0), Rat(0), Rat(0), Rat(0)};

// One attempt at each split type; collapse schedules found by expanding
// the wedge products order by order (see the tests for the census each
// construction must satisfy).
std::array<PolyColumn, 4> split_columns(const TargetSplit& target, SplitMix64& rng) {
    const long B = 4;
    QVec u = rand_vec(rng, B), up2 = rand_vec(rng, B);
    QVec r1 = rand_vec(rng, B), r3 = rand_vec(rng, B);
    QVec s = rand_vec(rng, B), w = rand_vec(rng, B);
    Rat beta = rat(rng.range(1, 3)), d = rat(rng.range(1, 3));

    std::string key = target.lines + target.planes + target.hyperplanes;
    if (key == "225122") {
        // lines pair off along u and u'; the odd plane hangs off the
        // second pair, the two hyperplane pairs split at second order
        return {column({u, r1, kZero4, kZero4}),
                column({u, add(r1, up2, beta), s, kZero4}),
                column({up2, r3, kZero4, kZero4}),
                column({up2, add(r3, up2, d), w, kZero4})};
    }
    if (key == "315122") {
        return {column({u, r1, kZero4, kZero4}),
                column({u, add(r1, up2, beta), s, kZero4}),
                column({u, add(r1, up2, beta), s, w}),
                column({up2, kZero4, kZero4, kZero4})};
    }
    if (key == "315131") {
        Rat e1 = rat(rng.range(1, 3)), e2 = rat(rng.range(-3, 3));
        QVec s2 = add(add(kZero4, u, e1), up2, e2);
        return {column({u, r1, kZero4, kZero4}),
                column({u, add(r1, up2, beta), s2, kZero4}),
                column({u, add(r1, up2, beta), s, kZero4}),
                column({up2, kZero4, kZero4, kZero4})};
    }
    if (key == "314231") {
        Rat cc = rat(rng.range(1, 3));
        return {column({u, r1, kZero4, kZero4}),
                column({u, r1, add(kZero4, up2, cc), s}),
                column({u, r3, kZero4, kZero4}),
                column({up2, kZero4, kZero4, kZero4})};
    }
    if (key == "313331") {
        Rat a = rat(rng.range(1, 3)), b = a + rat(rng.range(1, 2));
        QVec rho = rand_vec(rng, B), s2 = rand_vec(rng, B), s3 = rand_vec(rng, B);
        return {column({u, r1, kZero4, kZero4}),
                column({u, add(r1, rho, a), s2, kZero4}),
                column({u, add(r1, rho, b), s3, kZero4}),
                column({up2, kZero4, kZero4, kZero4})};
    }
    throw std::invalid_argument("split_columns: no construction for this type");
}

std::array<int, 3> wanted_profile() { return {2, 2, 2}; }

bool type_matches(const TargetSplit& target, const DegenerationResult& res) {
    if (res.profile != wanted_profile()) return false;
    // derive the split sizes from subspace coincidences of the limit
    auto block_sizes = [&](int k) {
        const auto& subs = rank_subsets(k);
        std::vector<int> sizes;
        std::vector<bool> used(subs.size(), false);
        for (std::size_t i = 0; i < subs.size(); ++i) {
            if (used[i]) continue;
            int n = 1;
            used[i] = true;
            for (std::size_t j = i + 1; j < subs.size(); ++j)
                if (!used[j] && projectively_equal(res.limit.vec(subs[i]), res.limit.vec(subs[j]))) {
                    used[j] = true;
                    ++n;
                }
            sizes.push_back(n);
        }
        std::sort(sizes.rbegin(), sizes.rend());
        std::string code;
        for (int n : sizes) code += std::to_string(n);
        return code;
    };
    return block_sizes(1) == target.lines && block_sizes(2) == target.planes &&
           block_sizes(3) == target.hyperplanes;
}

}  // namespace

std::optional<DegenerationResult> build_split_degeneration(const TargetSplit& target,
                                                           std::uint64_t seed) {
    if (!split_realizable(target)) return std::nullopt;
    bool dualized = target.lines == "22" && target.hyperplanes == "31";
    TargetSplit build = target;
    if (dualized) std::swap(build.lines, build.hyperplanes);

    SplitMix64 rng(seed);
    for (int attempt = 0; attempt < 400; ++attempt) {
        std::array<PolyColumn, 4> cols;
        try {
            cols = split_columns(build, rng);
        } catch (const std::invalid_argument&) {
            return std::nullopt;
        }
        ConfigCurve curve = curve_from_columns(cols);
        if (dualized) curve = dual_curve(curve);
        try {
            DegenerationResult res;
            res.curve = curve;
            res.limit = curve.limit();
            res.core = curve.core_limit();
            res.profile = n_profile(res.limit);
            if (!type_matches(target, res)) continue;
            // the generic member must be an honest nondegenerate config
            TetraConfig probe = curve.eval(rat(1, 7));
            if (!config_valid(probe) || !is_general_position(probe)) continue;
            if (n_profile(probe) != std::array<int, 3>{4, 6, 4}) continue;
            return res;
        } catch (const std::invalid_argument&) {
            continue;  // limit left the cell or a face degenerated; retry
        }
    }
    throw std::runtime_error("build_split_degeneration: retry budget exhausted");
}

}  // namespace tetra
