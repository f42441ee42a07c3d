#include "tetra/config.hpp"

#include <stdexcept>

#include "tetra/relations.hpp"

namespace tetra {

namespace {

// Signed coordinate of an antisymmetric k-vector at an arbitrary index
// tuple. `p` is indexed by sorted subsets.
Rat form_coord(int rank, const QVec& p, std::vector<int> idx) {
    int sign = 1;
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = i + 1; j < idx.size(); ++j) {
            if (idx[i] == idx[j]) return Rat(0);
            if (idx[i] > idx[j]) {
                std::swap(idx[i], idx[j]);
                sign = -sign;
            }
        }
    Mask m = 0;
    for (int i : idx) m |= static_cast<Mask>(1 << (i - 1));
    int pos = pluecker_coord_pos(rank, m);
    return sign > 0 ? p[static_cast<std::size_t>(pos)] : -p[static_cast<std::size_t>(pos)];
}

}  // namespace

QVec pluecker_of_columns(const QMatrix& g, const std::vector<int>& columns) {
    int k = static_cast<int>(columns.size());
    const auto& coords = rank_subsets(k);
    QVec out;
    out.reserve(coords.size());
    for (Mask rowset : coords) {
        std::vector<int> rows;
        for (int i = 1; i <= 4; ++i)
            if (rowset & (1 << (i - 1))) rows.push_back(i);
        QMatrix minor(k, k);
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c)
                minor.at(r, c) = g.at(rows[static_cast<std::size_t>(r)] - 1,
                                      columns[static_cast<std::size_t>(c)] - 1);
        out.push_back(minor.determinant());
    }
    return out;
}

std::vector<QVec> span_from_pluecker(int rank, const QVec& p) {
    std::vector<QVec> candidates;
    if (rank == 1) {
        candidates.push_back(p);
    } else if (rank == 2) {
        // Contraction of the 2-form along each coordinate direction lands
        // in the plane when the form is decomposable.
        for (int a = 1; a <= 4; ++a) {
            QVec v(4, Rat(0));
            for (int j = 1; j <= 4; ++j)
                if (j != a) v[static_cast<std::size_t>(j - 1)] = form_coord(2, p, {a, j});
            if (!all_zero(v)) candidates.push_back(std::move(v));
        }
    } else {
        for (int a = 1; a <= 4; ++a)
            for (int b = a + 1; b <= 4; ++b) {
                QVec v(4, Rat(0));
                for (int j = 1; j <= 4; ++j)
                    if (j != a && j != b)
                        v[static_cast<std::size_t>(j - 1)] = form_coord(3, p, {a, b, j});
                if (!all_zero(v)) candidates.push_back(std::move(v));
            }
    }
    // Keep an independent subset of the right size.
    std::vector<QVec> basis;
    for (const auto& v : candidates) {
        QMatrix m(static_cast<int>(basis.size()) + 1, 4);
        for (std::size_t r = 0; r < basis.size(); ++r)
            for (int c = 0; c < 4; ++c) m.at(static_cast<int>(r), c) = basis[r][static_cast<std::size_t>(c)];
        for (int c = 0; c < 4; ++c) m.at(static_cast<int>(basis.size()), c) = v[static_cast<std::size_t>(c)];
        if (m.rank() == static_cast<int>(basis.size()) + 1) basis.push_back(v);
        if (static_cast<int>(basis.size()) == rank) break;
    }
    if (static_cast<int>(basis.size()) != rank)
        throw std::invalid_argument("span_from_pluecker: vector is not decomposable of this rank");
    return basis;
}

bool projectively_equal(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (!is_zero(a[i] * b[j] - a[j] * b[i])) return false;
    return true;
}

TetraConfig config_from_matrix(const QMatrix& g) {
    if (g.rows() != 4 || g.cols() != 4) throw std::invalid_argument("config_from_matrix: need 4x4");
    if (is_zero(g.determinant())) throw std::invalid_argument("config_from_matrix: singular matrix");
    TetraConfig c;
    for (int sid = 0; sid < kNumSubsets; ++sid) {
        Mask m = mask_of_sid(sid);
        std::vector<int> cols;
        for (int i = 1; i <= 4; ++i)
            if (m & (1 << (i - 1))) cols.push_back(i);
        c.plueckers[static_cast<std::size_t>(sid)] = pluecker_of_columns(g, cols);
    }
    return c;
}

bool config_valid(const TetraConfig& c, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    for (int sid = 0; sid < kNumSubsets; ++sid) {
        Mask m = mask_of_sid(sid);
        const QVec& p = c.plueckers[static_cast<std::size_t>(sid)];
        std::size_t want = subset_rank(m) == 2 ? 6 : 4;
        if (p.size() != want) return fail("wrong length at " + subset_name(m));
        if (all_zero(p)) return fail("zero vector at " + subset_name(m));
        if (subset_rank(m) == 2) {
            // p12 p34 - p13 p24 + p14 p23 = 0
            if (!is_zero(p[0] * p[5] - p[1] * p[4] + p[2] * p[3]))
                return fail("quadratic relation fails at " + subset_name(m));
        }
    }
    // Incidence between nested subsets one rank apart.
    for (int sid = 0; sid < kNumSubsets; ++sid) {
        Mask I = mask_of_sid(sid);
        int rI = subset_rank(I);
        if (rI == 3) continue;
        for (int sjd = 0; sjd < kNumSubsets; ++sjd) {
            Mask J = mask_of_sid(sjd);
            if (subset_rank(J) != rI + 1 || (I & J) != I) continue;
            auto bI = span_from_pluecker(rI, c.vec(I));
            auto bJ = span_from_pluecker(rI + 1, c.vec(J));
            QMatrix m(rI + 1 + 1, 4);
            for (int r = 0; r <= rI; ++r)
                for (int col = 0; col < 4; ++col)
                    m.at(r, col) = bJ[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            for (const auto& v : bI) {
                for (int col = 0; col < 4; ++col) m.at(rI + 1, col) = v[static_cast<std::size_t>(col)];
                if (m.rank() != rI + 1)
                    return fail("incidence fails: " + subset_name(I) + " not inside " + subset_name(J));
            }
        }
    }
    return true;
}

std::optional<Mask> general_position_failure(const TetraConfig& c) {
    // The normalization coordinate is first in each rank's ordering.
    for (int sid = 0; sid < kNumSubsets; ++sid)
        if (is_zero(c.plueckers[static_cast<std::size_t>(sid)][0])) return mask_of_sid(sid);
    return std::nullopt;
}

bool is_general_position(const TetraConfig& c) { return !general_position_failure(c).has_value(); }

int n_k(const TetraConfig& c, int k) {
    const auto& subs = rank_subsets(k);
    std::vector<const QVec*> reps;
    for (Mask m : subs) {
        const QVec& v = c.vec(m);
        bool found = false;
        for (const QVec* r : reps)
            if (projectively_equal(*r, v)) {
                found = true;
                break;
            }
        if (!found) reps.push_back(&v);
    }
    return static_cast<int>(reps.size());
}

std::array<int, 3> n_profile(const TetraConfig& c) { return {n_k(c, 1), n_k(c, 2), n_k(c, 3)}; }

// ----------------------------------------------------------------- chart

QVec section_vector(const NormalizedChart& chart, Mask I) {
    if (I == 0xF) return {Rat(0), Rat(0), Rat(0), Rat(1)};
    int r = subset_rank(I);
    QVec s(4, Rat(0));
    if (r == 1) {
        s[0] = 1;
        s[1] = chart.f_of(I, 0b0010);
        s[2] = chart.f_of(I, 0b0100);
        s[3] = chart.f_of(I, 0b1000);
    } else if (r == 2) {
        s[1] = 1;
        s[2] = chart.f_of(I, 0b0101);   // coordinate 13
        s[3] = chart.f_of(I, 0b1001);   // coordinate 14
    } else {
        s[2] = 1;
        s[3] = chart.f_of(I, 0b1011);   // coordinate 124
    }
    return s;
}

namespace {

Mask edge_slot_subset(int rank) {
    switch (rank) {
        case 1: return 0b0010;  // 2
        case 2: return 0b0101;  // 13
        default: return 0b1011; // 124
    }
}

void fill_edge_coordinates(NormalizedChart& chart) {
    for (const auto& e : all_edges()) {
        Mask K = edge_slot_subset(e.rank);
        chart.x[static_cast<std::size_t>(e.index)] = chart.f_of(e.hi, K) - chart.f_of(e.lo, K);
    }
}

void check_section_identities(const NormalizedChart& chart) {
    for (const auto& e : all_edges()) {
        QVec sI = section_vector(chart, e.lo);
        QVec sJ = section_vector(chart, e.hi);
        QVec sU = section_vector(chart, static_cast<Mask>(e.lo | e.hi));
        const Rat& x = chart.x[static_cast<std::size_t>(e.index)];
        for (int i = 0; i < 4; ++i) {
            Rat lhs = sJ[static_cast<std::size_t>(i)] - sI[static_cast<std::size_t>(i)];
            if (!is_zero(lhs - x * sU[static_cast<std::size_t>(i)]))
                throw std::logic_error("section identity fails at edge " + e.name());
        }
    }
}

}  // namespace

NormalizedChart normalize(const TetraConfig& c) {
    if (auto bad = general_position_failure(c))
        throw std::invalid_argument("normalize: configuration leaves the chart cell at " +
                                    subset_name(*bad));
    NormalizedChart chart;
    for (int sid = 0; sid < kNumSubsets; ++sid) {
        const QVec& p = c.plueckers[static_cast<std::size_t>(sid)];
        QVec f(p.size());
        for (std::size_t j = 0; j < p.size(); ++j) f[j] = p[j] / p[0];
        chart.f[static_cast<std::size_t>(sid)] = std::move(f);
    }
    chart.flag = {chart.f_of(0b0001, 0b0010), chart.f_of(0b0001, 0b0100),
                  chart.f_of(0b0001, 0b1000), chart.f_of(0b0011, 0b0101),
                  chart.f_of(0b0011, 0b1001), chart.f_of(0b0111, 0b1011)};
    fill_edge_coordinates(chart);
    check_section_identities(chart);
    return chart;
}

namespace {

// Reconstruction schedule: each target section comes from one edge whose
// other end and union are already known.
struct Step {
    Mask target, known, join;
};
constexpr std::array<Step, 11> kSchedule = {{
    {0b0010, 0b0001, 0b0011},  // s2   = s1   + x(1,2)    s12
    {0b0101, 0b0011, 0b0111},  // s13  = s12  + x(12,13)  s123
    {0b0100, 0b0001, 0b0101},  // s3   = s1   + x(1,3)    s13
    {0b0110, 0b0101, 0b0111},  // s23  = s13  + x(13,23)  s123
    {0b1011, 0b0111, 0b1111},  // s124 = s123 + x(123,124) e4
    {0b1001, 0b0011, 0b1011},  // s14  = s12  + x(12,14)  s124
    {0b1000, 0b0001, 0b1001},  // s4   = s1   + x(1,4)    s14
    {0b1010, 0b1001, 0b1011},  // s24  = s14  + x(14,24)  s124
    {0b1101, 0b1011, 0b1111},  // s134 = s124 + x(124,134) e4
    {0b1100, 0b1001, 0b1101},  // s34  = s14  + x(14,34)  s134
    {0b1110, 0b1101, 0b1111},  // s234 = s134 + x(134,234) e4
}};

QVec wedge_columns(const std::vector<QVec>& cols) {
    int k = static_cast<int>(cols.size());
    QMatrix g(4, k);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < k; ++c) g.at(r, c) = cols[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
    const auto& coords = rank_subsets(k);
    QVec out;
    out.reserve(coords.size());
    for (Mask rowset : coords) {
        std::vector<int> rows;
        for (int i = 1; i <= 4; ++i)
            if (rowset & (1 << (i - 1))) rows.push_back(i);
        QMatrix minor(k, k);
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c) minor.at(r, c) = g.at(rows[static_cast<std::size_t>(r)] - 1, c);
        out.push_back(minor.determinant());
    }
    return out;
}

}  // namespace

NormalizedChart reconstruct_chart(const std::array<Rat, 6>& flag, const std::array<Rat, 24>& x) {
    {
        QVec assignment(x.begin(), x.end());
        for (const auto& rel : chart_relations())
            if (!is_zero(rel.poly.evaluate(assignment)))
                throw std::invalid_argument("reconstruct_chart: input violates relation " +
                                            rel.describe());
    }

    std::array<QVec, 16> s;
    s[0b0001] = {Rat(1), flag[0], flag[1], flag[2]};
    s[0b0011] = {Rat(0), Rat(1), flag[3], flag[4]};
    s[0b0111] = {Rat(0), Rat(0), Rat(1), flag[5]};
    s[0b1111] = {Rat(0), Rat(0), Rat(0), Rat(1)};
    for (const Step& st : kSchedule) {
        const Rat& t = x[static_cast<std::size_t>(edge_index(st.known, st.target))];
        QVec v(4);
        for (int i = 0; i < 4; ++i)
            v[static_cast<std::size_t>(i)] =
                s[st.known][static_cast<std::size_t>(i)] + t * s[st.join][static_cast<std::size_t>(i)];
        s[st.target] = std::move(v);
    }

    NormalizedChart chart;
    for (int sid = 0; sid < kNumSubsets; ++sid) {
        Mask m = mask_of_sid(sid);
        int r = subset_rank(m);
        std::vector<int> elems;
        for (int i = 1; i <= 4; ++i)
            if (m & (1 << (i - 1))) elems.push_back(i);
        std::vector<QVec> cols;
        if (r >= 2) cols.push_back(s[static_cast<Mask>(1 << (elems[0] - 1))]);
        if (r >= 3)
            cols.push_back(s[static_cast<Mask>((1 << (elems[0] - 1)) | (1 << (elems[1] - 1)))]);
        cols.push_back(s[m]);
        QVec p = wedge_columns(cols);
        // The base coordinate of these spans is exactly 1 by triangularity.
        chart.f[static_cast<std::size_t>(sid)] = std::move(p);
    }
    chart.flag = flag;
    fill_edge_coordinates(chart);
    check_section_identities(chart);
    return chart;
}

TetraConfig config_from_chart(const NormalizedChart& chart) {
    TetraConfig c;
    for (int sid = 0; sid < kNumSubsets; ++sid)
        c.plueckers[static_cast<std::size_t>(sid)] = chart.f[static_cast<std::size_t>(sid)];
    return c;
}

// -------------------------------------------------------------- sampling

QMatrix sample_matrix(SplitMix64& rng, long bound) {
    QMatrix g(4, 4);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) g.at(r, c) = rat(rng.range(-bound, bound));
    return g;
}

std::vector<TetraConfig> sample_configs(std::uint64_t seed, int count, const SampleOptions& opts,
                                        SampleStats* stats) {
    SplitMix64 rng(seed);
    std::vector<TetraConfig> out;
    SampleStats local;
    long attempts = 0;
    while (static_cast<int>(out.size()) < count) {
        if (++attempts > opts.max_rejections)
            throw std::runtime_error("sample_configs: rejection budget exhausted");
        QMatrix g = sample_matrix(rng, opts.entry_bound);
        if (is_zero(g.determinant())) {
            ++local.rejected_singular;
            continue;
        }
        TetraConfig c = config_from_matrix(g);
        if (!is_general_position(c)) {
            ++local.rejected_position;
            continue;
        }
        if (opts.require_nonzero_edges) {
            NormalizedChart chart = normalize(c);
            bool zero_edge = false;
            for (const auto& q : chart.x)
                if (is_zero(q)) {
                    zero_edge = true;
                    break;
                }
            if (zero_edge) {
                ++local.rejected_edge_zero;
                continue;
            }
        }
        out.push_back(std::move(c));
    }
    if (stats) *stats = local;
    return out;
}

}  // namespace tetra
