#include "tetra/core.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tetra/parallel.hpp"
#include "tetra/qmatrix.hpp"
#include "tetra/sparse_poly.hpp"

namespace tetra {

// ----------------------------------------------------------- CorePoint

std::optional<CorePoint> CorePoint::normalized(const std::array<Rat, kNumPairs>& raw) {
    CorePoint z;
    z.y = raw;
    for (const auto& f : all_faces()) {
        Rat scale(0);
        for (int e : f.edges) {
            const Rat& v = z.y[static_cast<std::size_t>(pair_index(f.id, e))];
            if (!is_zero(v)) {
                scale = v;
                break;
            }
        }
        if (is_zero(scale)) return std::nullopt;
        for (int e : f.edges) z.y[static_cast<std::size_t>(pair_index(f.id, e))] /= scale;
    }
    return z;
}

std::vector<bool> CorePoint::zero_pattern() const {
    std::vector<bool> zp(kNumPairs);
    for (int i = 0; i < kNumPairs; ++i) zp[static_cast<std::size_t>(i)] = is_zero(y[static_cast<std::size_t>(i)]);
    return zp;
}

CorePoint core_from_chart(const NormalizedChart& chart) {
    std::array<Rat, kNumPairs> raw;
    for (const auto& p : all_pairs()) {
        const Rat& x = chart.x[static_cast<std::size_t>(p.edge)];
        if (is_zero(x))
            throw std::invalid_argument("core_from_chart: edge coordinate vanishes at " +
                                        edge_at(p.edge).name());
        raw[static_cast<std::size_t>(pair_index(p.face, p.edge))] = x;
    }
    auto z = CorePoint::normalized(raw);
    if (!z) throw std::logic_error("core_from_chart: normalization failed");
    return *z;
}

bool core_point_on_variety(const CorePoint& z, std::string* why) {
    QVec v(z.y.begin(), z.y.end());
    for (const auto& r : core_relations())
        if (!is_zero(r.poly.evaluate(v))) {
            if (why) *why = "relation " + r.describe() + " does not vanish";
            return false;
        }
    return true;
}

CorePoint transport(const CorePoint& z, const SymmetryElement& g) {
    std::array<Rat, kNumPairs> raw;
    for (const auto& p : all_pairs()) {
        const EdgeLabel& e = edge_at(p.edge);
        Mask a = g.apply(e.lo), b = g.apply(e.hi);
        int face2 = g.apply_face(p.face);
        int edge2 = edge_index(a, b);
        Rat v = z.y[static_cast<std::size_t>(pair_index(p.face, p.edge))];
        if (!subset_less(a, b)) v = -v;
        raw[static_cast<std::size_t>(pair_index(face2, edge2))] = v;
    }
    auto out = CorePoint::normalized(raw);
    if (!out) throw std::logic_error("transport: normalization failed");
    return *out;
}

// -------------------------------------------------------- zero patterns

std::vector<RelatedPatternCase> allowed_related_patterns() {
    // Enumerate zero-pattern pairs for two proportional triples subject
    // to a - b + c = 0, keeping host feasibility in mind: a triple that
    // fills a whole component cannot be all zero, a triple inside a
    // maximal component can.
    auto feasible_single = [](int zeros) {
        // 2 zeros force the third by the linear relation
        return zeros == 0 || zeros == 1 || zeros == 3;
    };
    std::vector<RelatedPatternCase> out;
    for (int za : {0, 1, 3})
        for (int zb : {0, 1, 3}) {
            if (!feasible_single(za) || !feasible_single(zb)) continue;
            // proportional triples: if neither is the zero triple the
            // patterns must agree position by position
            if (za == 3 || zb == 3) {
                if (za < zb) continue;  // report each unordered case once
                out.push_back({za == 3 ? TrianglePattern::AllZero
                                       : (za == 1 ? TrianglePattern::OneZero
                                                  : TrianglePattern::NoneZero),
                               zb == 3 ? TrianglePattern::AllZero
                                       : (zb == 1 ? TrianglePattern::OneZero
                                                  : TrianglePattern::NoneZero),
                               false});
            } else if (za == zb) {
                out.push_back({za == 1 ? TrianglePattern::OneZero : TrianglePattern::NoneZero,
                               zb == 1 ? TrianglePattern::OneZero : TrianglePattern::NoneZero,
                               za == 1});
            }
        }
    return out;
}

namespace {

TrianglePattern triple_pattern(const std::array<Rat, 3>& v, int* zero_pos = nullptr) {
    int zeros = 0;
    for (int i = 0; i < 3; ++i)
        if (is_zero(v[static_cast<std::size_t>(i)])) {
            ++zeros;
            if (zero_pos) *zero_pos = i;
        }
    if (zeros == 0) return TrianglePattern::NoneZero;
    if (zeros == 1) return TrianglePattern::OneZero;
    if (zeros == 3) return TrianglePattern::AllZero;
    throw std::logic_error("triple with exactly two zeros");
}

}  // namespace

bool conforms_to_related_patterns(const CorePoint& z, std::string* why) {
    for (const auto& rp : related_pairs()) {
        std::array<Rat, 3> va, vb;
        for (int i = 0; i < 3; ++i) {
            va[static_cast<std::size_t>(i)] =
                z.at(rp.a.host, rp.matched[static_cast<std::size_t>(i)][0]);
            vb[static_cast<std::size_t>(i)] =
                z.at(rp.b.host, rp.matched[static_cast<std::size_t>(i)][1]);
        }
        int pa = -1, pb = -1;
        TrianglePattern ta, tb;
        try {
            ta = triple_pattern(va, &pa);
            tb = triple_pattern(vb, &pb);
        } catch (const std::logic_error&) {
            if (why) *why = "two zeros in a triangle";
            return false;
        }
        bool ok;
        if (ta == TrianglePattern::AllZero || tb == TrianglePattern::AllZero) ok = true;
        else if (ta != tb) ok = false;
        else if (ta == TrianglePattern::OneZero) ok = pa == pb;
        else ok = true;
        // proportionality of the value triples (same shape)
        if (ok && ta != TrianglePattern::AllZero && tb != TrianglePattern::AllZero) {
            for (int i = 0; i < 3 && ok; ++i)
                for (int j = i + 1; j < 3 && ok; ++j)
                    if (!is_zero(va[static_cast<std::size_t>(i)] * vb[static_cast<std::size_t>(j)] -
                                 va[static_cast<std::size_t>(j)] * vb[static_cast<std::size_t>(i)]))
                        ok = false;
        }
        if (!ok) {
            if (why)
                *why = "related pair (" + face_at(rp.a.host).name() + "," +
                       face_at(rp.b.host).name() + ") violates the five allowed zero patterns";
            return false;
        }
    }
    return true;
}

// ------------------------------------------------------ split partitions

std::string SplitPartition::type() const {
    std::size_t a = block_a.size(), b = block_b.size();
    if (a < b) std::swap(a, b);
    return std::to_string(a) + std::to_string(b);
}

bool SplitPartition::same_block(Mask u, Mask v) const {
    auto in = [](const std::vector<Mask>& blk, Mask m) {
        return std::find(blk.begin(), blk.end(), m) != blk.end();
    };
    return (in(block_a, u) && in(block_a, v)) || (in(block_b, u) && in(block_b, v));
}

namespace {

bool block_connected(const std::vector<Mask>& blk) {
    if (blk.empty()) return false;
    std::vector<Mask> seen{blk[0]};
    bool grew = true;
    while (grew) {
        grew = false;
        for (Mask m : blk) {
            if (std::find(seen.begin(), seen.end(), m) != seen.end()) continue;
            for (Mask s : seen)
                if (is_edge(m, s)) {
                    seen.push_back(m);
                    grew = true;
                    break;
                }
        }
    }
    return seen.size() == blk.size();
}

}  // namespace

std::vector<SplitPartition> split_partitions(int rank) {
    const auto& verts = rank_subsets(rank);
    int n = static_cast<int>(verts.size());
    std::vector<SplitPartition> out;
    // Subsets containing the first vertex are block_a (canonical form).
    for (int bits = 0; bits < (1 << (n - 1)); ++bits) {
        SplitPartition p;
        p.rank = rank;
        p.block_a.push_back(verts[0]);
        for (int i = 1; i < n; ++i) {
            if (bits & (1 << (i - 1))) p.block_a.push_back(verts[static_cast<std::size_t>(i)]);
            else p.block_b.push_back(verts[static_cast<std::size_t>(i)]);
        }
        if (p.block_b.empty()) continue;
        // Both blocks must be connected in the edge graph: the induced
        // zero pattern then has exactly two equivalence classes, i.e.
        // exactly two distinct subspaces downstairs.
        if (!block_connected(p.block_a) || !block_connected(p.block_b)) continue;
        out.push_back(std::move(p));
    }
    return out;
}

// -------------------------------------------------------- special locus

std::string special_type_name(SpecialType t) {
    switch (t) {
        case SpecialType::DDE: return "DDE";
        case SpecialType::CDE: return "CDE";
        case SpecialType::CCstarE: return "CC*E";
        case SpecialType::CCstarNopD: return "CC*_nopD";
        case SpecialType::CCstarOpD: return "CC*_opD";
        case SpecialType::Unclassified: return "unclassified";
    }
    return "?";
}

int Catalog::isolated_count() const {
    int n = 0;
    for (const auto& r : records)
        if (r.dimension == 0) ++n;
    return n;
}

int Catalog::family_count() const {
    int n = 0;
    for (const auto& r : records)
        if (r.dimension == 1) ++n;
    return n;
}

std::vector<std::pair<SpecialType, int>> Catalog::orbit_sizes() const {
    std::map<SpecialType, int> sizes;
    for (const auto& r : records) ++sizes[r.type];
    return {sizes.begin(), sizes.end()};
}

namespace {

// --- solver state for one partition triple -----------------------------

struct FaceState {
    bool resolved = false;
    QVec shape;                 // 3 values when resolved
    std::vector<QVec> basis;    // kernel basis when free (2 columns)
    int cluster = -1;           // parameter cluster for free faces
    bool derived = false;       // free face whose shape follows its partner
};

int edge_pos_in_face(int face, int edge) {
    const auto& es = face_at(face).edges;
    for (std::size_t i = 0; i < es.size(); ++i)
        if (es[static_cast<std::size_t>(i)] == edge) return static_cast<int>(i);
    return -1;
}

// Linear relation row of a triangle face, in the face's edge-list order.
QVec face_linear_row(int face) {
    OrderedTriangle t = ordered_triangle(face);
    QVec row(3, Rat(0));
    const Rat signs[3] = {Rat(1), Rat(-1), Rat(1)};
    for (int i = 0; i < 3; ++i)
        row[static_cast<std::size_t>(edge_pos_in_face(face, t.edges[static_cast<std::size_t>(i)]))] =
            signs[i];
    return row;
}

struct TripleSolver {
    std::array<const SplitPartition*, 3> split;
    std::array<std::optional<Rat>, kNumPairs> value;  // maximal + rigid entries
    std::map<int, FaceState> faces;                   // triangle face id -> state
    std::string reject_reason;

    bool maximal_pair_zero(int face, int edge) const {
        const auto& f = face_at(face);
        const auto& e = edge_at(edge);
        return split[static_cast<std::size_t>(f.rank - 1)]->same_block(e.lo, e.hi);
    }

    bool solve_maximal_components() {
        for (int rank = 1; rank <= 3; ++rank) {
            int fid = maximal_face_id(rank);
            const auto& f = face_at(fid);
            std::vector<int> unknowns;
            for (int e : f.edges) {
                if (maximal_pair_zero(fid, e))
                    value[static_cast<std::size_t>(pair_index(fid, e))] = Rat(0);
                else
                    unknowns.push_back(e);
            }
            if (unknowns.empty()) {
                reject_reason = "maximal component all zero";
                return false;
            }
            // Rows: the linear relations hosted in this maximal face.
            std::vector<QVec> rows;
            for (const auto& g : all_faces()) {
                if (!g.is_triangle() || g.rank != rank) continue;
                OrderedTriangle t = ordered_triangle(g.id);
                QVec row(unknowns.size(), Rat(0));
                const Rat signs[3] = {Rat(1), Rat(-1), Rat(1)};
                bool nontrivial = false;
                for (int i = 0; i < 3; ++i) {
                    int e = t.edges[static_cast<std::size_t>(i)];
                    if (maximal_pair_zero(fid, e)) continue;
                    auto it = std::find(unknowns.begin(), unknowns.end(), e);
                    row[static_cast<std::size_t>(it - unknowns.begin())] += signs[i];
                    nontrivial = true;
                }
                if (nontrivial) rows.push_back(std::move(row));
            }
            QMatrix m(static_cast<int>(rows.size()), static_cast<int>(unknowns.size()));
            for (std::size_t r = 0; r < rows.size(); ++r)
                for (std::size_t c = 0; c < unknowns.size(); ++c)
                    m.at(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
            auto kernel = m.kernel_basis();
            if (kernel.size() != 1) {
                reject_reason = "maximal component solution space has dimension " +
                                std::to_string(kernel.size());
                return false;
            }
            for (const auto& q : kernel[0])
                if (is_zero(q)) {
                    reject_reason = "crossing coordinate forced to zero";
                    return false;
                }
            Rat scale = kernel[0][0];
            for (std::size_t i = 0; i < unknowns.size(); ++i)
                value[static_cast<std::size_t>(pair_index(fid, unknowns[i]))] = kernel[0][i] / scale;
        }
        return true;
    }

    bool check_maximal_consistency() {
        QVec v(kNumPairs, Rat(0));
        for (int i = 0; i < kNumPairs; ++i)
            if (value[static_cast<std::size_t>(i)]) v[static_cast<std::size_t>(i)] = *value[static_cast<std::size_t>(i)];
        for (const auto& r : core_relations()) {
            if (!r.maximal_hosts) continue;
            if (!is_zero(r.poly.evaluate(v))) {
                reject_reason = "maximal values violate " + r.describe();
                return false;
            }
        }
        return true;
    }

    // Factor lookup during propagation: resolved triangle faces
    // contribute their shape entry, maximal faces their value.
    std::optional<Rat> factor_value(int pair) const {
        const auto& p = all_pairs()[static_cast<std::size_t>(pair)];
        if (face_at(p.face).maximal) return value[static_cast<std::size_t>(pair)];
        auto it = faces.find(p.face);
        if (it == faces.end() || !it->second.resolved) return std::nullopt;
        return it->second.shape[static_cast<std::size_t>(edge_pos_in_face(p.face, p.edge))];
    }

    // Collect homogeneous linear constraints on the 3 coordinates of
    // `face` from relations whose other triangle factors are resolved.
    std::vector<QVec> constraint_rows(int face) {
        std::vector<QVec> rows{face_linear_row(face)};
        for (const auto& r : core_relations()) {
            if (r.family == RelFamily::Linear) continue;
            bool touches = false, usable = true;
            for (int v : r.poly.variables()) {
                const auto& p = all_pairs()[static_cast<std::size_t>(v)];
                if (p.face == face) touches = true;
                else if (!face_at(p.face).maximal) {
                    auto it = faces.find(p.face);
                    if (it == faces.end() || !it->second.resolved) usable = false;
                }
            }
            if (!touches || !usable) continue;
            QVec row(3, Rat(0));
            bool informative = false;
            for (const auto& [mono, coeff] : r.poly.terms()) {
                Rat c = coeff;
                int target = -1;
                bool dead = false;
                for (const auto& [v, e] : mono.factors) {
                    const auto& p = all_pairs()[static_cast<std::size_t>(v)];
                    if (p.face == face) {
                        target = edge_pos_in_face(face, p.edge);
                    } else {
                        auto val = factor_value(v);
                        if (!val) throw std::logic_error("unresolved factor slipped through");
                        if (is_zero(*val)) {
                            dead = true;
                            break;
                        }
                        c *= *val;
                    }
                }
                if (dead || target < 0) continue;
                row[static_cast<std::size_t>(target)] += c;
                informative = true;
            }
            if (informative && !all_zero(row)) rows.push_back(std::move(row));
        }
        return rows;
    }

    // Iterate until every triangle face is resolved or stably free.
    bool propagate_triangles() {
        for (const auto& f : all_faces())
            if (f.is_triangle()) faces[f.id] = FaceState{};
        bool progress = true;
        while (progress) {
            progress = false;
            for (auto& [fid, st] : faces) {
                if (st.resolved) continue;
                auto rows = constraint_rows(fid);
                QMatrix m(static_cast<int>(rows.size()), 3);
                for (std::size_t r = 0; r < rows.size(); ++r)
                    for (int c = 0; c < 3; ++c) m.at(static_cast<int>(r), c) = rows[r][static_cast<std::size_t>(c)];
                auto kernel = m.kernel_basis();
                if (kernel.empty()) {
                    reject_reason = "triangle component " + face_at(fid).name() + " forced to zero";
                    return false;
                }
                if (kernel.size() == 1) {
                    st.resolved = true;
                    st.shape = kernel[0];
                    progress = true;
                } else {
                    st.basis = kernel;
                }
            }
        }
        return true;
    }
};

// --- parametrized solutions ---------------------------------------------

// Symbolic 72-vector over the cluster parameters; cluster c owns
// variables 2c and 2c+1.
struct Parametrized {
    std::vector<SparsePoly> entries{static_cast<std::size_t>(kNumPairs)};
    int clusters = 0;
};

SparsePoly lincomb(const QVec& basis0, const QVec& basis1, int cluster, int pos) {
    SparsePoly p;
    p = p + SparsePoly::var(2 * cluster).scaled(basis0[static_cast<std::size_t>(pos)]);
    p = p + SparsePoly::var(2 * cluster + 1).scaled(basis1[static_cast<std::size_t>(pos)]);
    return p;
}

// Generalized cross product of two symbolic 3-rows.
std::array<SparsePoly, 3> cross_rows(const std::array<SparsePoly, 3>& u,
                                     const std::array<SparsePoly, 3>& v) {
    return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

struct SolveOutcome {
    // isolated points as raw coordinate arrays, and/or a one-dimensional
    // family as a parametrization in one projective parameter
    std::vector<std::array<Rat, kNumPairs>> points;
    struct Family {
        std::vector<SparsePoly> entries;  // in theta_0, theta_1 (vars 0,1)
        std::string relation;
        SparsePoly condition;  // the bihomogeneous form that cut it
    };
    std::optional<Family> family;
    std::string reject_reason;
    bool rejected = false;
};

std::string render_uv_relation(const SparsePoly& cond, int cu, int cv) {
    // Affine rendering: u = theta_{cu,1}/theta_{cu,0}, v likewise.
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : cond.terms()) {
        int du = 0, dv = 0;
        for (const auto& [v, e] : m.factors) {
            if (v == 2 * cu + 1) du = e;
            if (v == 2 * cv + 1) dv = e;
        }
        Rat a = c;
        std::string mono;
        if (du) mono += "u";
        if (dv) mono += mono.empty() ? "v" : "*v";
        if (first) {
            if (sgn(a) < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (sgn(a) < 0 ? " - " : " + ");
            if (sgn(a) < 0) a = -a;
        }
        first = false;
        if (a != 1 || mono.empty()) os << rat_to_string(a) << (mono.empty() ? "" : "*");
        os << mono;
    }
    os << " = 0";
    return os.str();
}

SolveOutcome solve_pattern(TripleSolver& ts) {
    SolveOutcome out;

    // Free faces pair up with their rotated partners.
    std::vector<int> free_faces;
    for (auto& [fid, st] : ts.faces)
        if (!st.resolved) free_faces.push_back(fid);

    Parametrized par;
    for (int i = 0; i < kNumPairs; ++i)
        if (ts.value[static_cast<std::size_t>(i)])
            par.entries[static_cast<std::size_t>(i)] = SparsePoly(*ts.value[static_cast<std::size_t>(i)]);
    for (auto& [fid, st] : ts.faces) {
        if (!st.resolved) continue;
        const auto& f = face_at(fid);
        for (std::size_t i = 0; i < 3; ++i)
            par.entries[static_cast<std::size_t>(pair_index(fid, f.edges[i]))] =
                SparsePoly(st.shape[i]);
    }

    std::vector<SparsePoly> extra_conditions;

    std::set<int> assigned;
    for (int fid : free_faces) {
        if (assigned.count(fid)) continue;
        auto rp = rotated_partner(fid);
        if (!rp || !ts.faces[rp->triangle].basis.size() || ts.faces[rp->triangle].resolved) {
            out.rejected = true;
            out.reject_reason = "free face without a free rotation partner";
            return out;
        }
        int gid = rp->triangle;
        int cluster = par.clusters++;
        assigned.insert(fid);
        assigned.insert(gid);
        FaceState& sf = ts.faces[fid];
        FaceState& sg = ts.faces[gid];
        sf.cluster = cluster;
        sg.cluster = cluster;
        sg.derived = true;

        const auto& ff = face_at(fid);
        for (std::size_t i = 0; i < 3; ++i)
            par.entries[static_cast<std::size_t>(pair_index(fid, ff.edges[i]))] =
                lincomb(sf.basis[0], sf.basis[1], cluster, static_cast<int>(i));

        // Pin the partner: stack the relations joining exactly these two
        // free faces, linear in the partner coordinates, and take the
        // kernel via a symbolic cross product with the partner's own
        // linear relation.
        std::vector<std::array<SparsePoly, 3>> rows;
        {
            QVec lin = face_linear_row(gid);
            rows.push_back({SparsePoly(lin[0]), SparsePoly(lin[1]), SparsePoly(lin[2])});
        }
        for (const auto& r : core_relations()) {
            if (r.family == RelFamily::Linear) continue;
            bool touches_g = false, ok = true;
            for (int v : r.poly.variables()) {
                const auto& p = all_pairs()[static_cast<std::size_t>(v)];
                if (p.face == gid) touches_g = true;
                else if (!face_at(p.face).maximal && p.face != fid &&
                         !ts.faces[p.face].resolved)
                    ok = false;
            }
            if (!touches_g || !ok) continue;
            std::array<SparsePoly, 3> row{};
            bool informative = false;
            for (const auto& [mono, coeff] : r.poly.terms()) {
                SparsePoly c{coeff};
                int target = -1;
                for (const auto& [v, e] : mono.factors) {
                    const auto& p = all_pairs()[static_cast<std::size_t>(v)];
                    if (p.face == gid) target = edge_pos_in_face(gid, p.edge);
                    else c = c * par.entries[static_cast<std::size_t>(v)];
                }
                if (target < 0 || c.zero()) continue;
                row[static_cast<std::size_t>(target)] = row[static_cast<std::size_t>(target)] + c;
                informative = true;
            }
            if (informative) rows.push_back(std::move(row));
        }
        // Find a symbolic row that is not a constant multiple of the
        // linear row to cross with.
        std::array<SparsePoly, 3> kernel{};
        bool found = false;
        for (std::size_t i = 1; i < rows.size() && !found; ++i) {
            auto cand = cross_rows(rows[0], rows[i]);
            if (!cand[0].zero() || !cand[1].zero() || !cand[2].zero()) {
                kernel = cand;
                found = true;
            }
        }
        if (!found) {
            out.rejected = true;
            out.reject_reason = "partner face not pinned by its pair relations";
            return out;
        }
        const auto& fg = face_at(gid);
        for (std::size_t i = 0; i < 3; ++i)
            par.entries[static_cast<std::size_t>(pair_index(gid, fg.edges[i]))] = kernel[i];
        // Remaining rows must annihilate the kernel identically; anything
        // left over joins the global conditions.
        for (std::size_t i = 1; i < rows.size(); ++i) {
            SparsePoly dot;
            for (int c = 0; c < 3; ++c)
                dot = dot + rows[i][static_cast<std::size_t>(c)] * kernel[static_cast<std::size_t>(c)];
            if (!dot.zero()) extra_conditions.push_back(dot);
        }
    }

    // Global conditions: every relation evaluated on the parametrization.
    std::vector<SparsePoly> conditions = std::move(extra_conditions);
    for (const auto& r : core_relations()) {
        SparsePoly val{Rat(0)};
        for (const auto& [mono, coeff] : r.poly.terms()) {
            SparsePoly term{coeff};
            for (const auto& [v, e] : mono.factors) {
                for (int t = 0; t < e; ++t) term = term * par.entries[static_cast<std::size_t>(v)];
                if (term.zero()) break;
            }
            val = val + term;
        }
        if (!val.zero()) conditions.push_back(val);
    }

    auto assemble = [&](const std::map<int, std::array<Rat, 2>>& theta)
        -> std::optional<std::array<Rat, kNumPairs>> {
        QVec point(2 * static_cast<std::size_t>(par.clusters), Rat(0));
        for (const auto& [c, t] : theta) {
            point[static_cast<std::size_t>(2 * c)] = t[0];
            point[static_cast<std::size_t>(2 * c) + 1] = t[1];
        }
        std::array<Rat, kNumPairs> raw;
        for (int i = 0; i < kNumPairs; ++i)
            raw[static_cast<std::size_t>(i)] = par.entries[static_cast<std::size_t>(i)].evaluate(point);
        return raw;
    };

    if (par.clusters == 0) {
        if (!conditions.empty()) {
            out.rejected = true;
            out.reject_reason = "constant relation residue";
            return out;
        }
        out.points.push_back(*assemble({}));
        return out;
    }

    if (par.clusters > 2) {
        out.rejected = true;
        out.reject_reason = "more than two free clusters";
        return out;
    }

    if (par.clusters == 1) {
        // conditions are homogeneous in (theta_0, theta_1)
        bool all_zero_cond = conditions.empty();
        if (all_zero_cond) {
            SolveOutcome::Family fam;
            fam.entries = par.entries;
            fam.relation = "free parameter (no closure condition)";
            out.family = std::move(fam);
            return out;
        }
        out.rejected = true;
        out.reject_reason = "single-cluster closure not implemented for nonzero conditions";
        return out;
    }

    // Two clusters: expect every condition to be a single bihomogeneous
    // bilinear form; a nondegenerate one cuts the parameter torus to a
    // line, parametrized by cluster 0.
    SparsePoly pivot;
    for (const auto& c : conditions) {
        if (pivot.zero()) pivot = c.sign_normalized();
        else {
            // proportionality check: cross-multiply leading terms
            const auto& a = pivot.terms().begin()->second;
            SparsePoly cn = c.sign_normalized();
            const auto& b = cn.terms().begin()->second;
            if (!(pivot.scaled(b) == cn.scaled(a))) {
                out.rejected = true;
                out.reject_reason = "independent closure conditions (isolated cut) not expected";
                return out;
            }
        }
    }
    if (pivot.zero()) {
        out.rejected = true;
        out.reject_reason = "two free clusters with no closure condition (dimension 2)";
        return out;
    }

    // pivot = sum C[m][n] theta0_m theta1_n, m,n in {0,1} picking vars
    // (0,1) and (2,3).
    std::array<std::array<Rat, 2>, 2> C{};
    for (const auto& [m, c] : pivot.terms()) {
        int i = 0, j = 0;
        for (const auto& [v, e] : m.factors) {
            if (v == 1) i = 1;
            if (v == 3) j = 1;
            if (v > 3 || e > 1) {
                out.rejected = true;
                out.reject_reason = "closure condition is not bilinear";
                return out;
            }
        }
        C[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += c;
    }

    SolveOutcome::Family fam;
    fam.condition = pivot;
    fam.relation = render_uv_relation(pivot, 0, 1);
    // theta1 = kernel of (theta0^T C): substitute symbolically.
    SparsePoly r0 = SparsePoly::var(0).scaled(C[0][0]) + SparsePoly::var(1).scaled(C[1][0]);
    SparsePoly r1 = SparsePoly::var(0).scaled(C[0][1]) + SparsePoly::var(1).scaled(C[1][1]);
    // (theta1_0, theta1_1) proportional to (-r1, r0)
    fam.entries.resize(static_cast<std::size_t>(kNumPairs));
    for (int i = 0; i < kNumPairs; ++i) {
        SparsePoly e = par.entries[static_cast<std::size_t>(i)];
        e = e.substitute(2, -r1);
        e = e.substitute(3, r0);
        fam.entries[static_cast<std::size_t>(i)] = std::move(e);
    }
    out.family = std::move(fam);
    return out;
}

}  // namespace

Catalog enumerate_special() {
    Catalog cat;
    auto p1 = split_partitions(1);
    auto p2 = split_partitions(2);
    auto p3 = split_partitions(3);

    for (const auto& s1 : p1)
        for (const auto& s2 : p2)
            for (const auto& s3 : p3) {
                ++cat.stats.partition_triples;
                TripleSolver ts;
                ts.split = {&s1, &s2, &s3};
                if (!ts.solve_maximal_components()) {
                    ++cat.stats.rejected_linear;
                    continue;
                }
                if (!ts.check_maximal_consistency()) {
                    ++cat.stats.rejected_consistency;
                    continue;
                }
                if (!ts.propagate_triangles()) {
                    ++cat.stats.rejected_triangles;
                    continue;
                }
                SolveOutcome so = solve_pattern(ts);
                if (so.rejected) {
                    ++cat.stats.rejected_consistency;
                    continue;
                }

                auto maximal_pattern = [&] {
                    std::vector<bool> zp(kNumPairs, false);
                    for (const auto& p : all_pairs())
                        if (face_at(p.face).maximal)
                            zp[static_cast<std::size_t>(pair_index(p.face, p.edge))] =
                                ts.maximal_pair_zero(p.face, p.edge);
                    return zp;
                };

                for (const auto& raw : so.points) {
                    auto z = CorePoint::normalized(raw);
                    if (!z) continue;
                    std::string why;
                    if (!core_point_on_variety(*z, &why))
                        throw std::logic_error("enumerated point off the variety: " + why);
                    SpecialPointRecord rec;
                    rec.dimension = 0;
                    rec.splits = {s1, s2, s3};
                    rec.maximal_zero_pattern = maximal_pattern();
                    rec.representatives = {*z};
                    rec.id = static_cast<int>(cat.records.size());
                    cat.records.push_back(std::move(rec));
                    ++cat.stats.solved_isolated;
                }
                if (so.family) {
                    SpecialPointRecord rec;
                    rec.dimension = 1;
                    rec.splits = {s1, s2, s3};
                    rec.maximal_zero_pattern = maximal_pattern();
                    FamilyDescription fd;
                    fd.relation = so.family->relation;
                    // Sample the family at fixed parameter values, skipping
                    // parameters that degenerate the pattern.
                    const long samples_num[] = {-1, 1, 2, 3, -2, 5, -3, 7};
                    const long samples_den[] = {1, 3, 1, 1, 1, 2, 2, 3};
                    for (int si = 0; si < 8 && rec.representatives.size() < 3; ++si) {
                        QVec theta{Rat(1), rat(samples_num[si], samples_den[si])};
                        std::array<Rat, kNumPairs> raw;
                        for (int i = 0; i < kNumPairs; ++i)
                            raw[static_cast<std::size_t>(i)] =
                                so.family->entries[static_cast<std::size_t>(i)].evaluate(theta);
                        auto z = CorePoint::normalized(raw);
                        if (!z) continue;
                        // skip parameters that create extra zeros
                        bool degenerate = false;
                        for (int i = 0; i < kNumPairs; ++i) {
                            bool entry_constant =
                                so.family->entries[static_cast<std::size_t>(i)].variables().empty();
                            if (!entry_constant && is_zero(raw[static_cast<std::size_t>(i)]))
                                degenerate = true;
                        }
                        if (degenerate) continue;
                        std::string why;
                        if (!core_point_on_variety(*z, &why))
                            throw std::logic_error("family sample off the variety: " + why);
                        rec.representatives.push_back(*z);
                        fd.parameter_values.push_back(rat(samples_num[si], samples_den[si]));
                    }
                    if (rec.representatives.size() < 3)
                        throw std::logic_error("could not sample 3 family representatives");
                    rec.family = std::move(fd);
                    rec.id = static_cast<int>(cat.records.size());
                    cat.records.push_back(std::move(rec));
                    ++cat.stats.solved_families;
                }
            }

    // ---- orbit grouping under relabeling x duality --------------------
    std::map<std::vector<bool>, int> pattern_to_record;
    for (const auto& r : cat.records) pattern_to_record[r.maximal_zero_pattern] = r.id;

    auto transport_pattern = [](const std::vector<bool>& zp, const SymmetryElement& g) {
        std::vector<bool> out(kNumPairs, false);
        for (const auto& p : all_pairs()) {
            if (!face_at(p.face).maximal) continue;
            int f2 = g.apply_face(p.face);
            int e2 = g.apply_edge(p.edge);
            out[static_cast<std::size_t>(pair_index(f2, e2))] =
                zp[static_cast<std::size_t>(pair_index(p.face, p.edge))];
        }
        return out;
    };

    std::vector<int> orbit(cat.records.size(), -1);
    int next_orbit = 0;
    for (auto& rec : cat.records) {
        if (orbit[static_cast<std::size_t>(rec.id)] >= 0) continue;
        int oid = next_orbit++;
        std::vector<int> stack{rec.id};
        orbit[static_cast<std::size_t>(rec.id)] = oid;
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            for (const auto& g : full_symmetry_group()) {
                auto zp = transport_pattern(cat.records[static_cast<std::size_t>(cur)].maximal_zero_pattern, g);
                auto it = pattern_to_record.find(zp);
                if (it == pattern_to_record.end())
                    throw std::logic_error("special pattern orbit leaves the catalog");
                if (orbit[static_cast<std::size_t>(it->second)] < 0) {
                    orbit[static_cast<std::size_t>(it->second)] = oid;
                    stack.push_back(it->second);
                }
            }
        }
    }
    std::vector<int> orbit_count(static_cast<std::size_t>(next_orbit), 0);
    for (int o : orbit) ++orbit_count[static_cast<std::size_t>(o)];
    for (auto& rec : cat.records) {
        rec.orbit_id = orbit[static_cast<std::size_t>(rec.id)];
        rec.orbit_size = orbit_count[static_cast<std::size_t>(rec.orbit_id)];
        std::string lt = rec.splits[0].type(), ht = rec.splits[2].type();
        if (rec.dimension == 1) rec.type = SpecialType::CCstarOpD;
        else if (rec.orbit_size == 6) rec.type = SpecialType::DDE;
        else if (rec.orbit_size == 12) rec.type = SpecialType::CCstarNopD;
        else if (rec.orbit_size == 24 && lt != ht) rec.type = SpecialType::CDE;
        else if (rec.orbit_size == 24) rec.type = SpecialType::CCstarE;
        else rec.type = SpecialType::Unclassified;
    }
    return cat;
}

// ---------------------------------------------------------- certificates

namespace {

SmoothnessCertificate certificate_with_chart(const CorePoint& z, bool alt_tiebreak) {
    SmoothnessCertificate cert;
    cert.on_variety = core_point_on_variety(z);
    if (!cert.on_variety) return cert;

    // Chart: one nonzero coordinate per component set to 1. Default picks
    // the least edge; the alternate picks the greatest, for the
    // chart-independence check.
    CorePoint w = z;
    for (const auto& f : all_faces()) {
        int chosen = -1;
        const auto& edges = f.edges;
        if (!alt_tiebreak) {
            for (int e : edges)
                if (!is_zero(w.at(f.id, e))) {
                    chosen = e;
                    break;
                }
        } else {
            for (auto it = edges.rbegin(); it != edges.rend(); ++it)
                if (!is_zero(w.at(f.id, *it))) {
                    chosen = *it;
                    break;
                }
        }
        cert.chart_edge[static_cast<std::size_t>(f.id)] = chosen;
        Rat scale = w.at(f.id, chosen);
        for (int e : f.edges) w.y[static_cast<std::size_t>(pair_index(f.id, e))] /= scale;
    }

    std::vector<int> cols;  // pair indices that remain chart coordinates
    for (const auto& p : all_pairs())
        if (cert.chart_edge[static_cast<std::size_t>(p.face)] != p.edge)
            cols.push_back(pair_index(p.face, p.edge));

    QVec at(w.y.begin(), w.y.end());
    const auto& rels = core_relations();
    QMatrix jac(static_cast<int>(rels.size()), static_cast<int>(cols.size()));
    for (std::size_t r = 0; r < rels.size(); ++r) {
        // gradient of a multilinear 2-term polynomial at the point
        for (const auto& [mono, coeff] : rels[r].poly.terms()) {
            for (std::size_t i = 0; i < mono.factors.size(); ++i) {
                int v = mono.factors[i].first;
                auto it = std::lower_bound(cols.begin(), cols.end(), v);
                if (it == cols.end() || *it != v) continue;  // chart coordinate: constant
                Rat cof = coeff;
                for (std::size_t j = 0; j < mono.factors.size(); ++j)
                    if (j != i) cof *= at[static_cast<std::size_t>(mono.factors[j].first)];
                jac.at(static_cast<int>(r), static_cast<int>(it - cols.begin())) += cof;
            }
        }
    }
    cert.jacobian_rank = jac.rank();
    cert.corank = static_cast<int>(cols.size()) - cert.jacobian_rank;
    cert.smooth = cert.corank == 3;
    return cert;
}

}  // namespace

SmoothnessCertificate jacobian_certificate(const CorePoint& z) {
    return certificate_with_chart(z, false);
}

SmoothnessCertificate jacobian_certificate_alt_chart(const CorePoint& z) {
    return certificate_with_chart(z, true);
}

std::optional<int> propagation_bound(const CorePoint& z, bool include_closure_cuts) {
    if (!core_point_on_variety(z)) return std::nullopt;

    // chart: least nonzero coordinate per component contributes d = 0
    std::vector<bool> is_chart(kNumPairs, false);
    for (const auto& f : all_faces())
        for (int e : f.edges)
            if (!is_zero(z.at(f.id, e))) {
                is_chart[static_cast<std::size_t>(pair_index(f.id, e))] = true;
                break;
            }
    std::vector<int> cols;
    for (int i = 0; i < kNumPairs; ++i)
        if (!is_chart[static_cast<std::size_t>(i)]) cols.push_back(i);
    auto col_of = [&](int v) -> int {
        auto it = std::lower_bound(cols.begin(), cols.end(), v);
        return (it != cols.end() && *it == v) ? static_cast<int>(it - cols.begin()) : -1;
    };

    QVec at(z.y.begin(), z.y.end());

    // "Thin" triangle components: every coordinate nonzero. The shape
    // relations of the positive-dimensional locus live on these.
    std::vector<bool> thin_face(kNumFaces, false);
    for (const auto& f : all_faces()) {
        if (f.maximal) continue;
        bool thin = true;
        for (int e : f.edges)
            if (is_zero(z.at(f.id, e))) thin = false;
        thin_face[static_cast<std::size_t>(f.id)] = thin;
    }

    std::vector<QVec> rows;
    for (const auto& r : core_relations()) {
        // differential of the relation at z
        std::map<int, Rat> diff;
        for (const auto& [mono, coeff] : r.poly.terms())
            for (std::size_t i = 0; i < mono.factors.size(); ++i) {
                Rat cof = coeff;
                for (std::size_t j = 0; j < mono.factors.size(); ++j)
                    if (j != i) cof *= at[static_cast<std::size_t>(mono.factors[j].first)];
                if (!is_zero(cof)) diff[mono.factors[i].first] += cof;
            }
        for (auto it = diff.begin(); it != diff.end();)
            it = is_zero(it->second) ? diff.erase(it) : std::next(it);

        bool admit;
        if (r.family == RelFamily::Linear) admit = true;
        else if (diff.size() <= 2) admit = true;  // the two-term rules
        else if (include_closure_cuts) {
            // shape relations: connect a fully nonzero triangle component
            // to the rest (same-shape quadrics, cubic/quartic closure)
            admit = false;
            for (int v : r.poly.variables())
                if (thin_face[static_cast<std::size_t>(all_pairs()[static_cast<std::size_t>(v)].face)]) admit = true;
        } else {
            admit = false;
        }
        if (!admit || diff.empty()) continue;

        QVec row(cols.size(), Rat(0));
        bool nontrivial = false;
        for (const auto& [v, c] : diff) {
            int col = col_of(v);
            if (col >= 0) {
                row[static_cast<std::size_t>(col)] = c;
                nontrivial = true;
            }
        }
        if (nontrivial) rows.push_back(std::move(row));
    }

    QMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c) m.at(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
    return static_cast<int>(cols.size()) - m.rank();
}

// ------------------------------------------------------------- matching

std::optional<CatalogMatch> match_against_catalog(const CorePoint& z, const Catalog& catalog) {
    for (const auto& g : full_symmetry_group()) {
        CorePoint w = transport(z, g);
        auto wz = w.zero_pattern();
        for (const auto& rec : catalog.records) {
            if (rec.dimension == 0) {
                if (rec.representatives[0] == w) return CatalogMatch{rec.id, rec.type, g};
            } else {
                // family: the zero pattern on the maximal components
                // determines the pattern; membership is relation
                // satisfaction under that pattern
                bool same = true;
                for (const auto& p : all_pairs()) {
                    if (!face_at(p.face).maximal) continue;
                    int idx = pair_index(p.face, p.edge);
                    if (wz[static_cast<std::size_t>(idx)] !=
                        rec.maximal_zero_pattern[static_cast<std::size_t>(idx)]) {
                        same = false;
                        break;
                    }
                }
                if (same && core_point_on_variety(w)) return CatalogMatch{rec.id, rec.type, g};
            }
        }
    }
    return std::nullopt;
}

}  // namespace tetra
