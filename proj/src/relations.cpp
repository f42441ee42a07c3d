#include "tetra/relations.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tetra/config.hpp"
#include "tetra/parallel.hpp"
#include "tetra/qmatrix.hpp"

namespace tetra {

namespace {

Mask single(int i) { return static_cast<Mask>(1 << (i - 1)); }
Mask pair_mask(int i, int j) { return static_cast<Mask>(single(i) | single(j)); }
Mask triple_mask(int i, int j, int k) {
    return static_cast<Mask>(single(i) | single(j) | single(k));
}

// A product of oriented edge factors; orientation signs fold into the
// coefficient when the factor is canonicalized to its edge variable.
struct ChartTerm {
    Rat coeff;
    std::vector<OrientedEdge> factors;
};

SparsePoly chart_poly(const std::vector<ChartTerm>& terms) {
    SparsePoly p;
    for (const auto& t : terms) {
        Rat c = t.coeff;
        Monomial m;
        for (const auto& oe : t.factors) {
            if (oe.sign < 0) c = -c;
            m = m.times(Monomial::var(oe.edge));
        }
        p.add_term(m, c);
    }
    return p;
}

// Same, with a face id per factor (core level); variable = pair index.
struct CoreFactor {
    OrientedEdge edge;
    int face;
};

SparsePoly core_poly(const Rat& c1, const std::vector<CoreFactor>& m1, const Rat& c2,
                     const std::vector<CoreFactor>& m2) {
    SparsePoly p;
    auto add = [&p](Rat c, const std::vector<CoreFactor>& fs) {
        Monomial m;
        for (const auto& f : fs) {
            if (f.edge.sign < 0) c = -c;
            int v = pair_index(f.face, f.edge.edge);
            if (v < 0) throw std::logic_error("core_poly: edge not in face");
            m = m.times(Monomial::var(v));
        }
        p.add_term(m, c);
    };
    add(c1, m1);
    add(c2, m2);
    return p;
}

struct PatternTuples {
    std::vector<std::array<int, 3>> triples;
    std::vector<std::array<int, 4>> quads;
};

const PatternTuples& tuples() {
    static const PatternTuples t = [] {
        PatternTuples out;
        for (int i = 1; i <= 4; ++i)
            for (int j = 1; j <= 4; ++j)
                for (int k = 1; k <= 4; ++k) {
                    if (i == j || i == k || j == k) continue;
                    out.triples.push_back({i, j, k});
                    for (int l = 1; l <= 4; ++l) {
                        if (l == i || l == j || l == k) continue;
                        out.quads.push_back({i, j, k, l});
                    }
                }
        return out;
    }();
    return t;
}

// Oriented edge lists of the four chart-level patterns. The first list
// carries the positive monomial.
struct QuadPattern {
    OrientedEdge a1, a2, a1s, a2s;
};

QuadPattern quad_pattern_low(int i, int j, int k) {
    return {oriented_edge(single(i), single(j)), oriented_edge(single(j), single(k)),
            oriented_edge(pair_mask(i, k), pair_mask(j, k)),
            oriented_edge(pair_mask(i, j), pair_mask(i, k))};
}

QuadPattern quad_pattern_high(int i, int j, int k, int l) {
    return {oriented_edge(pair_mask(i, l), pair_mask(j, l)),
            oriented_edge(pair_mask(j, l), pair_mask(k, l)),
            oriented_edge(triple_mask(i, k, l), triple_mask(j, k, l)),
            oriented_edge(triple_mask(i, j, l), triple_mask(i, k, l))};
}

struct CubicPattern {
    std::array<OrientedEdge, 3> lhs, rhs;
};

CubicPattern cubic_pattern(int i, int j, int k, int l) {
    return {{oriented_edge(pair_mask(i, j), pair_mask(i, l)),
             oriented_edge(pair_mask(i, k), pair_mask(k, l)),
             oriented_edge(pair_mask(j, k), pair_mask(j, l))},
            {oriented_edge(pair_mask(j, k), pair_mask(k, l)),
             oriented_edge(pair_mask(i, j), pair_mask(j, l)),
             oriented_edge(pair_mask(i, k), pair_mask(i, l))}};
}

struct QuarticPattern {
    std::array<OrientedEdge, 4> lhs, rhs;
};

QuarticPattern quartic_pattern(int i, int j, int k, int l) {
    return {{oriented_edge(single(i), single(j)), oriented_edge(single(k), single(l)),
             oriented_edge(triple_mask(i, j, l), triple_mask(i, k, l)),
             oriented_edge(triple_mask(j, k, l), triple_mask(i, j, k))},
            {oriented_edge(single(j), single(k)), oriented_edge(single(l), single(i)),
             oriented_edge(triple_mask(i, k, l), triple_mask(j, k, l)),
             oriented_edge(triple_mask(i, j, k), triple_mask(i, j, l))}};
}

class Dedup {
public:
    bool insert(const SparsePoly& p) {
        if (p.zero()) return false;
        return seen_.insert(p.sign_normalized()).second;
    }

private:
    struct Less {
        bool operator()(const SparsePoly& a, const SparsePoly& b) const {
            auto ia = a.terms().begin(), ib = b.terms().begin();
            for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
                if (ia->first < ib->first) return true;
                if (ib->first < ia->first) return false;
                int c = cmp(ia->second, ib->second);
                if (c != 0) return c < 0;
            }
            return ia == a.terms().end() && ib != b.terms().end();
        }
    };
    std::set<SparsePoly, Less> seen_;
};

std::vector<int> host_faces(int edge) { return faces_of_edge(edge); }

std::vector<int> common_hosts(int e1, int e2) {
    std::vector<int> out;
    for (int f : faces_of_edge(e1))
        for (int g : faces_of_edge(e2))
            if (f == g) out.push_back(f);
    return out;
}

bool all_maximal(const std::vector<int>& faces) {
    for (int f : faces)
        if (!face_at(f).maximal) return false;
    return true;
}

std::vector<Relation> build_chart_relations() {
    std::vector<Relation> out;
    Dedup dedup;
    auto push = [&](SparsePoly p, RelFamily fam, std::vector<int> tup) {
        if (!dedup.insert(p)) return;
        Relation r;
        r.poly = std::move(p);
        r.family = fam;
        r.level = RelLevel::Chart;
        r.tuple = std::move(tup);
        out.push_back(std::move(r));
    };

    for (const auto& f : all_faces()) {
        if (!f.is_triangle()) continue;
        OrderedTriangle t = ordered_triangle(f.id);
        SparsePoly p = SparsePoly::var(t.edges[0]) - SparsePoly::var(t.edges[1]) +
                       SparsePoly::var(t.edges[2]);
        push(std::move(p), RelFamily::Linear, {f.id});
    }

    for (const auto& [i, j, k] : tuples().triples) {
        QuadPattern q = quad_pattern_low(i, j, k);
        push(chart_poly({{Rat(1), {q.a1, q.a2s}}, {Rat(-1), {q.a2, q.a1s}}}),
             RelFamily::QuadricRotated, {i, j, k});
    }
    for (const auto& [i, j, k, l] : tuples().quads) {
        QuadPattern q = quad_pattern_high(i, j, k, l);
        push(chart_poly({{Rat(1), {q.a1, q.a2s}}, {Rat(-1), {q.a2, q.a1s}}}),
             RelFamily::QuadricRotated, {i, j, k, l});
    }
    for (const auto& [i, j, k, l] : tuples().quads) {
        CubicPattern c = cubic_pattern(i, j, k, l);
        push(chart_poly({{Rat(1), {c.lhs[0], c.lhs[1], c.lhs[2]}},
                         {Rat(-1), {c.rhs[0], c.rhs[1], c.rhs[2]}}}),
             RelFamily::Cubic, {i, j, k, l});
    }
    for (const auto& [i, j, k, l] : tuples().quads) {
        QuarticPattern q = quartic_pattern(i, j, k, l);
        push(chart_poly({{Rat(1), {q.lhs[0], q.lhs[1], q.lhs[2], q.lhs[3]}},
                         {Rat(-1), {q.rhs[0], q.rhs[1], q.rhs[2], q.rhs[3]}}}),
             RelFamily::Quartic, {i, j, k, l});
    }
    return out;
}

// Face assignments for a 2-term pattern with per-factor host choices,
// filtered to equal face multisets on both sides.
template <std::size_t N, class Emit>
void for_matching_hosts(const std::array<OrientedEdge, N>& lhs,
                        const std::array<OrientedEdge, N>& rhs, Emit emit) {
    std::array<std::vector<int>, N> lhost, rhost;
    for (std::size_t i = 0; i < N; ++i) {
        lhost[i] = host_faces(lhs[i].edge);
        rhost[i] = host_faces(rhs[i].edge);
    }
    std::array<int, N> lsel{}, rsel{};
    auto rec_rhs = [&](auto&& self, std::size_t pos, std::multiset<int> want) -> void {
        if (pos == N) {
            if (want.empty()) {
                std::vector<CoreFactor> m1, m2;
                for (std::size_t i = 0; i < N; ++i) {
                    m1.push_back({lhs[i], lsel[i]});
                    m2.push_back({rhs[i], rsel[i]});
                }
                emit(m1, m2);
            }
            return;
        }
        for (int f : rhost[pos]) {
            auto it = want.find(f);
            if (it == want.end()) continue;
            auto next = want;
            next.erase(next.find(f));
            rsel[pos] = f;
            self(self, pos + 1, std::move(next));
        }
    };
    auto rec_lhs = [&](auto&& self, std::size_t pos) -> void {
        if (pos == N) {
            std::multiset<int> ms(lsel.begin(), lsel.end());
            rec_rhs(rec_rhs, 0, std::move(ms));
            return;
        }
        for (int f : lhost[pos]) {
            lsel[pos] = f;
            self(self, pos + 1);
        }
    };
    rec_lhs(rec_lhs, 0);
}

std::vector<Relation> build_core_relations() {
    std::vector<Relation> out;
    Dedup dedup;
    auto push = [&](SparsePoly p, RelFamily fam, std::vector<int> tup, std::vector<int> faces) {
        if (!dedup.insert(p)) return;
        Relation r;
        r.poly = std::move(p);
        r.family = fam;
        r.level = RelLevel::Core;
        r.tuple = std::move(tup);
        r.maximal_hosts = all_maximal(faces);
        r.faces = std::move(faces);
        out.push_back(std::move(r));
    };

    // Linear: one copy per face whose edge set carries the whole triangle.
    for (const auto& f : all_faces()) {
        if (!f.is_triangle()) continue;
        OrderedTriangle t = ordered_triangle(f.id);
        for (int host : {f.id, maximal_face_id(f.rank)}) {
            SparsePoly p = SparsePoly::var(pair_index(host, t.edges[0])) -
                           SparsePoly::var(pair_index(host, t.edges[1])) +
                           SparsePoly::var(pair_index(host, t.edges[2]));
            push(std::move(p), RelFamily::Linear, {f.id}, {host});
        }
    }

    // Shared-vertex quadrics: cross ratios of two edges seen in two faces.
    for (const auto& e1 : all_edges())
        for (const auto& e2 : all_edges()) {
            if (e2.index <= e1.index || e1.rank != e2.rank) continue;
            int shared = ((e1.lo == e2.lo || e1.lo == e2.hi) ? 1 : 0) +
                         ((e1.hi == e2.lo || e1.hi == e2.hi) ? 1 : 0);
            if (shared != 1) continue;
            auto hosts = common_hosts(e1.index, e2.index);
            for (std::size_t a = 0; a < hosts.size(); ++a)
                for (std::size_t b = a + 1; b < hosts.size(); ++b) {
                    SparsePoly p =
                        SparsePoly::var(pair_index(hosts[a], e1.index)) *
                            SparsePoly::var(pair_index(hosts[b], e2.index)) -
                        SparsePoly::var(pair_index(hosts[a], e2.index)) *
                            SparsePoly::var(pair_index(hosts[b], e1.index));
                    push(std::move(p), RelFamily::QuadricShared, {e1.index, e2.index},
                         {hosts[a], hosts[b]});
                }
        }

    // Rotated quadrics, both patterns, all host pairs.
    auto push_rotated = [&](const QuadPattern& q, std::vector<int> tup) {
        for (int beta : common_hosts(q.a1.edge, q.a2.edge))
            for (int betas : common_hosts(q.a1s.edge, q.a2s.edge)) {
                SparsePoly p = core_poly(Rat(1), {{q.a1, beta}, {q.a2s, betas}}, Rat(-1),
                                         {{q.a2, beta}, {q.a1s, betas}});
                push(std::move(p), RelFamily::QuadricRotated, tup, {beta, betas});
            }
    };
    for (const auto& [i, j, k] : tuples().triples)
        push_rotated(quad_pattern_low(i, j, k), {i, j, k});
    for (const auto& [i, j, k, l] : tuples().quads)
        push_rotated(quad_pattern_high(i, j, k, l), {i, j, k, l});

    // Cubic and quartic: every multihomogeneous host assignment. All of
    // them specialize to the same chart identity under y -> x.
    for (const auto& [i, j, k, l] : tuples().quads) {
        CubicPattern c = cubic_pattern(i, j, k, l);
        for_matching_hosts<3>(c.lhs, c.rhs,
                              [&](const std::vector<CoreFactor>& m1,
                                  const std::vector<CoreFactor>& m2) {
                                  SparsePoly p = core_poly(Rat(1), m1, Rat(-1), m2);
                                  std::vector<int> faces;
                                  for (const auto& f : m1) faces.push_back(f.face);
                                  push(std::move(p), RelFamily::Cubic, {i, j, k, l}, faces);
                              });
    }
    for (const auto& [i, j, k, l] : tuples().quads) {
        QuarticPattern q = quartic_pattern(i, j, k, l);
        for_matching_hosts<4>(q.lhs, q.rhs,
                              [&](const std::vector<CoreFactor>& m1,
                                  const std::vector<CoreFactor>& m2) {
                                  SparsePoly p = core_poly(Rat(1), m1, Rat(-1), m2);
                                  std::vector<int> faces;
                                  for (const auto& f : m1) faces.push_back(f.face);
                                  push(std::move(p), RelFamily::Quartic, {i, j, k, l}, faces);
                              });
    }
    return out;
}

}  // namespace

std::string family_name(RelFamily f) {
    switch (f) {
        case RelFamily::Linear: return "linear";
        case RelFamily::QuadricShared: return "quadric-shared";
        case RelFamily::QuadricRotated: return "quadric-rotated";
        case RelFamily::Cubic: return "cubic";
        case RelFamily::Quartic: return "quartic";
    }
    return "?";
}

std::string Relation::describe() const {
    std::ostringstream os;
    os << family_name(family) << "[";
    for (std::size_t i = 0; i < tuple.size(); ++i) os << (i ? "," : "") << tuple[i];
    os << "]";
    if (!faces.empty()) {
        os << "@";
        for (std::size_t i = 0; i < faces.size(); ++i)
            os << (i ? "," : "") << face_at(faces[i]).name();
    }
    return os.str();
}

std::string Relation::render() const {
    return poly.to_string(level == RelLevel::Chart ? chart_variable_names()
                                                   : core_variable_names());
}

const std::vector<Relation>& chart_relations() {
    static const std::vector<Relation> rels = build_chart_relations();
    return rels;
}

const std::vector<Relation>& core_relations() {
    static const std::vector<Relation> rels = build_core_relations();
    return rels;
}

std::vector<Relation> core_relations_maximal_hosts() {
    std::vector<Relation> out;
    for (const auto& r : core_relations())
        if (r.maximal_hosts) out.push_back(r);
    return out;
}

std::vector<std::string> chart_variable_names() {
    std::vector<std::string> names;
    for (const auto& e : all_edges())
        names.push_back("x_" + subset_name(e.lo) + "_" + subset_name(e.hi));
    return names;
}

std::vector<std::string> core_variable_names() {
    std::vector<std::string> names;
    for (const auto& p : all_pairs()) {
        const auto& e = edge_at(p.edge);
        names.push_back("y[" + e.name() + "|" + face_at(p.face).name() + "]");
    }
    return names;
}

// ----------------------------------------------------------- verification

VanishingReport verify_vanishing_serial(const std::vector<Relation>& rels,
                                        const std::vector<QVec>& points) {
    VanishingReport rep;
    rep.relations = rels.size();
    rep.points = points.size();
    for (std::size_t p = 0; p < points.size(); ++p)
        for (std::size_t r = 0; r < rels.size(); ++r) {
            Rat v = rels[r].poly.evaluate(points[p]);
            if (!is_zero(v)) rep.failures.push_back({r, p, v});
        }
    return rep;
}

VanishingReport verify_vanishing(const std::vector<Relation>& rels,
                                 const std::vector<QVec>& points) {
    VanishingReport rep;
    rep.relations = rels.size();
    rep.points = points.size();
    std::vector<std::vector<VanishingFailure>> per_point(points.size());
    parallel_for(points.size(), [&](std::size_t p) {
        for (std::size_t r = 0; r < rels.size(); ++r) {
            Rat v = rels[r].poly.evaluate(points[p]);
            if (!is_zero(v)) per_point[p].push_back({r, p, v});
        }
    });
    for (auto& fs : per_point)
        rep.failures.insert(rep.failures.end(), fs.begin(), fs.end());
    return rep;
}

// ------------------------------------------- incidence component check

namespace {

// Reduce a polynomial modulo a set of linear forms by eliminating one
// variable per form (exact Gaussian elimination on the forms first).
SparsePoly reduce_mod_linear(SparsePoly p, std::vector<SparsePoly> forms) {
    std::vector<std::pair<int, SparsePoly>> solved;  // pivot var -> substitution
    for (auto& form : forms) {
        for (const auto& [v, sub] : solved) form = form.substitute(v, sub);
        if (form.zero()) continue;
        auto vars = form.variables();
        int pivot = vars.front();
        // solve form = 0 for pivot
        SparsePoly rest;
        Rat coeff(0);
        for (const auto& [m, c] : form.terms()) {
            if (m.factors.size() == 1 && m.factors[0].first == pivot && m.factors[0].second == 1)
                coeff = c;
            else
                rest.add_term(m, c);
        }
        if (is_zero(coeff)) continue;
        SparsePoly sub = rest.scaled(Rat(-1) / coeff);
        for (auto& [v, s] : solved) s = s.substitute(pivot, sub);
        solved.emplace_back(pivot, sub);
    }
    for (const auto& [v, sub] : solved) p = p.substitute(v, sub);
    return p;
}

}  // namespace

std::vector<IncidencePatternReport> incidence_component_check() {
    std::vector<IncidencePatternReport> out;
    std::vector<std::pair<std::string, std::vector<int>>> patterns(2);
    patterns[0].first = "E2";
    patterns[1].first = "E1+E3";
    for (const auto& e : all_edges())
        (e.rank == 2 ? patterns[0] : patterns[1]).second.push_back(e.index);

    for (const auto& [label, zeros] : patterns) {
        IncidencePatternReport rep;
        rep.pattern = label;
        std::vector<SparsePoly> surviving_linear;
        for (const auto& r : chart_relations())
            if (r.family == RelFamily::Linear) {
                SparsePoly q = r.poly.zero_out(zeros);
                if (!q.zero()) surviving_linear.push_back(q);
            }
        bool all_dead = true;
        for (const auto& r : chart_relations()) {
            SparsePoly q = r.poly.zero_out(zeros);
            switch (r.family) {
                case RelFamily::Linear:
                    if (q.zero()) ++rep.linear_killed;
                    else if (reduce_mod_linear(q, surviving_linear).zero()) ++rep.linear_reduced;
                    else all_dead = false;
                    break;
                case RelFamily::QuadricRotated:
                case RelFamily::QuadricShared:
                    if (q.zero()) ++rep.quadric_killed;
                    else all_dead = false;
                    break;
                case RelFamily::Cubic:
                    if (!q.zero() && !reduce_mod_linear(q, surviving_linear).zero())
                        ++rep.cubic_nonvanishing;
                    break;
                default: break;
            }
        }
        rep.ok = all_dead;
        out.push_back(std::move(rep));
    }
    return out;
}

// ------------------------------------------------- symbolic identities

namespace {

// Minor of the symbolic 4x4 matrix: rows = elements of J, columns =
// elements of I, entry variable id = 4*(row-1) + (col-1).
SparsePoly symbolic_minor(Mask I, Mask J) {
    std::vector<int> rows, cols;
    for (int i = 1; i <= 4; ++i) {
        if (J & (1 << (i - 1))) rows.push_back(i);
        if (I & (1 << (i - 1))) cols.push_back(i);
    }
    int k = static_cast<int>(rows.size());
    std::vector<int> perm(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) perm[static_cast<std::size_t>(i)] = i;
    SparsePoly det;
    do {
        int sign = 1;
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b)
                if (perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)]) sign = -sign;
        Monomial m;
        for (int a = 0; a < k; ++a) {
            int var = 4 * (rows[static_cast<std::size_t>(a)] - 1) +
                      (cols[static_cast<std::size_t>(perm[static_cast<std::size_t>(a)])] - 1);
            m = m.times(Monomial::var(var));
        }
        det.add_term(m, Rat(sign));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

struct SymbolicEdge {
    SparsePoly num;
    std::multiset<std::pair<Mask, Mask>> den;  // atomic minor factors (I, J)
};

Mask slot_for_rank(int rank) { return rank == 1 ? 0b0010 : rank == 2 ? 0b0101 : 0b1011; }
Mask base_for_rank(int rank) { return rank == 1 ? 0b0001 : rank == 2 ? 0b0011 : 0b0111; }

const SparsePoly& cached_minor(Mask I, Mask J) {
    static std::map<std::pair<Mask, Mask>, SparsePoly> cache;
    auto key = std::make_pair(I, J);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, symbolic_minor(I, J)).first;
    return it->second;
}

// x_(A,B) = [P(B,K)P(A,K0) - P(A,K)P(B,K0)] / [P(A,K0) P(B,K0)]
SymbolicEdge symbolic_edge(const OrientedEdge& oe) {
    const EdgeLabel& e = edge_at(oe.edge);
    Mask A = oe.from, B = oe.to;
    Mask K = slot_for_rank(e.rank), K0 = base_for_rank(e.rank);
    SymbolicEdge se;
    se.num = cached_minor(B, K) * cached_minor(A, K0) - cached_minor(A, K) * cached_minor(B, K0);
    se.den.insert({A, K0});
    se.den.insert({B, K0});
    return se;
}

}  // namespace

SymbolicCheckReport symbolic_identity_check(const Relation& rel) {
    if (rel.level != RelLevel::Chart)
        throw std::invalid_argument("symbolic_identity_check: chart-level relations only");

    // Rebuild each monomial as oriented factors from the variable ids;
    // canonical variables are oriented lo->to by definition.
    std::vector<std::pair<Rat, std::vector<OrientedEdge>>> terms;
    for (const auto& [m, c] : rel.poly.terms()) {
        std::vector<OrientedEdge> fs;
        for (const auto& [v, exp] : m.factors)
            for (int t = 0; t < exp; ++t) {
                const EdgeLabel& e = edge_at(v);
                fs.push_back(oriented_edge(e.lo, e.hi));
            }
        terms.emplace_back(c, std::move(fs));
    }

    // Common denominator = multiset max over the terms.
    std::vector<std::multiset<std::pair<Mask, Mask>>> dens;
    std::multiset<std::pair<Mask, Mask>> common;
    std::vector<SparsePoly> nums;
    for (auto& [c, fs] : terms) {
        SparsePoly n{Rat(1)};
        std::multiset<std::pair<Mask, Mask>> d;
        for (const auto& oe : fs) {
            SymbolicEdge se = symbolic_edge(oe);
            n = n * se.num;
            for (auto& f : se.den) d.insert(f);
        }
        nums.push_back(std::move(n));
        dens.push_back(d);
    }
    for (const auto& d : dens)
        for (auto it = d.begin(); it != d.end(); it = d.upper_bound(*it)) {
            std::size_t cnt = d.count(*it);
            while (common.count(*it) < cnt) common.insert(*it);
        }

    SparsePoly total;
    for (std::size_t t = 0; t < terms.size(); ++t) {
        SparsePoly scaled = nums[t].scaled(terms[t].first);
        auto missing = common;
        for (auto& f : dens[t]) missing.erase(missing.find(f));
        for (auto& f : missing) scaled = scaled * cached_minor(f.first, f.second);
        total = total + scaled;
    }

    SymbolicCheckReport rep;
    rep.identical_zero = total.zero();
    rep.degree_bound = 0;
    for (std::size_t t = 0; t < terms.size(); ++t) {
        int deg = nums[t].total_degree();
        for (auto& f : common) deg += subset_rank(f.first);
        rep.degree_bound = std::max(rep.degree_bound, deg);
    }
    rep.terms = total.term_count();
    return rep;
}

SymbolicCheckReport symbolic_identity_check_probabilistic(const Relation& rel, int trials,
                                                          std::uint64_t seed, long coeff_bound) {
    if (rel.level != RelLevel::Chart)
        throw std::invalid_argument("symbolic_identity_check: chart-level relations only");
    SplitMix64 rng(seed);
    SymbolicCheckReport rep;
    rep.degree_bound = 24;  // crude bound on the cleared numerator degree
    rep.identical_zero = true;
    int done = 0;
    while (done < trials) {
        QMatrix g = sample_matrix(rng, coeff_bound);
        if (is_zero(g.determinant())) continue;
        TetraConfig c = config_from_matrix(g);
        if (!is_general_position(c)) continue;
        NormalizedChart chart = normalize(c);
        QVec x(chart.x.begin(), chart.x.end());
        if (!is_zero(rel.poly.evaluate(x))) rep.identical_zero = false;
        ++done;
    }
    rep.trials = trials;
    return rep;
}

}  // namespace tetra
