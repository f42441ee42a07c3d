#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tetra/qmatrix.hpp"
#include "tetra/sparse_poly.hpp"
#include "tetra/unipoly.hpp"

using namespace tetra;

namespace {

QMatrix random_matrix(SplitMix64& rng, int rows, int cols, long bound) {
    QMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            m.at(r, c) = rat(rng.range(-bound, bound), 1 + rng.range(0, 3));
    return m;
}

}  // namespace

TEST_CASE("rank and kernel basics") {
    CHECK(QMatrix::identity(3).rank() == 3);
    CHECK(rank_and_kernel(QMatrix::identity(3)).kernel.empty());

    QMatrix z(2, 5);
    auto rk = rank_and_kernel(z);
    CHECK(rk.rank == 0);
    CHECK(rk.kernel.size() == 5);
}

TEST_CASE("rank: two elimination strategies agree; kernel is exact") {
    SplitMix64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        int rows = 1 + static_cast<int>(rng.below(6));
        int cols = 1 + static_cast<int>(rng.below(6));
        QMatrix m = random_matrix(rng, rows, cols, 6);
        int r = m.rank();
        CHECK(r == m.rank_alt());
        CHECK(r == m.transposed().rank());
        auto rk = rank_and_kernel(m);
        CHECK(rk.rank + static_cast<int>(rk.kernel.size()) == cols);
        for (const auto& v : rk.kernel) CHECK(all_zero(m.multiply(v)));
    }
}

TEST_CASE("determinant") {
    QMatrix m(2, 2);
    m.at(0, 0) = rat(1, 2);
    m.at(0, 1) = rat(3);
    m.at(1, 0) = rat(-2);
    m.at(1, 1) = rat(4, 3);
    CHECK(m.determinant() == rat(1, 2) * rat(4, 3) - rat(3) * rat(-2));

    QMatrix s(2, 2);
    s.at(0, 0) = rat(2);
    s.at(0, 1) = rat(4);
    s.at(1, 0) = rat(1);
    s.at(1, 1) = rat(2);
    CHECK(is_zero(s.determinant()));
}

TEST_CASE("arithmetic is order independent") {
    SplitMix64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        Rat a = rat(rng.range(-50, 50), 1 + rng.range(0, 9));
        Rat b = rat(rng.range(-50, 50), 1 + rng.range(0, 9));
        Rat c = rat(rng.range(-50, 50), 1 + rng.range(0, 9));
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("formal derivative: power rule and finite-difference oracle") {
    SparsePoly x2 = SparsePoly::var(0) * SparsePoly::var(0);
    SparsePoly d = x2.derivative(0);
    CHECK(d.evaluate({rat(3)}) == rat(6));

    // Oracle: for polynomial p, q(h) = (p(a + h e_v) - p(a)) / h is a
    // polynomial in h whose value at h = 0 is the partial derivative.
    // Interpolate q exactly from deg(p) sample points.
    SplitMix64 rng(23);
    for (int trial = 0; trial < 5; ++trial) {
        SparsePoly p;
        for (int t = 0; t < 6; ++t) {
            Monomial m;
            for (int f = 0; f < 3; ++f) {
                int var = static_cast<int>(rng.below(3));
                m = m.times(Monomial::var(var));
            }
            p.add_term(m, rat(rng.range(-5, 5)));
        }
        QVec a{rat(rng.range(-4, 4)), rat(rng.range(-4, 4)), rat(rng.range(-4, 4))};
        for (int v = 0; v < 3; ++v) {
            Rat exact = p.derivative(v).evaluate(a);
            std::vector<Rat> hs, qs;
            for (int k = 1; k <= 3; ++k) {
                Rat h(1, 1 << k);
                QVec shifted = a;
                shifted[static_cast<std::size_t>(v)] += h;
                hs.push_back(h);
                qs.push_back((p.evaluate(shifted) - p.evaluate(a)) / h);
            }
            // Lagrange value of q at h = 0 for a quadratic q
            Rat q0(0);
            for (int i = 0; i < 3; ++i) {
                Rat li(1);
                for (int j = 0; j < 3; ++j)
                    if (j != i) li *= (Rat(0) - hs[static_cast<std::size_t>(j)]) /
                                      (hs[static_cast<std::size_t>(i)] - hs[static_cast<std::size_t>(j)]);
                q0 += li * qs[static_cast<std::size_t>(i)];
            }
            CHECK(q0 == exact);
        }
    }
}

TEST_CASE("derivative of a blowup-style binomial") {
    // vars: 0 = y_a, 1 = y_b, 2 = x_a, 3 = x_b; p = y_a x_b - y_b x_a
    SparsePoly p = SparsePoly::var(0) * SparsePoly::var(3) -
                   SparsePoly::var(1) * SparsePoly::var(2);
    CHECK(p.derivative(0) == SparsePoly::var(3));
    CHECK(p.derivative(2) == -SparsePoly::var(1));
}

TEST_CASE("sparse polynomial plumbing") {
    SparsePoly zero;
    CHECK(zero.evaluate({rat(7)}) == 0);
    SparsePoly p = SparsePoly::var(0) - SparsePoly::var(1) + SparsePoly::var(2);
    CHECK(p.evaluate({rat(2), rat(5), rat(3)}) == 0);
    CHECK(p.substitute(1, SparsePoly::var(0) + SparsePoly::var(2)).zero());
    CHECK(p.zero_out({1}).term_count() == 2);
    CHECK(p.sign_normalized() == (-p).sign_normalized());
}

TEST_CASE("univariate rational functions and leading coefficients") {
    UniPoly t = UniPoly::t_power(1);
    UniRat f(UniPoly(QVec{rat(0), rat(2), rat(3)}), UniPoly(Rat(1)));  // 2t + 3t^2
    CHECK(*f.ord() == 1);
    CHECK(f.leading_coeff() == 2);
    CHECK(f.eval(rat(2)) == rat(16));

    UniRat g = f / UniRat::t_power(1);
    CHECK(*g.ord() == 0);
    CHECK(g.leading_coeff() == 2);

    std::vector<UniRat> v{f, UniRat::t_power(2) * UniRat(rat(5)), UniRat(rat(0))};
    auto lead = leading_at_order(v);
    REQUIRE(lead.has_value());
    CHECK((*lead)[0] == 2);
    CHECK((*lead)[1] == 0);
    CHECK((*lead)[2] == 0);

    // invariance of the renormalized leading vector under a common shift
    SplitMix64 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<UniRat> w;
        for (int i = 0; i < 4; ++i) {
            QVec cs;
            for (int k = 0; k < 4; ++k) cs.push_back(rat(rng.range(-3, 3)));
            w.push_back(UniRat(UniPoly(cs), UniPoly(Rat(1))));
        }
        auto base = leading_at_order(w);
        int shift = static_cast<int>(rng.below(4));
        std::vector<UniRat> shifted;
        for (const auto& q : w) shifted.push_back(q * UniRat::t_power(shift));
        CHECK(leading_at_order(shifted) == base);
    }
}
