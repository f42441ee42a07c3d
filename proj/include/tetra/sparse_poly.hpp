#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tetra/rational.hpp"

namespace tetra {

// Sparse multivariate polynomials over Q. Monomials keep only the
// variables with nonzero exponent (the generators here have at most a
// handful of factors, over up to 72 variables), as sorted (var, exp)
// pairs. Variable ids are plain ints whose meaning is fixed by the
// caller: edge index for chart polynomials, incident-pair index for
// core polynomials, matrix-entry index for the symbolic checks.

struct Monomial {
    // sorted by var, exponents > 0
    std::vector<std::pair<int, int>> factors;

    int degree() const {
        int d = 0;
        for (auto& [v, e] : factors) d += e;
        return d;
    }
    bool operator==(const Monomial& o) const { return factors == o.factors; }
    bool operator<(const Monomial& o) const { return factors < o.factors; }

    static Monomial one() { return {}; }
    static Monomial var(int v, int exp = 1) { return Monomial{{{v, exp}}}; }
    Monomial times(const Monomial& o) const;
};

class SparsePoly {
public:
    SparsePoly() = default;
    explicit SparsePoly(Rat c) {
        if (!is_zero(c)) terms_[Monomial::one()] = std::move(c);
    }
    static SparsePoly var(int v) {
        SparsePoly p;
        p.terms_[Monomial::var(v)] = 1;
        return p;
    }

    bool zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }
    int total_degree() const;
    const std::map<Monomial, Rat>& terms() const { return terms_; }

    void add_term(const Monomial& m, const Rat& c);

    SparsePoly operator+(const SparsePoly& o) const;
    SparsePoly operator-(const SparsePoly& o) const;
    SparsePoly operator*(const SparsePoly& o) const;
    SparsePoly operator-() const;
    bool operator==(const SparsePoly& o) const { return terms_ == o.terms_; }

    SparsePoly scaled(const Rat& c) const;

    // Exact evaluation; `point[v]` must be meaningful for every variable
    // that occurs (checked).
    Rat evaluate(const QVec& point) const;

    // Formal partial derivative.
    SparsePoly derivative(int v) const;

    // Substitute a polynomial for one variable.
    SparsePoly substitute(int v, const SparsePoly& value) const;

    // Set a list of variables to zero.
    SparsePoly zero_out(const std::vector<int>& vars) const;

    std::vector<int> variables() const;

    // Sign normalization: flips the whole polynomial if its first term is
    // negative, so p and -p share a canonical form (used for dedup).
    SparsePoly sign_normalized() const;

    // Render with a caller-supplied variable namer.
    std::string to_string(const std::vector<std::string>& names) const;

private:
    std::map<Monomial, Rat> terms_;
};

}  // namespace tetra
