#pragma once

#include <optional>
#include <vector>

#include "tetra/rational.hpp"

namespace tetra {

// Univariate polynomials in a deformation parameter t, and their ratios.
// These carry the one-parameter curves: every coordinate of a configuration
// curve is a UniRat, limits are read off leading coefficients.

class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(Rat c) { if (!is_zero(c)) coeffs_.push_back(std::move(c)); }
    explicit UniPoly(QVec coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static UniPoly t_power(int k);

    bool zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for 0
    const QVec& coeffs() const { return coeffs_; }
    Rat coeff(int k) const {
        return (k >= 0 && k <= degree()) ? coeffs_[static_cast<std::size_t>(k)] : Rat(0);
    }

    // Order of vanishing at t = 0; nullopt for the zero polynomial.
    std::optional<int> ord() const;

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator-() const;
    bool operator==(const UniPoly& o) const { return coeffs_ == o.coeffs_; }

    Rat eval(const Rat& t) const;

private:
    void trim() {
        while (!coeffs_.empty() && is_zero(coeffs_.back())) coeffs_.pop_back();
    }
    QVec coeffs_;  // coeffs_[k] multiplies t^k
};

class UniRat {
public:
    UniRat() : num_(), den_(Rat(1)) {}
    explicit UniRat(Rat c) : num_(std::move(c)), den_(Rat(1)) {}
    UniRat(UniPoly num, UniPoly den);

    static UniRat t_power(int k) { return UniRat(UniPoly::t_power(k), UniPoly(Rat(1))); }

    bool zero() const { return num_.zero(); }
    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }

    // ord_t(num) - ord_t(den); nullopt when the value is identically zero.
    std::optional<int> ord() const;

    // Coefficient of t^ord in the Laurent expansion at t = 0.
    Rat leading_coeff() const;

    // Coefficient of t^k of the expansion; requires k <= ord (below the
    // order everything is zero, at the order it is the leading
    // coefficient). Enough for reading limits off renormalized vectors.
    Rat coeff_at(int k) const;

    UniRat operator+(const UniRat& o) const;
    UniRat operator-(const UniRat& o) const;
    UniRat operator*(const UniRat& o) const;
    UniRat operator/(const UniRat& o) const;
    UniRat operator-() const;

    Rat eval(const Rat& t) const;  // requires den(t) != 0

private:
    UniPoly num_, den_;
};

// Rescale a vector of values by t^{-min ord} and evaluate at t = 0:
// the leading direction of a curve in projective coordinates. Entries of
// order above the minimum land on 0. Nullopt when all entries vanish.
std::optional<QVec> leading_at_order(const std::vector<UniRat>& v);

}  // namespace tetra
