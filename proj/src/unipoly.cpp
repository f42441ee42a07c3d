#include "tetra/unipoly.hpp"

#include <stdexcept>

namespace tetra {

UniPoly UniPoly::t_power(int k) {
    QVec c(static_cast<std::size_t>(k) + 1, Rat(0));
    c.back() = 1;
    return UniPoly(std::move(c));
}

std::optional<int> UniPoly::ord() const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (!is_zero(coeffs_[k])) return static_cast<int>(k);
    return std::nullopt;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    QVec c(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator-() const {
    QVec c = coeffs_;
    for (auto& q : c) q = -q;
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (zero() || o.zero()) return UniPoly();
    QVec c(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (is_zero(coeffs_[i])) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            c[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return UniPoly(std::move(c));
}

Rat UniPoly::eval(const Rat& t) const {
    Rat acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * t + coeffs_[i];
    return acc;
}

UniRat::UniRat(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.zero()) throw std::invalid_argument("UniRat: zero denominator");
    // Cancel common powers of t so ord is readable directly.
    auto on = num_.ord(), od = den_.ord();
    if (od && *od > 0 && on) {
        int s = std::min(*on, *od);
        if (s > 0) {
            QVec n(num_.coeffs().begin() + s, num_.coeffs().end());
            QVec d(den_.coeffs().begin() + s, den_.coeffs().end());
            num_ = UniPoly(std::move(n));
            den_ = UniPoly(std::move(d));
        }
    }
}

std::optional<int> UniRat::ord() const {
    auto on = num_.ord();
    if (!on) return std::nullopt;
    return *on - *den_.ord();
}

Rat UniRat::leading_coeff() const {
    auto on = num_.ord();
    if (!on) throw std::logic_error("leading_coeff of zero");
    int od = *den_.ord();
    return num_.coeff(*on) / den_.coeff(od);
}

Rat UniRat::coeff_at(int k) const {
    auto o = ord();
    if (!o || k < *o) return Rat(0);
    if (k == *o) return leading_coeff();
    throw std::invalid_argument("coeff_at above the leading order");
}

UniRat UniRat::operator+(const UniRat& o) const {
    return UniRat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
UniRat UniRat::operator-(const UniRat& o) const {
    return UniRat(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}
UniRat UniRat::operator*(const UniRat& o) const { return UniRat(num_ * o.num_, den_ * o.den_); }
UniRat UniRat::operator/(const UniRat& o) const {
    if (o.zero()) throw std::invalid_argument("UniRat division by zero");
    return UniRat(num_ * o.den_, den_ * o.num_);
}
UniRat UniRat::operator-() const { return UniRat(-num_, den_); }

Rat UniRat::eval(const Rat& t) const {
    Rat d = den_.eval(t);
    if (is_zero(d)) throw std::invalid_argument("UniRat: pole at evaluation point");
    return num_.eval(t) / d;
}

std::optional<QVec> leading_at_order(const std::vector<UniRat>& v) {
    std::optional<int> m;
    for (const auto& f : v) {
        auto o = f.ord();
        if (o && (!m || *o < *m)) m = *o;
    }
    if (!m) return std::nullopt;
    QVec out;
    out.reserve(v.size());
    for (const auto& f : v) out.push_back(f.coeff_at(*m));
    return out;
}

}  // namespace tetra
