#include "tetra/sparse_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace tetra {

Monomial Monomial::times(const Monomial& o) const {
    Monomial r;
    auto a = factors.begin(), b = o.factors.begin();
    while (a != factors.end() || b != o.factors.end()) {
        if (b == o.factors.end() || (a != factors.end() && a->first < b->first))
            r.factors.push_back(*a++);
        else if (a == factors.end() || b->first < a->first)
            r.factors.push_back(*b++);
        else {
            r.factors.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    return r;
}

int SparsePoly::total_degree() const {
    int d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

void SparsePoly::add_term(const Monomial& m, const Rat& c) {
    if (is_zero(c)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (is_zero(it->second)) terms_.erase(it);
    }
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
    SparsePoly r = *this;
    for (auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
    SparsePoly r = *this;
    for (auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly r;
    for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
    SparsePoly r;
    for (auto& [m1, c1] : terms_)
        for (auto& [m2, c2] : o.terms_) r.add_term(m1.times(m2), c1 * c2);
    return r;
}

SparsePoly SparsePoly::scaled(const Rat& c) const {
    SparsePoly r;
    if (is_zero(c)) return r;
    for (auto& [m, q] : terms_) r.terms_.emplace(m, q * c);
    return r;
}

Rat SparsePoly::evaluate(const QVec& point) const {
    Rat acc(0);
    for (auto& [m, c] : terms_) {
        Rat t = c;
        for (auto& [v, e] : m.factors) {
            if (v < 0 || v >= static_cast<int>(point.size()))
                throw std::out_of_range("evaluate: assignment misses variable " + std::to_string(v));
            for (int i = 0; i < e; ++i) t *= point[static_cast<std::size_t>(v)];
        }
        acc += t;
    }
    return acc;
}

SparsePoly SparsePoly::derivative(int v) const {
    SparsePoly r;
    for (auto& [m, c] : terms_) {
        for (std::size_t i = 0; i < m.factors.size(); ++i) {
            if (m.factors[i].first != v) continue;
            Monomial dm = m;
            if (dm.factors[i].second == 1)
                dm.factors.erase(dm.factors.begin() + static_cast<std::ptrdiff_t>(i));
            else
                dm.factors[i].second -= 1;
            r.add_term(dm, c * m.factors[i].second);
        }
    }
    return r;
}

SparsePoly SparsePoly::substitute(int v, const SparsePoly& value) const {
    SparsePoly r;
    for (auto& [m, c] : terms_) {
        SparsePoly term(c);
        Monomial rest;
        for (auto& [mv, e] : m.factors) {
            if (mv == v) {
                for (int i = 0; i < e; ++i) term = term * value;
            } else {
                rest.factors.emplace_back(mv, e);
            }
        }
        SparsePoly restp;
        restp.terms_.emplace(rest, Rat(1));
        r = r + term * restp;
    }
    return r;
}

SparsePoly SparsePoly::zero_out(const std::vector<int>& vars) const {
    SparsePoly r;
    for (auto& [m, c] : terms_) {
        bool dies = false;
        for (auto& [v, e] : m.factors)
            for (int z : vars)
                if (v == z) {
                    dies = true;
                    break;
                }
        if (!dies) r.add_term(m, c);
    }
    return r;
}

std::vector<int> SparsePoly::variables() const {
    std::vector<int> vars;
    for (auto& [m, c] : terms_)
        for (auto& [v, e] : m.factors)
            if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    std::sort(vars.begin(), vars.end());
    return vars;
}

SparsePoly SparsePoly::sign_normalized() const {
    if (terms_.empty()) return *this;
    if (sgn(terms_.begin()->second) < 0) return -*this;
    return *this;
}

std::string SparsePoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
        Rat a = c;
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
        bool printed = false;
        if (a != 1 || m.factors.empty()) {
            os << rat_to_string(a);
            printed = true;
        }
        for (auto& [v, e] : m.factors) {
            if (printed) os << "*";
            os << names[static_cast<std::size_t>(v)];
            if (e > 1) os << "^" << e;
            printed = true;
        }
    }
    return os.str();
}

}  // namespace tetra
