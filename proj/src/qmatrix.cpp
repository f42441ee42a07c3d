#include "tetra/qmatrix.hpp"

#include <stdexcept>

namespace tetra {

namespace {

// Integer working copy: each row scaled by the lcm of its denominators.
// Row scaling changes neither rank nor kernel.
std::vector<std::vector<mpz_class>> cleared_rows(const QMatrix& m) {
    std::vector<std::vector<mpz_class>> rows(static_cast<std::size_t>(m.rows()));
    for (int r = 0; r < m.rows(); ++r) {
        mpz_class l = 1;
        for (int c = 0; c < m.cols(); ++c)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(r, c).get_den().get_mpz_t());
        rows[static_cast<std::size_t>(r)].resize(static_cast<std::size_t>(m.cols()));
        for (int c = 0; c < m.cols(); ++c) {
            const Rat& q = m.at(r, c);
            rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                q.get_num() * (l / q.get_den());
        }
    }
    return rows;
}

struct Echelon {
    std::vector<std::vector<mpz_class>> rows;  // fraction-free row echelon
    std::vector<int> pivot_col;                // one entry per pivot row
};

// One-pass Bareiss elimination. After step k the entries are exact k-th
// order minors of the original matrix, so everything stays integral.
Echelon bareiss(std::vector<std::vector<mpz_class>> a, int cols) {
    Echelon e;
    e.rows = std::move(a);
    int nrows = static_cast<int>(e.rows.size());
    mpz_class prev = 1;
    int row = 0;
    for (int col = 0; col < cols && row < nrows; ++col) {
        int piv = -1;
        for (int r = row; r < nrows; ++r)
            if (e.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(e.rows[static_cast<std::size_t>(row)], e.rows[static_cast<std::size_t>(piv)]);
        const mpz_class pivot = e.rows[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
        for (int r = row + 1; r < nrows; ++r) {
            auto& tr = e.rows[static_cast<std::size_t>(r)];
            const auto& pr = e.rows[static_cast<std::size_t>(row)];
            const mpz_class head = tr[static_cast<std::size_t>(col)];
            for (int c = col; c < cols; ++c) {
                mpz_class v = pivot * tr[static_cast<std::size_t>(c)] -
                              head * pr[static_cast<std::size_t>(c)];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                tr[static_cast<std::size_t>(c)] = v;
            }
        }
        e.pivot_col.push_back(col);
        prev = pivot;
        ++row;
    }
    e.rows.resize(static_cast<std::size_t>(row));
    return e;
}

}  // namespace

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::transposed() const {
    QMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

Rat QMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant: not square");
    // Track the row scalings so the rational determinant is recovered.
    Rat scale = 1;
    std::vector<std::vector<mpz_class>> rows(static_cast<std::size_t>(rows_));
    for (int r = 0; r < rows_; ++r) {
        mpz_class l = 1;
        for (int c = 0; c < cols_; ++c)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), at(r, c).get_den().get_mpz_t());
        scale /= Rat(l);
        rows[static_cast<std::size_t>(r)].resize(static_cast<std::size_t>(cols_));
        for (int c = 0; c < cols_; ++c)
            rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                at(r, c).get_num() * (l / at(r, c).get_den());
    }

    mpz_class prev = 1;
    int sign = 1;
    for (int col = 0; col < cols_; ++col) {
        int piv = -1;
        for (int r = col; r < rows_; ++r)
            if (rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return Rat(0);
        if (piv != col) {
            std::swap(rows[static_cast<std::size_t>(piv)], rows[static_cast<std::size_t>(col)]);
            sign = -sign;
        }
        const mpz_class pivot = rows[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        for (int r = col + 1; r < rows_; ++r) {
            auto& tr = rows[static_cast<std::size_t>(r)];
            const auto& pr = rows[static_cast<std::size_t>(col)];
            const mpz_class head = tr[static_cast<std::size_t>(col)];
            for (int c = col; c < cols_; ++c) {
                mpz_class v = pivot * tr[static_cast<std::size_t>(c)] -
                              head * pr[static_cast<std::size_t>(c)];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                tr[static_cast<std::size_t>(c)] = v;
            }
        }
        prev = pivot;
    }
    // Bareiss leaves det in the last pivot.
    Rat det(rows[static_cast<std::size_t>(rows_ - 1)][static_cast<std::size_t>(cols_ - 1)]);
    det *= scale;
    if (sign < 0) det = -det;
    return det;
}

int QMatrix::rank() const {
    if (rows_ == 0 || cols_ == 0) return 0;
    return static_cast<int>(bareiss(cleared_rows(*this), cols_).pivot_col.size());
}

int QMatrix::rank_alt() const {
    // Plain rational Gauss, walking columns right-to-left and picking the
    // last available pivot row; agreement with rank() is a test invariant.
    std::vector<QVec> rows(static_cast<std::size_t>(rows_));
    for (int r = 0; r < rows_; ++r) {
        rows[static_cast<std::size_t>(r)].resize(static_cast<std::size_t>(cols_));
        for (int c = 0; c < cols_; ++c) rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = at(r, c);
    }
    std::vector<bool> used(static_cast<std::size_t>(rows_), false);
    int rank = 0;
    for (int col = cols_ - 1; col >= 0; --col) {
        int piv = -1;
        for (int r = rows_ - 1; r >= 0; --r)
            if (!used[static_cast<std::size_t>(r)] &&
                !is_zero(rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)])) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        used[static_cast<std::size_t>(piv)] = true;
        ++rank;
        const Rat inv = Rat(1) / rows[static_cast<std::size_t>(piv)][static_cast<std::size_t>(col)];
        for (int r = 0; r < rows_; ++r) {
            if (used[static_cast<std::size_t>(r)] || r == piv) continue;
            Rat factor = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] * inv;
            if (is_zero(factor)) continue;
            for (int c = 0; c < cols_; ++c)
                rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
                    factor * rows[static_cast<std::size_t>(piv)][static_cast<std::size_t>(c)];
        }
    }
    return rank;
}

std::vector<QVec> QMatrix::kernel_basis() const {
    if (cols_ == 0) return {};
    Echelon e = bareiss(cleared_rows(*this), cols_);
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols_), false);
    for (int c : e.pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;

    std::vector<QVec> basis;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        QVec v(static_cast<std::size_t>(cols_), Rat(0));
        v[static_cast<std::size_t>(free)] = 1;
        // Echelon rows are triangular w.r.t. pivot_col; solve bottom-up.
        for (int i = static_cast<int>(e.pivot_col.size()) - 1; i >= 0; --i) {
            int pc = e.pivot_col[static_cast<std::size_t>(i)];
            const auto& row = e.rows[static_cast<std::size_t>(i)];
            Rat acc(0);
            for (int c = pc + 1; c < cols_; ++c)
                if (!is_zero(v[static_cast<std::size_t>(c)]))
                    acc += Rat(row[static_cast<std::size_t>(c)]) * v[static_cast<std::size_t>(c)];
            v[static_cast<std::size_t>(pc)] = -acc / Rat(row[static_cast<std::size_t>(pc)]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

QVec QMatrix::multiply(const QVec& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("multiply: size mismatch");
    QVec out(static_cast<std::size_t>(rows_), Rat(0));
    for (int r = 0; r < rows_; ++r) {
        Rat acc(0);
        for (int c = 0; c < cols_; ++c)
            if (!is_zero(at(r, c))) acc += at(r, c) * v[static_cast<std::size_t>(c)];
        out[static_cast<std::size_t>(r)] = acc;
    }
    return out;
}

RankKernel rank_and_kernel(const QMatrix& m) {
    RankKernel rk;
    rk.kernel = m.kernel_basis();
    rk.rank = m.cols() - static_cast<int>(rk.kernel.size());
    return rk;
}

}  // namespace tetra
