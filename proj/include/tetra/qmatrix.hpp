#pragma once

#include <vector>

#include "tetra/rational.hpp"

namespace tetra {

// Dense matrix over Q with exact rank and kernel. Rank runs fraction-free
// (Bareiss) on a denominator-cleared integer copy to keep intermediate
// entries from exploding; the kernel basis is back-substituted over Q.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, Rat(0)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Rat& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    static QMatrix identity(int n);
    QMatrix transposed() const;

    // det by fraction-free elimination; square only.
    Rat determinant() const;

    int rank() const;

    // Rank computed with a deliberately different pivot walk (column-major
    // rational elimination). Kept as a cross-check of the Bareiss path.
    int rank_alt() const;

    // Basis of { v : A v = 0 }.
    std::vector<QVec> kernel_basis() const;

    QVec multiply(const QVec& v) const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> data_;
};

struct RankKernel {
    int rank = 0;
    std::vector<QVec> kernel;
};
RankKernel rank_and_kernel(const QMatrix& m);

}  // namespace tetra
