#pragma once

#include <vector>

#include "wcm/error.hpp"
#include "wcm/rational.hpp"

namespace wcm {

// Dense matrix of exact rationals. No floating point anywhere.
class QMatrix {
  public:
    QMatrix() = default;
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static QMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Rat& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    QMatrix operator*(const QMatrix& o) const;
    QMatrix operator-(const QMatrix& o) const;
    bool operator==(const QMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool is_zero() const;

    QMatrix transposed() const;
    QMatrix cols_subset(const std::vector<int>& idx) const;  // 0-based column picks
    QMatrix rows_subset(const std::vector<int>& idx) const;

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

// Exact determinant. Fraction-free (Bareiss) elimination on the cleared-
// denominator integer matrix keeps intermediate entries small.
Rat det(const QMatrix& m);

// Rows form a basis of { x : M x^T = 0 }; row count = cols - rank.
QMatrix kernel_basis(const QMatrix& m);

int rank(const QMatrix& m);

// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> rref(QMatrix& m);

QMatrix inverse(const QMatrix& m); // errc::non_square / rank_degenerate

namespace ref {
// Cofactor-expansion determinant; the independent test oracle for det().
Rat det_cofactor(const QMatrix& m);
} // namespace ref

} // namespace wcm
