#pragma once

#include <vector>

#include "wcm/matrix.hpp"

namespace wcm {

// Span-membership helper: row-echelon basis of a list of equally-shaped
// matrices viewed as flat vectors.
class MatSpan {
  public:
    explicit MatSpan(int rows, int cols) : rows_(rows), cols_(cols) {}

    // returns true if the matrix enlarged the span
    bool insert(const QMatrix& m);
    bool contains(const QMatrix& m) const;
    int dim() const { return static_cast<int>(basis_.size()); }

  private:
    int rows_, cols_;
    std::vector<std::vector<Rat>> basis_; // echelonized flat vectors
    std::vector<int> pivots_;
};

// Basis of the Jacobson radical of the matrix algebra spanned by `basis`
// (which must be closed under products and contain the identity's span).
// Characteristic 0: the radical is the kernel of the trace form
// (x,y) -> tr(xy) on the algebra; the kernel pass is iterated until stable.
std::vector<QMatrix> algebra_radical(const std::vector<QMatrix>& basis);

// dim(A / rad A) for the algebra spanned by `basis`; equals the rank of the
// trace Gram matrix.
int semisimple_dim(const std::vector<QMatrix>& basis);

} // namespace wcm
