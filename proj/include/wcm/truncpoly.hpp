#pragma once

#include <vector>

#include "wcm/error.hpp"
#include "wcm/matrix.hpp"
#include "wcm/rational.hpp"

namespace wcm {

// Element of Q[t]/t^N. Arithmetic silently drops degrees >= N.
class TPoly {
  public:
    TPoly() = default;
    explicit TPoly(int order) : c_(order) {}

    static TPoly constant(const Rat& v, int order);
    static TPoly t_power(int e, int order, const Rat& coef = 1); // coef * t^e (zero if e >= order)

    int order() const { return static_cast<int>(c_.size()); }
    const Rat& operator[](int i) const { return c_[i]; }
    Rat& operator[](int i) { return c_[i]; }

    bool is_zero() const;
    // index of lowest nonzero coefficient, or order() when zero mod t^N
    int valuation() const;

    TPoly operator+(const TPoly& o) const;
    TPoly operator-(const TPoly& o) const;
    TPoly operator*(const TPoly& o) const;
    TPoly operator*(const Rat& s) const;
    bool operator==(const TPoly& o) const { return c_ == o.c_; }

    TPoly shifted(int e) const;   // multiply by t^e
    TPoly unit_inverse() const;   // requires valuation 0
    TPoly divided_by_t(int e) const; // requires valuation >= e
    TPoly truncated(int order) const;

    std::string str() const;      // e.g. "1 - 3/2*t^2"

  private:
    std::vector<Rat> c_;
};

TPoly parse_tpoly(const std::string& s, int order);

// Dense matrix over Q[t]/t^N.
class PolyMat {
  public:
    PolyMat() = default;
    PolyMat(int rows, int cols, int order);

    static PolyMat identity(int n, int order);
    static PolyMat t_identity(int n, int order, int e = 1);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int order() const { return order_; }

    TPoly& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const TPoly& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    PolyMat operator*(const PolyMat& o) const;
    PolyMat operator+(const PolyMat& o) const;
    PolyMat operator-(const PolyMat& o) const;
    bool operator==(const PolyMat& o) const;
    bool is_zero() const;

    QMatrix constant_term() const;
    PolyMat truncated(int order) const;

  private:
    int rows_ = 0, cols_ = 0, order_ = 0;
    std::vector<TPoly> a_;
};

// Inverse of a matrix whose constant term is invertible over Q.
PolyMat unit_inverse(const PolyMat& m);

// Multiset (sorted ascending) of elementary-divisor t-valuations of m over the
// local ring Q[t]/t^N. Valid only while every invariant stays below the
// truncation order; otherwise raises truncation_too_small.
std::vector<int> smith_invariants_t(const PolyMat& m);

} // namespace wcm
