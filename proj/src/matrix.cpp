#include "wcm/matrix.hpp"

#include <sstream>

namespace wcm {

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    require(cols_ == o.rows_, errc::size, "matrix product shape mismatch");
    QMatrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int l = 0; l < cols_; ++l) {
            const Rat& v = at(i, l);
            if (v == 0)
                continue;
            for (int j = 0; j < o.cols_; ++j)
                if (o.at(l, j) != 0)
                    out.at(i, j) += v * o.at(l, j);
        }
    return out;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_, errc::size, "matrix difference shape mismatch");
    QMatrix out(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i)
        out.a_[i] = a_[i] - o.a_[i];
    return out;
}

bool QMatrix::is_zero() const {
    for (const Rat& v : a_)
        if (v != 0)
            return false;
    return true;
}

QMatrix QMatrix::transposed() const {
    QMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            out.at(j, i) = at(i, j);
    return out;
}

QMatrix QMatrix::cols_subset(const std::vector<int>& idx) const {
    QMatrix out(rows_, static_cast<int>(idx.size()));
    for (int i = 0; i < rows_; ++i)
        for (size_t j = 0; j < idx.size(); ++j)
            out.at(i, static_cast<int>(j)) = at(i, idx[j]);
    return out;
}

QMatrix QMatrix::rows_subset(const std::vector<int>& idx) const {
    QMatrix out(static_cast<int>(idx.size()), cols_);
    for (size_t i = 0; i < idx.size(); ++i)
        for (int j = 0; j < cols_; ++j)
            out.at(static_cast<int>(i), j) = at(idx[i], j);
    return out;
}

Rat det(const QMatrix& m) {
    require(m.rows() == m.cols(), errc::non_square, "determinant of non-square matrix");
    int n = m.rows();
    if (n == 0)
        return 1;
    // Clear denominators row by row, then run Bareiss on integers.
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    Int den = 1;
    for (int i = 0; i < n; ++i) {
        Int l = 1;
        for (int j = 0; j < n; ++j)
            l = lcm(l, m.at(i, j).get_den());
        den *= l;
        for (int j = 0; j < n; ++j) {
            Rat v = m.at(i, j) * Rat(l);
            v.canonicalize();
            a[i][j] = v.get_num();
        }
    }
    Int prev = 1;
    int sign = 1;
    for (int c = 0; c < n - 1; ++c) {
        if (a[c][c] == 0) {
            int p = -1;
            for (int r = c + 1; r < n; ++r)
                if (a[r][c] != 0) {
                    p = r;
                    break;
                }
            if (p < 0)
                return 0;
            std::swap(a[c], a[p]);
            sign = -sign;
        }
        for (int r = c + 1; r < n; ++r) {
            for (int j = c + 1; j < n; ++j)
                a[r][j] = (a[c][c] * a[r][j] - a[r][c] * a[c][j]) / prev;
            a[r][c] = 0;
        }
        prev = a[c][c];
    }
    Rat result(sign * a[n - 1][n - 1], den);
    result.canonicalize();
    return result;
}

std::vector<int> rref(QMatrix& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m.at(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0)
            continue;
        if (p != r)
            for (int j = 0; j < m.cols(); ++j)
                std::swap(m.at(p, j), m.at(r, j));
        Rat inv = 1 / m.at(r, c);
        for (int j = c; j < m.cols(); ++j)
            m.at(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == 0)
                continue;
            Rat f = m.at(i, c);
            for (int j = c; j < m.cols(); ++j)
                m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

QMatrix kernel_basis(const QMatrix& m) {
    QMatrix e = m;
    std::vector<int> pivots = rref(e);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots)
        is_pivot[c] = true;
    int free_cnt = m.cols() - static_cast<int>(pivots.size());
    QMatrix out(free_cnt, m.cols());
    int row = 0;
    for (int c = 0; c < m.cols(); ++c) {
        if (is_pivot[c])
            continue;
        out.at(row, c) = 1;
        for (size_t pi = 0; pi < pivots.size(); ++pi)
            out.at(row, pivots[pi]) = -e.at(static_cast<int>(pi), c);
        ++row;
    }
    return out;
}

int rank(const QMatrix& m) {
    QMatrix e = m;
    return static_cast<int>(rref(e).size());
}

QMatrix inverse(const QMatrix& m) {
    require(m.rows() == m.cols(), errc::non_square, "inverse of non-square matrix");
    int n = m.rows();
    QMatrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    std::vector<int> piv = rref(aug);
    require(static_cast<int>(piv.size()) == n && piv[n - 1] == n - 1, errc::rank_degenerate,
            "matrix not invertible");
    QMatrix out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out.at(i, j) = aug.at(i, n + j);
    return out;
}

namespace ref {

Rat det_cofactor(const QMatrix& m) {
    require(m.rows() == m.cols(), errc::non_square, "determinant of non-square matrix");
    int n = m.rows();
    if (n == 0)
        return 1;
    if (n == 1)
        return m.at(0, 0);
    Rat total = 0;
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j) == 0)
            continue;
        QMatrix minor(n - 1, n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j)
                    continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        Rat term = m.at(0, j) * det_cofactor(minor);
        if (j % 2)
            total -= term;
        else
            total += term;
    }
    return total;
}

} // namespace ref

Rat parse_rat(const std::string& s) {
    size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Rat r{Int(s)};
            r.canonicalize();
            return r;
        }
        Rat r{Int(s.substr(0, slash)), Int(s.substr(slash + 1))};
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        fail(errc::io, "cannot parse rational: " + s);
    }
}

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

Int binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

} // namespace wcm
