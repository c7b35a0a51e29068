#include "wcm/truncpoly.hpp"

#include <algorithm>
#include <sstream>

#include "wcm/matrix.hpp"

namespace wcm {

TPoly TPoly::constant(const Rat& v, int order) {
    TPoly p(order);
    if (order > 0)
        p.c_[0] = v;
    return p;
}

TPoly TPoly::t_power(int e, int order, const Rat& coef) {
    TPoly p(order);
    if (e < order)
        p.c_[e] = coef;
    return p;
}

bool TPoly::is_zero() const {
    for (const Rat& v : c_)
        if (v != 0)
            return false;
    return true;
}

int TPoly::valuation() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0)
            return static_cast<int>(i);
    return order();
}

TPoly TPoly::operator+(const TPoly& o) const {
    require(order() == o.order(), errc::ambient_mismatch, "truncation order mismatch");
    TPoly out(order());
    for (int i = 0; i < order(); ++i)
        out.c_[i] = c_[i] + o.c_[i];
    return out;
}

TPoly TPoly::operator-(const TPoly& o) const {
    require(order() == o.order(), errc::ambient_mismatch, "truncation order mismatch");
    TPoly out(order());
    for (int i = 0; i < order(); ++i)
        out.c_[i] = c_[i] - o.c_[i];
    return out;
}

TPoly TPoly::operator*(const TPoly& o) const {
    require(order() == o.order(), errc::ambient_mismatch, "truncation order mismatch");
    int N = order();
    TPoly out(N);
    for (int i = 0; i < N; ++i) {
        if (c_[i] == 0)
            continue;
        for (int j = 0; i + j < N; ++j)
            if (o.c_[j] != 0)
                out.c_[i + j] += c_[i] * o.c_[j];
    }
    return out;
}

TPoly TPoly::operator*(const Rat& s) const {
    TPoly out(order());
    if (s == 0)
        return out;
    for (int i = 0; i < order(); ++i)
        out.c_[i] = c_[i] * s;
    return out;
}

TPoly TPoly::shifted(int e) const {
    TPoly out(order());
    for (int i = 0; i + e < order(); ++i)
        out.c_[i + e] = c_[i];
    return out;
}

TPoly TPoly::unit_inverse() const {
    require(order() > 0 && c_[0] != 0, errc::rank_degenerate, "inverse of non-unit poly");
    int N = order();
    TPoly inv(N);
    inv.c_[0] = 1 / c_[0];
    for (int e = 1; e < N; ++e) {
        Rat s = 0;
        for (int j = 1; j <= e; ++j)
            if (c_[j] != 0)
                s += c_[j] * inv.c_[e - j];
        inv.c_[e] = -s / c_[0];
    }
    return inv;
}

TPoly TPoly::divided_by_t(int e) const {
    require(valuation() >= e, errc::parameter, "poly not divisible by t^e");
    TPoly out(order());
    for (int i = e; i < order(); ++i)
        out.c_[i - e] = c_[i];
    return out;
}

TPoly TPoly::truncated(int order) const {
    TPoly out(order);
    for (int i = 0; i < std::min(order, this->order()); ++i)
        out.c_[i] = c_[i];
    return out;
}

std::string TPoly::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < order(); ++i) {
        if (c_[i] == 0)
            continue;
        Rat v = c_[i];
        if (first) {
            if (v < 0) {
                os << "-";
                v = -v;
            }
            first = false;
        } else if (v < 0) {
            os << " - ";
            v = -v;
        } else {
            os << " + ";
        }
        if (i == 0)
            os << v;
        else {
            if (v != 1)
                os << v << "*";
            os << "t";
            if (i > 1)
                os << "^" << i;
        }
    }
    if (first)
        os << "0";
    return os.str();
}

TPoly parse_tpoly(const std::string& s, int order) {
    TPoly out(order);
    std::string cur;
    std::vector<std::string> terms;
    std::vector<int> signs;
    int sign = 1;
    for (size_t i = 0; i < s.size(); ++i) {
        char ch = s[i];
        if (ch == ' ')
            continue;
        if ((ch == '+' || ch == '-') && !cur.empty() && s[i - 1] != '/' && s[i - 1] != '*') {
            terms.push_back(cur);
            signs.push_back(sign);
            cur.clear();
            sign = ch == '-' ? -1 : 1;
        } else if (ch == '-' && cur.empty()) {
            sign = -sign;
        } else if (ch == '+' && cur.empty()) {
            // leading plus
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) {
        terms.push_back(cur);
        signs.push_back(sign);
    }
    for (size_t t = 0; t < terms.size(); ++t) {
        const std::string& term = terms[t];
        size_t tpos = term.find('t');
        Rat coef = 1;
        int exp = 0;
        if (tpos == std::string::npos) {
            coef = parse_rat(term);
        } else {
            std::string c = term.substr(0, tpos);
            if (!c.empty() && c.back() == '*')
                c.pop_back();
            if (!c.empty())
                coef = parse_rat(c);
            exp = 1;
            size_t caret = term.find('^', tpos);
            if (caret != std::string::npos)
                exp = std::stoi(term.substr(caret + 1));
        }
        if (exp < order)
            out[exp] += Rat(signs[t]) * coef;
    }
    return out;
}

PolyMat::PolyMat(int rows, int cols, int order)
    : rows_(rows), cols_(cols), order_(order),
      a_(static_cast<size_t>(rows) * cols, TPoly(order)) {}

PolyMat PolyMat::identity(int n, int order) {
    PolyMat m(n, n, order);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = TPoly::constant(1, order);
    return m;
}

PolyMat PolyMat::t_identity(int n, int order, int e) {
    PolyMat m(n, n, order);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = TPoly::t_power(e, order);
    return m;
}

PolyMat PolyMat::operator*(const PolyMat& o) const {
    require(cols_ == o.rows_ && order_ == o.order_, errc::size, "poly matrix product mismatch");
    PolyMat out(rows_, o.cols_, order_);
    for (int i = 0; i < rows_; ++i)
        for (int l = 0; l < cols_; ++l) {
            const TPoly& v = at(i, l);
            if (v.is_zero())
                continue;
            for (int j = 0; j < o.cols_; ++j)
                if (!o.at(l, j).is_zero())
                    out.at(i, j) = out.at(i, j) + v * o.at(l, j);
        }
    return out;
}

PolyMat PolyMat::operator+(const PolyMat& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_ && order_ == o.order_, errc::size,
            "poly matrix sum mismatch");
    PolyMat out(rows_, cols_, order_);
    for (size_t i = 0; i < a_.size(); ++i)
        out.a_[i] = a_[i] + o.a_[i];
    return out;
}

PolyMat PolyMat::operator-(const PolyMat& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_ && order_ == o.order_, errc::size,
            "poly matrix difference mismatch");
    PolyMat out(rows_, cols_, order_);
    for (size_t i = 0; i < a_.size(); ++i)
        out.a_[i] = a_[i] - o.a_[i];
    return out;
}

bool PolyMat::operator==(const PolyMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && order_ == o.order_ && a_ == o.a_;
}

bool PolyMat::is_zero() const {
    for (const TPoly& p : a_)
        if (!p.is_zero())
            return false;
    return true;
}

QMatrix PolyMat::constant_term() const {
    QMatrix out(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (order_ > 0)
                out.at(i, j) = at(i, j)[0];
    return out;
}

PolyMat PolyMat::truncated(int order) const {
    PolyMat out(rows_, cols_, order);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            out.at(i, j) = at(i, j).truncated(order);
    return out;
}

PolyMat unit_inverse(const PolyMat& m) {
    require(m.rows() == m.cols(), errc::non_square, "inverse of non-square poly matrix");
    int n = m.rows(), N = m.order();
    PolyMat aug(n, 2 * n, N);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = TPoly::constant(1, N);
    }
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int r = c; r < n; ++r)
            if (aug.at(r, c).valuation() == 0) {
                p = r;
                break;
            }
        require(p >= 0, errc::rank_degenerate, "poly matrix has no unit pivot");
        if (p != c)
            for (int j = 0; j < 2 * n; ++j)
                std::swap(aug.at(p, j), aug.at(c, j));
        TPoly inv = aug.at(c, c).unit_inverse();
        for (int j = 0; j < 2 * n; ++j)
            aug.at(c, j) = aug.at(c, j) * inv;
        for (int r = 0; r < n; ++r) {
            if (r == c || aug.at(r, c).is_zero())
                continue;
            TPoly f = aug.at(r, c);
            for (int j = 0; j < 2 * n; ++j)
                aug.at(r, j) = aug.at(r, j) - f * aug.at(c, j);
        }
    }
    PolyMat out(n, n, N);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out.at(i, j) = aug.at(i, n + j);
    return out;
}

std::vector<int> smith_invariants_t(const PolyMat& m) {
    PolyMat a = m;
    int N = a.order();
    int steps = std::min(a.rows(), a.cols());
    std::vector<int> vals;
    std::vector<bool> row_done(a.rows(), false), col_done(a.cols(), false);
    for (int s = 0; s < steps; ++s) {
        int best_r = -1, best_c = -1, best_v = N;
        for (int r = 0; r < a.rows(); ++r) {
            if (row_done[r])
                continue;
            for (int c = 0; c < a.cols(); ++c) {
                if (col_done[c])
                    continue;
                int v = a.at(r, c).valuation();
                if (v < best_v) {
                    best_v = v;
                    best_r = r;
                    best_c = c;
                }
            }
        }
        if (best_v >= N)
            fail(errc::truncation_too_small,
                 "elementary divisor valuation reaches truncation order");
        // clear the pivot's row and column with unimodular operations
        TPoly pivot_unit = a.at(best_r, best_c).divided_by_t(best_v);
        TPoly pivot_unit_inv = pivot_unit.unit_inverse();
        for (int r = 0; r < a.rows(); ++r) {
            if (r == best_r || row_done[r] || a.at(r, best_c).is_zero())
                continue;
            TPoly f = a.at(r, best_c).divided_by_t(best_v) * pivot_unit_inv;
            for (int c = 0; c < a.cols(); ++c)
                if (!col_done[c])
                    a.at(r, c) = a.at(r, c) - f * a.at(best_r, c);
        }
        for (int c = 0; c < a.cols(); ++c) {
            if (c == best_c || col_done[c] || a.at(best_r, c).is_zero())
                continue;
            TPoly f = a.at(best_r, c).divided_by_t(best_v) * pivot_unit_inv;
            for (int r = 0; r < a.rows(); ++r)
                if (!row_done[r])
                    a.at(r, c) = a.at(r, c) - f * a.at(r, best_c);
        }
        row_done[best_r] = true;
        col_done[best_c] = true;
        vals.push_back(best_v);
    }
    std::sort(vals.begin(), vals.end());
    return vals;
}

} // namespace wcm
