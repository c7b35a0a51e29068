#include "wcm/radical.hpp"

namespace wcm {

namespace {

std::vector<Rat> flatten(const QMatrix& m) {
    std::vector<Rat> v;
    v.reserve(static_cast<size_t>(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            v.push_back(m.at(i, j));
    return v;
}

Rat trace_of_product(const QMatrix& a, const QMatrix& b) {
    Rat s = 0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a.at(i, j) != 0 && b.at(j, i) != 0)
                s += a.at(i, j) * b.at(j, i);
    return s;
}

} // namespace

bool MatSpan::insert(const QMatrix& m) {
    std::vector<Rat> v = flatten(m);
    for (size_t b = 0; b < basis_.size(); ++b) {
        const Rat& lead = v[pivots_[b]];
        if (lead != 0) {
            Rat f = lead; // basis rows are normalized to pivot 1
            for (size_t i = 0; i < v.size(); ++i)
                if (basis_[b][i] != 0)
                    v[i] -= f * basis_[b][i];
        }
    }
    int pivot = -1;
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) {
            pivot = static_cast<int>(i);
            break;
        }
    if (pivot < 0)
        return false;
    Rat inv = 1 / v[pivot];
    for (Rat& x : v)
        x *= inv;
    basis_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return true;
}

bool MatSpan::contains(const QMatrix& m) const {
    std::vector<Rat> v = flatten(m);
    for (size_t b = 0; b < basis_.size(); ++b) {
        const Rat& lead = v[pivots_[b]];
        if (lead != 0) {
            Rat f = lead;
            for (size_t i = 0; i < v.size(); ++i)
                if (basis_[b][i] != 0)
                    v[i] -= f * basis_[b][i];
        }
    }
    for (const Rat& x : v)
        if (x != 0)
            return false;
    return true;
}

std::vector<QMatrix> algebra_radical(const std::vector<QMatrix>& basis) {
    require(!basis.empty(), errc::parameter, "empty algebra basis");
    int n = basis[0].rows();
    for (const QMatrix& m : basis)
        require(m.rows() == n && m.cols() == n, errc::non_square, "algebra of non-square matrices");

    MatSpan span(n, n);
    for (const QMatrix& m : basis)
        span.insert(m);
    for (const QMatrix& a : basis)
        for (const QMatrix& b : basis)
            require(span.contains(a * b), errc::not_closed, "algebra basis not closed under product");

    // drop linear dependencies before the kernel passes
    auto independent = [&](const std::vector<QMatrix>& mats) {
        MatSpan s(n, n);
        std::vector<QMatrix> out;
        for (const QMatrix& m : mats)
            if (s.insert(m))
                out.push_back(m);
        return out;
    };

    std::vector<QMatrix> cur = independent(basis);
    while (!cur.empty()) {
        int d = static_cast<int>(cur.size());
        QMatrix gram(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                gram.at(i, j) = trace_of_product(cur[i], cur[j]);
        QMatrix null = kernel_basis(gram);
        if (null.rows() == d)
            return cur; // the whole current space is in the kernel: stable
        std::vector<QMatrix> next;
        for (int r = 0; r < null.rows(); ++r) {
            QMatrix combo(n, n);
            for (int j = 0; j < d; ++j) {
                if (null.at(r, j) == 0)
                    continue;
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                        combo.at(a, b) += null.at(r, j) * cur[j].at(a, b);
            }
            next.push_back(std::move(combo));
        }
        cur = independent(next);
    }
    return cur;
}

int semisimple_dim(const std::vector<QMatrix>& basis) {
    int d = static_cast<int>(basis.size());
    QMatrix gram(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            gram.at(i, j) = trace_of_product(basis[i], basis[j]);
    return rank(gram);
}

} // namespace wcm
