#include "wcm/grass.hpp"

#include <algorithm>

namespace wcm {

GrassPoint make_grass_point(int k, int n, QMatrix m) {
    require(m.rows() == k && m.cols() == n, errc::size, "point matrix must be k x n");
    require(rank(m) == k, errc::rank_degenerate, "point matrix must have rank k");
    return GrassPoint{k, n, std::move(m)};
}

GrassPoint random_point(int k, int n, Rng& rng) {
    while (true) {
        QMatrix m(k, n);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < n; ++j)
                m.at(i, j) = rng.range(-9, 9);
        if (rank(m) == k)
            return GrassPoint{k, n, std::move(m)};
    }
}

QMatrix random_slk(int k, Rng& rng) {
    QMatrix g = QMatrix::identity(k);
    for (int step = 0; step < 2 * k; ++step) {
        int i = rng.range(0, k - 1);
        int j = rng.range(0, k - 2);
        if (j >= i)
            ++j;
        Rat c = rng.range(-3, 3);
        // g <- g * E_{ij}(c): adds c * (column i) to column j
        for (int r = 0; r < k; ++r)
            g.at(r, j) += c * g.at(r, i);
    }
    return g;
}

Rat plucker(const LabelSet& I, const GrassPoint& p) {
    require(I.n == p.n, errc::ambient_mismatch, "plucker subset ambient mismatch");
    require(I.size() == p.k, errc::size, "plucker subset must have size k");
    std::vector<int> cols;
    for (int x : I.elems)
        cols.push_back(x - 1);
    return det(p.m.cols_subset(cols));
}

Rat bordered_det(const GrassPoint& p, const std::vector<int>& leaves,
                 const std::vector<int>& unit_rows) {
    int k = p.k;
    require(static_cast<int>(leaves.size() + unit_rows.size()) == k, errc::size,
            "bordered determinant needs k columns total");
    // Laplace-strip each unit column e_i: with m leaf columns and the unit
    // columns at positions m+1.. in increasing row order, the sign collects
    // (-1)^{row + col} per strip.
    int s = k;
    int sign = 1;
    std::vector<int> rows(k);
    for (int i = 0; i < k; ++i)
        rows[i] = i;
    // strip from the last unit column down
    std::vector<int> units = unit_rows; // 1-based rows, increasing
    while (!units.empty()) {
        int row_label = units.back();
        units.pop_back();
        int pos = -1; // current index of that row
        for (int i = 0; i < static_cast<int>(rows.size()); ++i)
            if (rows[i] == row_label - 1) {
                pos = i;
                break;
            }
        require(pos >= 0, errc::parameter, "repeated unit row");
        // stripping column s (1-based) against row pos+1: sign (-1)^{pos+1+s}
        if ((pos + 1 + s) % 2)
            sign = -sign;
        rows.erase(rows.begin() + pos);
        --s;
    }
    QMatrix minor(s, s);
    for (int i = 0; i < s; ++i)
        for (size_t j = 0; j < leaves.size(); ++j)
            minor.at(i, static_cast<int>(j)) = p.m.at(rows[i], leaves[j] - 1);
    Rat d = det(minor);
    return sign == 1 ? d : -d;
}

namespace {

int concat_sign(const std::vector<int>& i1, const std::vector<int>& i2,
                const std::vector<int>& i3) {
    std::vector<int> perm;
    perm.insert(perm.end(), i1.begin(), i1.end());
    perm.insert(perm.end(), i2.begin(), i2.end());
    perm.insert(perm.end(), i3.begin(), i3.end());
    int inv = 0;
    for (size_t i = 0; i < perm.size(); ++i)
        for (size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j])
                ++inv;
    return inv % 2 ? -1 : 1;
}

} // namespace

Rat eval_tripod(const TripodWeb& w, const GrassPoint& p) {
    require(w.k == p.k && w.n == p.n, errc::ambient_mismatch, "tripod/point (k,n) mismatch");
    int k = w.k;
    const std::vector<int>* Ls[3] = {&w.L1, &w.L2, &w.L3};
    int m[3];
    for (int j = 0; j < 3; ++j) {
        m[j] = k - static_cast<int>(Ls[j]->size());
        require(m[j] >= 0, errc::invalid_web, "white vertex has more than k leaves");
    }
    require(m[0] + m[1] + m[2] == k, errc::invalid_web, "tripod leaf count must be 2k");

    std::vector<int> base(k);
    for (int i = 0; i < k; ++i)
        base[i] = i + 1;
    Rat total = 0;
    for (const auto& i1 : combinations(base, m[0])) {
        std::vector<int> rest1;
        std::set_difference(base.begin(), base.end(), i1.begin(), i1.end(),
                            std::back_inserter(rest1));
        Rat d1 = bordered_det(p, *Ls[0], i1);
        if (d1 == 0)
            continue;
        for (const auto& i2 : combinations(rest1, m[1])) {
            std::vector<int> i3;
            std::set_difference(rest1.begin(), rest1.end(), i2.begin(), i2.end(),
                                std::back_inserter(i3));
            Rat d2 = bordered_det(p, *Ls[1], i2);
            if (d2 == 0)
                continue;
            Rat d3 = bordered_det(p, *Ls[2], i3);
            if (d3 == 0)
                continue;
            Rat term = d1 * d2 * d3;
            total += concat_sign(i1, i2, i3) == 1 ? term : -term;
        }
    }
    return total;
}

TripodWeb tripod_of(const Rank2Web& w) {
    int caps[3] = {w.k - w.a(), w.k - w.b(), w.k - w.c()};
    std::vector<int> L[3] = {w.R.elems, w.S.elems, w.T.elems};
    for (int v : w.V.elems) {
        int order[3] = {0, 1, 2};
        std::sort(order, order + 3, [&](int x, int y) {
            return caps[x] != caps[y] ? caps[x] > caps[y] : x < y;
        });
        caps[order[0]]--;
        caps[order[1]]--;
        L[order[0]].push_back(v);
        L[order[1]].push_back(v);
    }
    require(caps[0] >= 0 && caps[1] >= 0 && caps[2] >= 0, errc::invalid_web,
            "no admissible V-assignment");
    for (auto& l : L)
        std::sort(l.begin(), l.end());
    return TripodWeb{w.k, w.n, std::move(L[0]), std::move(L[1]), std::move(L[2])};
}

std::vector<TripodWeb> all_tripods(const Rank2Web& w) {
    std::vector<TripodWeb> out;
    int d = w.d();
    // pair choice per V label: 0 = (1,2), 1 = (1,3), 2 = (2,3)
    std::vector<int> choice(d, 0);
    while (true) {
        int caps[3] = {w.k - w.a(), w.k - w.b(), w.k - w.c()};
        std::vector<int> L[3] = {w.R.elems, w.S.elems, w.T.elems};
        for (int i = 0; i < d; ++i) {
            int v = w.V.elems[i];
            int x = choice[i] == 2 ? 1 : 0;
            int y = choice[i] == 0 ? 1 : 2;
            caps[x]--;
            caps[y]--;
            L[x].push_back(v);
            L[y].push_back(v);
        }
        if (caps[0] >= 0 && caps[1] >= 0 && caps[2] >= 0) {
            for (auto& l : L)
                std::sort(l.begin(), l.end());
            out.push_back(TripodWeb{w.k, w.n, L[0], L[1], L[2]});
        }
        int i = d - 1;
        while (i >= 0 && choice[i] == 2)
            choice[i--] = 0;
        if (i < 0)
            break;
        ++choice[i];
    }
    return out;
}

Rat eval_web(const Rank1Web& w, const GrassPoint& p) {
    return plucker(w.leaves, p);
}

Rat eval_web(const Rank2Web& w, const GrassPoint& p) {
    return eval_tripod(tripod_of(w), p);
}

Rat eval_web(const TripodWeb& w, const GrassPoint& p) {
    return eval_tripod(w, p);
}

Rat eval_web(const Web& w, const GrassPoint& p) {
    return std::visit([&](const auto& v) { return eval_web(v, p); }, w);
}

Rat EvalMemo::value(const Web& w, const GrassPoint& p) {
    std::string key = web_key(w);
    auto it = cache_.find(key);
    if (it != cache_.end())
        return it->second;
    Rat v = eval_web(w, p);
    cache_.emplace(std::move(key), v);
    return v;
}

Rat eval_expr(const FunctionExpr& e, const GrassPoint& p) {
    EvalMemo memo;
    return eval_expr(e, p, memo);
}

Rat eval_expr(const FunctionExpr& e, const GrassPoint& p, EvalMemo& memo) {
    require(e.k == p.k && e.n == p.n, errc::ambient_mismatch, "expression/point (k,n) mismatch");
    Rat total = 0;
    for (const auto& term : e.terms) {
        if (term.coef == 0)
            continue;
        Rat v = term.coef;
        for (const Web& w : term.factors) {
            v *= memo.value(w, p);
            if (v == 0)
                break;
        }
        total += v;
    }
    return total;
}

GrassPoint forget_column(const GrassPoint& p, int i) {
    require(1 <= i && i <= p.n, errc::parameter, "column index out of range");
    std::vector<int> keep;
    for (int j = 0; j < p.n; ++j)
        if (j != i - 1)
            keep.push_back(j);
    QMatrix m = p.m.cols_subset(keep);
    require(rank(m) == p.k, errc::rank_degenerate, "rank drops after forgetting column");
    return GrassPoint{p.k, p.n - 1, std::move(m)};
}

GrassPoint dual_point(const GrassPoint& p) {
    QMatrix kern = kernel_basis(p.m);
    require(kern.rows() == p.n - p.k, errc::rank_degenerate, "dual point has wrong rank");
    return GrassPoint{p.n - p.k, p.n, std::move(kern)};
}

GrassPoint dual_delete(const GrassPoint& p, int i) {
    GrassPoint d = dual_point(p);
    GrassPoint f = forget_column(d, i);
    return dual_point(f);
}

} // namespace wcm
