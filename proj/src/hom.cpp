#include "wcm/hom.hpp"

#include <algorithm>
#include <map>

namespace wcm {

namespace {

// sparse linear form over solver parameters, terms sorted by parameter index
struct Lin {
    std::vector<std::pair<int, Rat>> t;

    bool zero() const { return t.empty(); }

    void axpy(const Rat& f, const Lin& o) {
        if (f == 0 || o.t.empty())
            return;
        std::vector<std::pair<int, Rat>> out;
        out.reserve(t.size() + o.t.size());
        size_t i = 0, j = 0;
        while (i < t.size() || j < o.t.size()) {
            if (j == o.t.size() || (i < t.size() && t[i].first < o.t[j].first)) {
                out.push_back(t[i++]);
            } else if (i == t.size() || o.t[j].first < t[i].first) {
                out.emplace_back(o.t[j].first, f * o.t[j].second);
                ++j;
            } else {
                Rat v = t[i].second + f * o.t[j].second;
                if (v != 0)
                    out.emplace_back(t[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        t = std::move(out);
    }

    void scale(const Rat& f) {
        if (f == 0) {
            t.clear();
            return;
        }
        for (auto& [idx, v] : t)
            v *= f;
    }

    const Rat* find(int idx) const {
        auto it = std::lower_bound(t.begin(), t.end(), idx,
                                   [](const auto& a, int b) { return a.first < b; });
        if (it != t.end() && it->first == idx)
            return &it->second;
        return nullptr;
    }
};

// reduced echelon of constraint forms, pivot = smallest parameter index
class ConstraintSet {
  public:
    void insert(Lin row) {
        reduce(row);
        if (row.zero())
            return;
        int piv = row.t.front().first;
        row.scale(1 / row.t.front().second);
        for (auto& [p, existing] : rows_) {
            const Rat* c = existing.find(piv);
            if (c)
                existing.axpy(-*c, row);
        }
        rows_.emplace(piv, std::move(row));
    }

    bool is_pivot(int param) const { return rows_.count(param) != 0; }
    int rank() const { return static_cast<int>(rows_.size()); }

    // kernel basis vectors over params 0..P-1
    std::vector<std::vector<Rat>> kernel(int P) const {
        std::vector<std::vector<Rat>> out;
        for (int f = 0; f < P; ++f) {
            if (is_pivot(f))
                continue;
            std::vector<Rat> v(P);
            v[f] = 1;
            for (const auto& [piv, row] : rows_) {
                const Rat* c = row.find(f);
                if (c)
                    v[piv] = -*c; // rows are reduced and pivot-normalized
            }
            out.push_back(std::move(v));
        }
        return out;
    }

  private:
    void reduce(Lin& row) const {
        // eliminate pivot coordinates in increasing order
        while (!row.zero()) {
            bool changed = false;
            for (const auto& [idx, coef] : row.t) {
                auto it = rows_.find(idx);
                if (it != rows_.end()) {
                    row.axpy(-coef, it->second);
                    changed = true;
                    break;
                }
            }
            if (!changed)
                return;
        }
    }

    std::map<int, Lin> rows_;
};

struct RowOp {
    enum Kind { swap, scale, axpy } kind;
    int i, j;
    Rat f;
};

// RREF of a small dense matrix with the operation sequence recorded, so the
// same reduction can be replayed on symbolic right-hand sides
struct RecordedRref {
    QMatrix reduced;
    std::vector<RowOp> ops;
    std::vector<int> pivot_cols; // pivot of row r is pivot_cols[r]

    explicit RecordedRref(QMatrix a) : reduced(std::move(a)) {
        int r = 0;
        for (int c = 0; c < reduced.cols() && r < reduced.rows(); ++c) {
            int p = -1;
            for (int i = r; i < reduced.rows(); ++i)
                if (reduced.at(i, c) != 0) {
                    p = i;
                    break;
                }
            if (p < 0)
                continue;
            if (p != r) {
                for (int j = 0; j < reduced.cols(); ++j)
                    std::swap(reduced.at(p, j), reduced.at(r, j));
                ops.push_back({RowOp::swap, r, p, 0});
            }
            if (reduced.at(r, c) != 1) {
                Rat inv = 1 / reduced.at(r, c);
                for (int j = 0; j < reduced.cols(); ++j)
                    reduced.at(r, j) *= inv;
                ops.push_back({RowOp::scale, r, 0, inv});
            }
            for (int i = 0; i < reduced.rows(); ++i) {
                if (i == r || reduced.at(i, c) == 0)
                    continue;
                Rat f = -reduced.at(i, c);
                for (int j = 0; j < reduced.cols(); ++j)
                    reduced.at(i, j) += f * reduced.at(r, j);
                ops.push_back({RowOp::axpy, i, r, f});
            }
            pivot_cols.push_back(c);
            ++r;
        }
    }

    void apply(std::vector<Lin>& rhs) const {
        for (const RowOp& op : ops) {
            switch (op.kind) {
            case RowOp::swap: std::swap(rhs[op.i], rhs[op.j]); break;
            case RowOp::scale: rhs[op.i].scale(op.f); break;
            case RowOp::axpy: rhs[op.i].axpy(op.f, rhs[op.j]); break;
            }
        }
    }
};

class HomSolver {
  public:
    HomSolver(const ExplicitModule& m, const ExplicitModule& mp) : m_(m), mp_(mp) {
        require(m.spec == mp.spec, errc::spec_mismatch, "hom needs matching (k,n)");
        require(m.N == mp.N, errc::spec_mismatch, "hom needs matching truncation");
        n_ = m.spec.n;
        N_ = m.N;
        r_ = m.r;
        rp_ = mp.r;
        phi_.assign(n_, std::vector<Lin>(static_cast<size_t>(rp_) * r_ * N_));
    }

    void run() {
        int base = n_ - 1;
        for (int j = 0; j < rp_ * r_ * N_; ++j)
            phi_[base][j].t = {{fresh(), Rat(1)}};
        for (int p = 1; p <= n_ - 1; ++p)
            solve_arrow(p);
        close_cycle();
    }

    int params() const { return params_; }

    std::vector<std::vector<Rat>> kernel() const { return constraints_.kernel(params_); }

    // hom matrices of one kernel vector
    ModuleHom materialize(const std::vector<Rat>& v) const {
        ModuleHom hom;
        for (int vtx = 0; vtx < n_; ++vtx) {
            PolyMat mat(rp_, r_, N_);
            for (int a = 0; a < rp_; ++a)
                for (int b = 0; b < r_; ++b)
                    for (int deg = 0; deg < N_; ++deg) {
                        Rat val = 0;
                        for (const auto& [pi, c] : phi_[vtx][idx(a, b, deg)].t)
                            if (v[pi] != 0)
                                val += c * v[pi];
                        mat.at(a, b)[deg] = val;
                    }
            hom.push_back(std::move(mat));
        }
        return hom;
    }

    // constant-term matrix at each vertex for one kernel vector
    std::vector<QMatrix> constant_terms(const std::vector<Rat>& v) const {
        std::vector<QMatrix> out;
        for (int vtx = 0; vtx < n_; ++vtx) {
            QMatrix mat(rp_, r_);
            for (int a = 0; a < rp_; ++a)
                for (int b = 0; b < r_; ++b) {
                    Rat val = 0;
                    for (const auto& [pi, c] : phi_[vtx][idx(a, b, 0)].t)
                        if (v[pi] != 0)
                            val += c * v[pi];
                    mat.at(a, b) = val;
                }
            out.push_back(std::move(mat));
        }
        return out;
    }

  private:
    size_t idx(int a, int b, int deg) const {
        return (static_cast<size_t>(a) * r_ + b) * N_ + deg;
    }

    int fresh() { return params_++; }

    // rhs contribution: += sign * [t^deg](convolution of poly with known form series)
    void accumulate(Lin& dst, const TPoly& poly, const std::vector<Lin>& series, int a, int b,
                    int deg, int sign, int min_e) const {
        for (int e = min_e; e <= deg && e < N_; ++e) {
            if (poly[e] == 0)
                continue;
            dst.axpy(sign > 0 ? poly[e] : -poly[e], series[idx(a, b, deg - e)]);
        }
    }

    void solve_arrow(int p) {
        int src = m_.src_index(p), dst = m_.dst_index(p);
        const PolyMat& X = m_.x[p - 1];
        const PolyMat& Xp = mp_.x[p - 1];
        const PolyMat& Y = m_.y[p - 1];
        const PolyMat& Yp = mp_.y[p - 1];
        int rows = 2 * rp_ * r_, cols = rp_ * r_;
        QMatrix a0(rows, cols);
        for (int a = 0; a < rp_; ++a)
            for (int b = 0; b < r_; ++b) {
                for (int l = 0; l < r_; ++l)
                    a0.at(a * r_ + b, a * r_ + l) = X.at(l, b)[0];
                for (int l = 0; l < rp_; ++l)
                    a0.at(rp_ * r_ + a * r_ + b, l * r_ + b) = Yp.at(a, l)[0];
            }
        RecordedRref rr(std::move(a0));
        std::vector<bool> pivot_col(cols, false);
        for (int c : rr.pivot_cols)
            pivot_col[c] = true;

        for (int deg = 0; deg < N_; ++deg) {
            std::vector<Lin> rhs(rows);
            for (int a = 0; a < rp_; ++a)
                for (int b = 0; b < r_; ++b) {
                    Lin& rx = rhs[a * r_ + b];
                    for (int l = 0; l < rp_; ++l)
                        accumulate(rx, Xp.at(a, l), phi_[src], l, b, deg, +1, 0);
                    for (int l = 0; l < r_; ++l)
                        accumulate(rx, X.at(l, b), phi_[dst], a, l, deg, -1, 1);
                    Lin& ry = rhs[rp_ * r_ + a * r_ + b];
                    for (int l = 0; l < r_; ++l)
                        accumulate(ry, Y.at(l, b), phi_[src], a, l, deg, +1, 0);
                    for (int l = 0; l < rp_; ++l)
                        accumulate(ry, Yp.at(a, l), phi_[dst], l, b, deg, -1, 1);
                }
            rr.apply(rhs);
            // fresh parameters for free columns
            std::vector<Lin> u(cols);
            for (int c = 0; c < cols; ++c)
                if (!pivot_col[c])
                    u[c].t = {{fresh(), Rat(1)}};
            for (size_t prow = 0; prow < rr.pivot_cols.size(); ++prow) {
                int c = rr.pivot_cols[prow];
                Lin val = rhs[prow];
                for (int c2 = 0; c2 < cols; ++c2) {
                    if (pivot_col[c2] || rr.reduced.at(static_cast<int>(prow), c2) == 0)
                        continue;
                    val.axpy(-rr.reduced.at(static_cast<int>(prow), c2), u[c2]);
                }
                u[c] = std::move(val);
            }
            for (int row = static_cast<int>(rr.pivot_cols.size()); row < rows; ++row)
                if (!rhs[row].zero())
                    constraints_.insert(std::move(rhs[row]));
            for (int a = 0; a < rp_; ++a)
                for (int b = 0; b < r_; ++b)
                    phi_[dst][idx(a, b, deg)] = std::move(u[a * r_ + b]);
        }
    }

    void close_cycle() {
        int p = n_;
        int src = m_.src_index(p), dst = m_.dst_index(p);
        const PolyMat& X = m_.x[p - 1];
        const PolyMat& Xp = mp_.x[p - 1];
        const PolyMat& Y = m_.y[p - 1];
        const PolyMat& Yp = mp_.y[p - 1];
        for (int deg = 0; deg < N_; ++deg)
            for (int a = 0; a < rp_; ++a)
                for (int b = 0; b < r_; ++b) {
                    Lin cx;
                    for (int l = 0; l < r_; ++l)
                        accumulate(cx, X.at(l, b), phi_[dst], a, l, deg, +1, 0);
                    for (int l = 0; l < rp_; ++l)
                        accumulate(cx, Xp.at(a, l), phi_[src], l, b, deg, -1, 0);
                    if (!cx.zero())
                        constraints_.insert(std::move(cx));
                    Lin cy;
                    for (int l = 0; l < r_; ++l)
                        accumulate(cy, Y.at(l, b), phi_[src], a, l, deg, +1, 0);
                    for (int l = 0; l < rp_; ++l)
                        accumulate(cy, Yp.at(a, l), phi_[dst], l, b, deg, -1, 0);
                    if (!cy.zero())
                        constraints_.insert(std::move(cy));
                }
    }

    const ExplicitModule& m_;
    const ExplicitModule& mp_;
    int n_, N_, r_, rp_;
    int params_ = 0;
    std::vector<std::vector<Lin>> phi_;
    ConstraintSet constraints_;
};

} // namespace

std::vector<ModuleHom> hom_space(const ExplicitModule& m, const ExplicitModule& mp) {
    HomSolver solver(m, mp);
    solver.run();
    std::vector<ModuleHom> out;
    for (const auto& v : solver.kernel())
        out.push_back(solver.materialize(v));
    return out;
}

ModuleHom hom_combo(const std::vector<ModuleHom>& basis, const std::vector<Rat>& coeffs) {
    require(!basis.empty() && basis.size() == coeffs.size(), errc::parameter,
            "hom combination needs matching lengths");
    ModuleHom out;
    int n = static_cast<int>(basis[0].size());
    for (int v = 0; v < n; ++v) {
        PolyMat acc(basis[0][v].rows(), basis[0][v].cols(), basis[0][v].order());
        for (size_t j = 0; j < basis.size(); ++j) {
            if (coeffs[j] == 0)
                continue;
            for (int a = 0; a < acc.rows(); ++a)
                for (int b = 0; b < acc.cols(); ++b)
                    acc.at(a, b) = acc.at(a, b) + basis[j][v].at(a, b) * coeffs[j];
        }
        out.push_back(std::move(acc));
    }
    return out;
}

int endo_semisimple_rank(const ExplicitModule& m) {
    HomSolver solver(m, m);
    solver.run();
    std::vector<std::vector<Rat>> basis = solver.kernel();
    int dim = static_cast<int>(basis.size());
    std::vector<std::vector<QMatrix>> consts;
    consts.reserve(dim);
    for (const auto& v : basis)
        consts.push_back(solver.constant_terms(v));
    QMatrix gram(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = i; j < dim; ++j) {
            Rat s = 0;
            for (int vtx = 0; vtx < m.spec.n; ++vtx)
                for (int a = 0; a < m.r; ++a)
                    for (int b = 0; b < m.r; ++b)
                        if (consts[i][vtx].at(a, b) != 0 && consts[j][vtx].at(b, a) != 0)
                            s += consts[i][vtx].at(a, b) * consts[j][vtx].at(b, a);
            gram.at(i, j) = s;
            gram.at(j, i) = s;
        }
    return rank(gram);
}

bool is_indecomposable(const ExplicitModule& m) {
    return endo_semisimple_rank(m) == 1;
}

QMatrix flatten_endo(const ExplicitModule& m, const ModuleHom& hom) {
    int n = m.spec.n, r = m.r, N = m.N;
    int total = n * r * N;
    QMatrix out(total, total);
    for (int v = 0; v < n; ++v)
        for (int a = 0; a < r; ++a)
            for (int b = 0; b < r; ++b) {
                const TPoly& q = hom[v].at(a, b);
                for (int e = 0; e < N; ++e) {
                    if (q[e] == 0)
                        continue;
                    for (int deg = 0; deg + e < N; ++deg)
                        out.at((v * r + a) * N + deg + e, (v * r + b) * N + deg) = q[e];
                }
            }
    return out;
}

namespace ref {

std::vector<ModuleHom> hom_space_dense(const ExplicitModule& m, const ExplicitModule& mp) {
    require(m.spec == mp.spec && m.N == mp.N, errc::spec_mismatch, "hom needs matching spec");
    int n = m.spec.n, N = m.N, r = m.r, rp = mp.r;
    int cols = n * rp * r * N;
    auto col = [&](int v, int a, int b, int deg) { return ((v * rp + a) * r + b) * N + deg; };
    std::vector<std::vector<Rat>> rows;
    auto conv = [&](std::vector<Rat>& row, const TPoly& poly, int v, int a, int b, int deg,
                    int sign) {
        for (int e = 0; e <= deg; ++e)
            if (poly[e] != 0)
                row[col(v, a, b, deg - e)] += sign > 0 ? poly[e] : -poly[e];
    };
    for (int p = 1; p <= n; ++p) {
        int src = m.src_index(p), dst = m.dst_index(p);
        for (int a = 0; a < rp; ++a)
            for (int b = 0; b < r; ++b)
                for (int deg = 0; deg < N; ++deg) {
                    std::vector<Rat> rx(cols);
                    for (int l = 0; l < r; ++l)
                        conv(rx, m.x[p - 1].at(l, b), dst, a, l, deg, +1);
                    for (int l = 0; l < rp; ++l)
                        conv(rx, mp.x[p - 1].at(a, l), src, l, b, deg, -1);
                    rows.push_back(std::move(rx));
                    std::vector<Rat> ry(cols);
                    for (int l = 0; l < r; ++l)
                        conv(ry, m.y[p - 1].at(l, b), src, a, l, deg, +1);
                    for (int l = 0; l < rp; ++l)
                        conv(ry, mp.y[p - 1].at(a, l), dst, l, b, deg, -1);
                    rows.push_back(std::move(ry));
                }
    }
    QMatrix system(static_cast<int>(rows.size()), cols);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < cols; ++j)
            system.at(static_cast<int>(i), j) = rows[i][j];
    QMatrix null = kernel_basis(system);
    std::vector<ModuleHom> out;
    for (int i = 0; i < null.rows(); ++i) {
        ModuleHom hom;
        for (int v = 0; v < n; ++v) {
            PolyMat mat(rp, r, N);
            for (int a = 0; a < rp; ++a)
                for (int b = 0; b < r; ++b)
                    for (int deg = 0; deg < N; ++deg)
                        mat.at(a, b)[deg] = null.at(i, col(v, a, b, deg));
            hom.push_back(std::move(mat));
        }
        out.push_back(std::move(hom));
    }
    return out;
}

} // namespace ref

} // namespace wcm
