#include "wcm/modules.hpp"

#include <algorithm>

#include "wcm/hom.hpp"

namespace wcm {

int default_truncation(int n) {
    return 2 * n;
}

namespace {

// x-entry exponent for a strand: D step acts by 1, U step by t
int x_exp(char step) {
    return step == 'D' ? 0 : 1;
}

PolyMat rank1_arrow_x(char step, int N) {
    PolyMat m(1, 1, N);
    m.at(0, 0) = TPoly::t_power(x_exp(step), N);
    return m;
}

} // namespace

ExplicitModule module_from_rank1(const Rank1Profile& p, int k, int N) {
    require(p.downs.size() == k, errc::size, "rank-1 profile must have k down steps");
    std::string w = p.word();
    ExplicitModule m{QuiverAlgebraSpec{k, p.n}, N, 1, {}, {}};
    for (int pos = 1; pos <= p.n; ++pos) {
        m.x.push_back(rank1_arrow_x(w[pos - 1], N));
        m.y.push_back(rank1_arrow_x(w[pos - 1] == 'D' ? 'U' : 'D', N));
    }
    std::optional<std::string> bad = relations_failure(m);
    require(!bad, errc::relation_failure, "rank-1 module relations: " + bad.value_or(""));
    return m;
}

std::optional<std::string> relations_failure(const ExplicitModule& m) {
    int n = m.spec.n, k = m.spec.k;
    PolyMat tI = PolyMat::t_identity(m.r, m.N);
    for (int p = 1; p <= n; ++p) {
        if (!(m.x[p - 1] * m.y[p - 1] == tI))
            return "x_" + std::to_string(p) + " y_" + std::to_string(p) + " != t";
        if (!(m.y[p - 1] * m.x[p - 1] == tI))
            return "y_" + std::to_string(p) + " x_" + std::to_string(p) + " != t";
    }
    for (int v = 1; v <= n; ++v) {
        // x-path v -> v+k against y-path v -> v+k-n (same endpoint cyclically)
        PolyMat xp = PolyMat::identity(m.r, m.N);
        for (int s = 1; s <= k; ++s)
            xp = m.x[norm_label(v + s, n) - 1] * xp;
        PolyMat yp = PolyMat::identity(m.r, m.N);
        for (int s = 0; s < n - k; ++s)
            yp = m.y[norm_label(v - s, n) - 1] * yp;
        if (!(xp == yp))
            return "x-path != y-path at vertex " + std::to_string(v);
    }
    return std::nullopt;
}

namespace {

ExplicitModule twisted_module(const Rank2Profile& p, int N, const std::vector<Box>& boxes,
                              const std::array<int, 3>& twist_values) {
    int n = p.n, k = p.k_top();
    ExplicitModule m{QuiverAlgebraSpec{k, n}, N, 2, {}, {}};
    std::vector<Rat> twist(n + 1, 0);
    for (int b = 0; b < 3; ++b)
        twist[boxes[b].start] = twist_values[b];
    for (int pos = 1; pos <= n; ++pos) {
        int ex = x_exp(p.top[pos - 1]);   // strand 1 = I (quotient)
        int ey = x_exp(p.bottom[pos - 1]); // strand 2 = J (submodule)
        const Rat& c = twist[pos];
        PolyMat X(2, 2, N), Y(2, 2, N);
        X.at(0, 0) = TPoly::t_power(ex, N);
        X.at(1, 1) = TPoly::t_power(ey, N);
        Y.at(0, 0) = TPoly::t_power(1 - ex, N);
        Y.at(1, 1) = TPoly::t_power(1 - ey, N);
        if (c != 0) {
            require(ex + ey <= 1, errc::parameter, "twist at a U/U position");
            X.at(1, 0) = TPoly::constant(c, N);
            Y.at(1, 0) = TPoly::t_power(1 - ex - ey, N, -c);
        }
        m.x.push_back(std::move(X));
        m.y.push_back(std::move(Y));
    }
    return m;
}

} // namespace

ExplicitModule module_from_profile(const Rank2Profile& p, int N) {
    std::vector<Box> boxes = decompose_boxes(p);
    require(boxes.size() == 3, errc::not_in_m,
            "module_from_profile needs a 3-box profile, got " + std::to_string(boxes.size()));
    require(p.k_top() == p.k_bottom(), errc::malformed_profile,
            "contours must have equal numbers of down steps");
    require(N > p.n, errc::truncation_too_small, "truncation order must exceed n");

    // zero-sum, all-nonzero twist triples; the box-opening loop degrees are
    // equal, so a constant zero-sum triple cancels the full x-loop exactly
    static const std::array<std::array<int, 3>, 9> kTwistChoices = {{{1, 1, -2},
                                                                     {1, -2, 1},
                                                                     {-2, 1, 1},
                                                                     {1, 2, -3},
                                                                     {2, 1, -3},
                                                                     {2, -3, 1},
                                                                     {-3, 1, 2},
                                                                     {3, -1, -2},
                                                                     {2, 2, -4}}};
    std::string why;
    for (const auto& choice : kTwistChoices) {
        ExplicitModule m = twisted_module(p, N, boxes, choice);
        std::optional<std::string> bad = relations_failure(m);
        if (bad) {
            why = *bad;
            continue;
        }
        if (!(extract_profile(m) == p)) {
            why = "profile extraction mismatch";
            continue;
        }
        if (!is_indecomposable(m)) {
            why = "module decomposed";
            continue;
        }
        return m;
    }
    fail(errc::validation_failure, "no twist choice validated: " + why);
}

Rank2Profile extract_profile(const ExplicitModule& m) {
    require(m.r == 2, errc::parameter, "profile extraction needs a rank-2 module");
    int n = m.spec.n;
    std::string top(n, 'U'), bottom(n, 'U');
    for (int pos = 1; pos <= n; ++pos) {
        const PolyMat& X = m.x[pos - 1];
        require(X.at(0, 1).is_zero(), errc::parameter,
                "profile extraction needs lower-triangular strand form");
        int v_top = X.at(0, 0).valuation();
        int v_bot = X.at(1, 1).valuation();
        std::vector<int> smith = smith_invariants_t(X);
        require(smith.front() >= 0 && smith.back() <= 1, errc::parameter,
                "arrow valuation outside {0,1}: not a two-contour module");
        std::vector<int> diag{std::min(v_top, v_bot), std::max(v_top, v_bot)};
        require(diag == smith, errc::parameter, "triangular diagonal disagrees with smith form");
        top[pos - 1] = v_top == 0 ? 'D' : 'U';
        bottom[pos - 1] = v_bot == 0 ? 'D' : 'U';
    }
    Rank2Profile p = make_rank2_profile(n, std::move(top), std::move(bottom));
    decompose_boxes(p); // validates the packing; box count is the caller's concern
    return p;
}

ExplicitModule stretch_module(const ExplicitModule& m, StretchDir dir, int i) {
    require(1 <= i && i <= m.spec.n + 1, errc::parameter, "stretch position out of range");
    int n = m.spec.n;
    ExplicitModule out{QuiverAlgebraSpec{m.spec.k + (dir == StretchDir::down ? 1 : 0), n + 1},
                       m.N,
                       m.r,
                       {},
                       {}};
    for (int pos = 1; pos <= n + 1; ++pos) {
        if (pos == i) {
            if (dir == StretchDir::up) {
                out.x.push_back(PolyMat::t_identity(m.r, m.N));
                out.y.push_back(PolyMat::identity(m.r, m.N));
            } else {
                out.x.push_back(PolyMat::identity(m.r, m.N));
                out.y.push_back(PolyMat::t_identity(m.r, m.N));
            }
        } else {
            int old_pos = pos < i ? pos : pos - 1;
            out.x.push_back(m.x[old_pos - 1]);
            out.y.push_back(m.y[old_pos - 1]);
        }
    }
    std::optional<std::string> bad = relations_failure(out);
    require(!bad, errc::relation_failure, "stretched module relations: " + bad.value_or(""));
    return out;
}

ExplicitModule direct_sum(const ExplicitModule& a, const ExplicitModule& b) {
    require(a.spec == b.spec && a.N == b.N, errc::spec_mismatch,
            "direct sum needs matching algebra and truncation");
    ExplicitModule out{a.spec, a.N, a.r + b.r, {}, {}};
    for (int pos = 0; pos < a.spec.n; ++pos) {
        PolyMat X(out.r, out.r, a.N), Y(out.r, out.r, a.N);
        for (int i = 0; i < a.r; ++i)
            for (int j = 0; j < a.r; ++j) {
                X.at(i, j) = a.x[pos].at(i, j);
                Y.at(i, j) = a.y[pos].at(i, j);
            }
        for (int i = 0; i < b.r; ++i)
            for (int j = 0; j < b.r; ++j) {
                X.at(a.r + i, a.r + j) = b.x[pos].at(i, j);
                Y.at(a.r + i, a.r + j) = b.y[pos].at(i, j);
            }
        out.x.push_back(std::move(X));
        out.y.push_back(std::move(Y));
    }
    return out;
}

ExplicitModule retruncate(const ExplicitModule& m, int N) {
    ExplicitModule out{m.spec, N, m.r, {}, {}};
    for (int pos = 0; pos < m.spec.n; ++pos) {
        out.x.push_back(m.x[pos].truncated(N));
        out.y.push_back(m.y[pos].truncated(N));
    }
    return out;
}

ModuleCounts enumerate_modules(int k, int n) {
    ModuleCounts counts;
    if (n < 6 || k < 3 || k >= n)
        return counts;
    for (const Rank2Web& w : enumerate_webs(k, n)) {
        ++counts.total;
        if (w.d() == k - 3)
            ++counts.real_root;
    }
    return counts;
}

SweepReport sweep_psi_modules(int k, int n, const std::vector<int>& truncations) {
    std::vector<Rank2Web> webs = enumerate_webs(k, n);
    SweepReport report;
    report.modules = static_cast<long long>(webs.size()) *
                     static_cast<long long>(truncations.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long i = 0; i < static_cast<long long>(webs.size()); ++i) {
        Rank2Profile p = psi(webs[i]);
        for (int N : truncations) {
            std::string failure;
            try {
                module_from_profile(p, N);
            } catch (const error& e) {
                failure = web_key(webs[i]) + " @N=" + std::to_string(N) + ": " + e.what();
            }
            if (!failure.empty()) {
#ifdef _OPENMP
#pragma omp critical
#endif
                report.failures.push_back(failure);
            }
        }
    }
    return report;
}

SweepReport sweep_rank1_modules(int k, int n, const std::vector<int>& truncations) {
    std::vector<int> full(n);
    for (int i = 0; i < n; ++i)
        full[i] = i + 1;
    std::vector<std::vector<int>> subsets = combinations(full, k);
    SweepReport report;
    report.modules = static_cast<long long>(subsets.size()) *
                     static_cast<long long>(truncations.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long i = 0; i < static_cast<long long>(subsets.size()); ++i) {
        for (int N : truncations) {
            std::string failure;
            try {
                module_from_rank1(make_rank1_profile(n, LabelSet(n, subsets[i])), k, N);
            } catch (const error& e) {
                failure = "rank1 @N=" + std::to_string(N) + ": " + e.what();
            }
            if (!failure.empty()) {
#ifdef _OPENMP
#pragma omp critical
#endif
                report.failures.push_back(failure);
            }
        }
    }
    return report;
}

} // namespace wcm
