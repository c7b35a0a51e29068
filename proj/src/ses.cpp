#include "wcm/ses.hpp"

#include <algorithm>

namespace wcm {

int SesSide::ambient() const {
    switch (kind) {
    case Kind::profile: return prof.n;
    case Kind::pair: return first.n;
    case Kind::single: return first.n;
    }
    return 0;
}

int SesSide::rank() const {
    return kind == Kind::profile ? 2 : (kind == Kind::pair ? 2 : 1);
}

LabelSet SesSide::used() const {
    switch (kind) {
    case Kind::profile: return set_union(prof.top_set(), prof.bottom_set());
    case Kind::pair: return set_union(first, second);
    case Kind::single: return first;
    }
    return LabelSet(0, {});
}

SesSide side_of_tcfr(int k, int a, int d, int b, int c) {
    FunctionExpr e = make_tcfr(k, a, d, b, c);
    require(e.terms.size() == 1, errc::parameter, "tcfr expression must be one term");
    const auto& factors = e.terms[0].factors;
    SesSide side;
    if (factors.size() == 2) {
        side.kind = SesSide::Kind::pair;
        side.first = std::get<Rank1Web>(factors[0]).leaves;
        side.second = std::get<Rank1Web>(factors[1]).leaves;
        return side;
    }
    if (std::holds_alternative<Rank1Web>(factors[0])) {
        side.kind = SesSide::Kind::single;
        side.first = std::get<Rank1Web>(factors[0]).leaves;
        return side;
    }
    side.kind = SesSide::Kind::profile;
    side.prof = psi(std::get<Rank2Web>(factors[0]));
    return side;
}

SesSide reduce_side(const SesSide& s, const std::vector<int>& positions) {
    SesSide out = s;
    switch (s.kind) {
    case SesSide::Kind::profile: out.prof = delete_positions(s.prof, positions); break;
    case SesSide::Kind::pair:
        out.first = delete_positions(s.first, positions);
        out.second = delete_positions(s.second, positions);
        break;
    case SesSide::Kind::single: out.first = delete_positions(s.first, positions); break;
    }
    return out;
}

std::vector<int> unused_positions(int n, const std::vector<SesSide>& sides) {
    std::vector<bool> used(n + 1, false);
    for (const SesSide& s : sides)
        for (int x : s.used().elems)
            used[x] = true;
    std::vector<int> out;
    for (int x = 1; x <= n; ++x)
        if (!used[x])
            out.push_back(x);
    return out;
}

ExplicitModule build_side(const SesSide& s, int k, int N) {
    switch (s.kind) {
    case SesSide::Kind::profile: return module_from_profile(s.prof, N);
    case SesSide::Kind::pair:
        return direct_sum(module_from_rank1(make_rank1_profile(s.first.n, s.first), k, N),
                          module_from_rank1(make_rank1_profile(s.second.n, s.second), k, N));
    case SesSide::Kind::single:
        return module_from_rank1(make_rank1_profile(s.first.n, s.first), k, N);
    }
    fail(errc::parameter, "unknown side kind");
}

namespace {

// independent recheck that f commutes with every arrow (the solver built it,
// but certificates should not lean on the solver)
bool commutes(const ExplicitModule& m, const ExplicitModule& mp, const ModuleHom& f) {
    for (int p = 1; p <= m.spec.n; ++p) {
        int src = m.src_index(p), dst = m.dst_index(p);
        if (!(f[dst] * m.x[p - 1] == mp.x[p - 1] * f[src]))
            return false;
        if (!(f[src] * m.y[p - 1] == mp.y[p - 1] * f[dst]))
            return false;
    }
    return true;
}

bool injective_everywhere(const ModuleHom& f, int r_src) {
    for (const PolyMat& mat : f) {
        std::vector<int> vals;
        try {
            vals = smith_invariants_t(mat);
        } catch (const error&) {
            return false; // a column died entirely: valuations at truncation
        }
        if (static_cast<int>(vals.size()) < r_src)
            return false;
        // need r_src zero valuations so the image is a free direct summand
        int zeros = static_cast<int>(std::count(vals.begin(), vals.end(), 0));
        if (zeros < r_src)
            return false;
    }
    return true;
}

} // namespace

SesReport verify_ses_modules(const std::string& name, const ExplicitModule& L,
                             const ExplicitModule& M1, const ExplicitModule& M2,
                             const ExplicitModule& T, std::uint64_t seed, int tries) {
    SesReport report;
    report.name = name;
    ExplicitModule mid = direct_sum(M1, M2);
    int n = mid.spec.n, N = mid.N;
    require(N > n, errc::truncation_too_small, "need N > n for the artifact-free window");

    std::vector<ModuleHom> H = hom_space(L, mid);
    report.hom_dim = static_cast<int>(H.size());
    if (H.empty()) {
        report.message = "Hom(L, M1+M2) is zero";
        return report;
    }

    Rng rng(seed);
    ModuleHom f;
    std::vector<Rat> coeffs(H.size());
    bool found = false;
    for (int t = 0; t < tries && !found; ++t) {
        for (Rat& c : coeffs)
            c = rng.range(-3, 3);
        f = hom_combo(H, coeffs);
        found = injective_everywhere(f, L.r);
    }
    if (!found) {
        report.message = "no injective combination found in Hom(L, M1+M2)";
        return report;
    }
    if (!commutes(L, mid, f)) {
        report.message = "certificate recheck failed: f does not commute with the arrows";
        return report;
    }
    report.f = f;
    report.f_coeffs = coeffs;

    // cokernel: per vertex pick pivot rows with a unit minor; the projection
    // sends w to w_C - F_C F_P^{-1} w_P on the complementary rows
    int rQ = mid.r - L.r;
    ExplicitModule Q{mid.spec, N, rQ, {}, {}};
    std::vector<std::vector<int>> comp_rows(n);
    std::vector<PolyMat> projs(n), sects(n);
    for (int v = 0; v < n; ++v) {
        QMatrix c0 = f[v].constant_term();
        // greedy pivot rows by elimination on the constant term
        std::vector<int> piv;
        QMatrix work = c0;
        for (int ccol = 0; ccol < L.r; ++ccol) {
            int p = -1;
            for (int rrow = 0; rrow < mid.r; ++rrow) {
                if (std::find(piv.begin(), piv.end(), rrow) != piv.end())
                    continue;
                if (work.at(rrow, ccol) != 0) {
                    p = rrow;
                    break;
                }
            }
            require(p >= 0, errc::rank_degenerate, "lost injectivity while pivoting");
            for (int rrow = 0; rrow < mid.r; ++rrow) {
                if (rrow == p || work.at(rrow, ccol) == 0)
                    continue;
                Rat fac = work.at(rrow, ccol) / work.at(p, ccol);
                for (int j = 0; j < L.r; ++j)
                    work.at(rrow, j) -= fac * work.at(p, j);
            }
            piv.push_back(p);
        }
        std::sort(piv.begin(), piv.end());
        std::vector<int> comp;
        for (int rrow = 0; rrow < mid.r; ++rrow)
            if (std::find(piv.begin(), piv.end(), rrow) == piv.end())
                comp.push_back(rrow);
        comp_rows[v] = comp;

        PolyMat FP(L.r, L.r, N), FC(rQ, L.r, N);
        for (int i = 0; i < L.r; ++i)
            for (int j = 0; j < L.r; ++j)
                FP.at(i, j) = f[v].at(piv[i], j);
        for (int i = 0; i < rQ; ++i)
            for (int j = 0; j < L.r; ++j)
                FC.at(i, j) = f[v].at(comp[i], j);
        PolyMat FCFPi = FC * unit_inverse(FP);
        PolyMat proj(rQ, mid.r, N);
        for (int i = 0; i < rQ; ++i)
            proj.at(i, comp[i]) = TPoly::constant(1, N);
        for (int i = 0; i < rQ; ++i)
            for (int j = 0; j < L.r; ++j)
                proj.at(i, piv[j]) = proj.at(i, piv[j]) - FCFPi.at(i, j);
        PolyMat sect(mid.r, rQ, N);
        for (int i = 0; i < rQ; ++i)
            sect.at(comp[i], i) = TPoly::constant(1, N);
        projs[v] = std::move(proj);
        sects[v] = std::move(sect);
    }
    for (int p = 1; p <= n; ++p) {
        int src = mid.src_index(p), dst = mid.dst_index(p);
        Q.x.push_back(projs[dst] * mid.x[p - 1] * sects[src]);
        Q.y.push_back(projs[src] * mid.y[p - 1] * sects[dst]);
    }
    report.proj = projs;

    // free cokernel at every vertex (unit minors) means per-vertex dimension
    // additivity holds degree by degree: rL + rQ = rM1 + rM2 copies of Q[t]/t^N
    report.dims_ok = (L.r + rQ == M1.r + M2.r);

    // compare away from the truncation boundary
    int Nred = N - n;
    ExplicitModule Qr = retruncate(Q, Nred);
    std::optional<std::string> bad = relations_failure(Qr);
    if (bad) {
        report.message = "cokernel relations fail: " + *bad;
        return report;
    }
    ExplicitModule Tr = retruncate(T, Nred);
    std::vector<ModuleHom> HQ = hom_space(Qr, Tr);
    if (HQ.empty()) {
        report.message = "cokernel mismatch: Hom(coker, target) is zero";
        return report;
    }
    std::vector<Rat> icoeffs(HQ.size());
    for (int t = 0; t < tries; ++t) {
        for (Rat& c : icoeffs)
            c = rng.range(-3, 3);
        ModuleHom g = hom_combo(HQ, icoeffs);
        bool invertible = true;
        for (int v = 0; v < n && invertible; ++v)
            invertible = det(g[v].constant_term()) != 0;
        if (invertible) {
            if (!commutes(Qr, Tr, g)) {
                report.message = "certificate recheck failed: iso does not commute";
                return report;
            }
            report.iso = g;
            report.ok = true;
            return report;
        }
    }
    report.message = "cokernel mismatch: no invertible hom to the target";
    return report;
}

SesCaseReport verify_ses(const std::string& name, const std::array<SesSide, 4>& sides, int k,
                         int N, std::uint64_t seed) {
    SesCaseReport out;
    out.name = name;
    int n = sides[0].ambient();
    auto run_at = [&](int order) {
        return verify_ses_modules(name + " @N=" + std::to_string(order),
                                  build_side(sides[0], k, order), build_side(sides[1], k, order),
                                  build_side(sides[2], k, order), build_side(sides[3], k, order),
                                  seed);
    };
    out.base = run_at(N);
    out.stable = run_at(N + n);
    out.ok = out.base.ok && out.stable.ok;
    return out;
}

std::array<std::array<SesSide, 4>, 2> ses_sides_for_mutation(int k, int a, int d, int b, int c) {
    SesSide lhs = side_of_tcfr(k, a, d, b, c);
    SesSide target = side_of_tcfr(k, a - 1, d - 1, b + 1, c + 1);
    SesSide m1a = side_of_tcfr(k, a - 1, d, b, c + 1);
    SesSide m1b = side_of_tcfr(k, a, d - 1, b + 1, c);
    SesSide m2a = side_of_tcfr(k, a - 1, d, b + 1, c);
    SesSide m2b = side_of_tcfr(k, a, d - 1, b, c + 1);
    return {std::array<SesSide, 4>{lhs, m1a, m1b, target},
            std::array<SesSide, 4>{target, m2a, m2b, lhs}};
}

SesSuiteReport run_ses_chain(int k, int truncation, std::uint64_t seed) {
    SesSuiteReport suite;
    std::uint64_t salt = 0;
    for (const auto& [a, d, b, c] : cactus_cases(k)) {
        auto seqs = ses_sides_for_mutation(k, a, d, b, c);
        std::string base = "k=" + std::to_string(k) + " (" + std::to_string(a) + "," +
                           std::to_string(d) + ";" + std::to_string(b) + ";" + std::to_string(c) +
                           ")";
        for (int s = 0; s < 2; ++s) {
            SesCaseReport r = verify_ses(base + " seq" + std::to_string(s + 1), seqs[s], k,
                                         truncation, seed + 101 * (++salt));
            suite.ok = suite.ok && r.ok;
            suite.cases.push_back(std::move(r));
        }
    }
    return suite;
}

SesSuiteReport run_ses_case(int k, int a, int d, int b, int c, int truncation, std::uint64_t seed,
                            bool reduce) {
    SesSuiteReport suite;
    auto seqs = ses_sides_for_mutation(k, a, d, b, c);
    if (reduce) {
        std::vector<SesSide> all(seqs[0].begin(), seqs[0].end());
        all.insert(all.end(), seqs[1].begin(), seqs[1].end());
        std::vector<int> cut = unused_positions(3 * (k - 1), all);
        for (auto& seq : seqs)
            for (SesSide& s : seq)
                s = reduce_side(s, cut);
    }
    int n_eff = seqs[0][0].ambient();
    if (truncation <= 0)
        truncation = default_truncation(n_eff);
    std::string base = "k=" + std::to_string(k) + " (" + std::to_string(a) + "," +
                       std::to_string(d) + ";" + std::to_string(b) + ";" + std::to_string(c) + ")" +
                       (reduce ? " reduced" : "");
    for (int s = 0; s < 2; ++s) {
        SesCaseReport r =
            verify_ses(base + " seq" + std::to_string(s + 1), seqs[s], k, truncation, seed + s);
        suite.ok = suite.ok && r.ok;
        suite.cases.push_back(std::move(r));
    }
    return suite;
}

} // namespace wcm
