#include "wcm/identity.hpp"

#include <algorithm>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wcm {

namespace {

struct WebTable {
    std::vector<Web> webs;
    std::vector<std::string> keys;
    std::map<std::string, int> index;

    int intern(const Web& w) {
        std::string key = web_key(w);
        auto it = index.find(key);
        if (it != index.end())
            return it->second;
        int id = static_cast<int>(webs.size());
        webs.push_back(w);
        keys.push_back(key);
        index.emplace(std::move(key), id);
        return id;
    }
};

} // namespace

IdentityReport verify_identity(const std::string& name, const FunctionExpr& e, int samples,
                               std::uint64_t seed, SignContext& ctx) {
    IdentityReport report;
    report.name = name;
    report.samples = samples;

    WebTable table;
    struct TermIdx {
        Rat coef;
        std::vector<int> webs;
    };
    std::vector<TermIdx> terms;
    for (const auto& term : e.terms) {
        TermIdx ti{term.coef, {}};
        for (const Web& w : term.factors)
            ti.webs.push_back(table.intern(w));
        terms.push_back(std::move(ti));
    }
    int W = static_cast<int>(table.webs.size());

    // seeded sample points, then exact values of every web at every point
    Rng rng(seed);
    std::vector<GrassPoint> points;
    points.reserve(samples);
    for (int s = 0; s < samples; ++s)
        points.push_back(random_point(e.k, e.n, rng));
    std::vector<std::vector<Rat>> vals(samples, std::vector<Rat>(W));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int s = 0; s < samples; ++s)
        for (int w = 0; w < W; ++w)
            vals[s][w] = eval_web(table.webs[w], points[s]);

    int calib = -1;
    for (int s = 0; s < samples; ++s) {
        bool generic = true;
        for (int w = 0; w < W; ++w)
            if (vals[s][w] == 0) {
                generic = false;
                break;
            }
        if (generic) {
            calib = s;
            break;
        }
    }
    if (calib < 0) {
        report.message = "no generic sample point (some web vanished everywhere)";
        return report;
    }

    auto signed_value = [&](int s, const std::vector<int>& sgn) {
        Rat total = 0;
        for (const TermIdx& t : terms) {
            Rat v = t.coef;
            for (int w : t.webs) {
                if (sgn[w] < 0)
                    v = -v;
                v *= vals[s][w];
                if (v == 0)
                    break;
            }
            total += v;
        }
        return total;
    };

    // phase 1 keeps rank-1 webs at the fixed Pluecker convention (+1);
    // phase 2 frees the still-uncalibrated ones only if phase 1 fails
    std::vector<int> sgn(W, 0);
    for (int w = 0; w < W; ++w) {
        auto it = ctx.signs.find(table.keys[w]);
        if (it != ctx.signs.end())
            sgn[w] = it->second;
        else if (std::holds_alternative<Rank1Web>(table.webs[w]))
            sgn[w] = 1; // provisional; may be freed in phase 2
    }
    bool found = false;
    for (int phase = 1; phase <= 2 && !found; ++phase) {
        std::vector<int> free_webs;
        std::vector<int> base = sgn;
        for (int w = 0; w < W; ++w) {
            bool fixed_in_ctx = ctx.signs.count(table.keys[w]) != 0;
            bool plucker = std::holds_alternative<Rank1Web>(table.webs[w]);
            if (!fixed_in_ctx && (phase == 2 || !plucker))
                free_webs.push_back(w);
            if (!fixed_in_ctx && phase == 2 && plucker)
                base[w] = 0;
        }
        if (free_webs.size() > 20) {
            report.message = "too many uncalibrated webs";
            return report;
        }
        for (std::uint64_t mask = 0; mask < (1ULL << free_webs.size()); ++mask) {
            std::vector<int> trial = base;
            for (size_t j = 0; j < free_webs.size(); ++j)
                trial[free_webs[j]] = (mask >> j) & 1 ? -1 : 1;
            if (signed_value(calib, trial) == 0) {
                sgn = trial;
                found = true;
                break;
            }
        }
    }
    if (!found) {
        report.message = "no consistent sign assignment at the calibration point";
        for (int w = 0; w < W; ++w)
            report.signs[table.keys[w]] = 0;
        return report;
    }

    for (int s = 0; s < samples; ++s) {
        if (signed_value(s, sgn) != 0) {
            std::ostringstream os;
            os << "nonzero residual at sample " << s;
            report.message = os.str();
            return report;
        }
    }

    for (int w = 0; w < W; ++w) {
        report.signs[table.keys[w]] = sgn[w];
        ctx.signs.emplace(table.keys[w], sgn[w]);
    }
    report.ok = true;
    return report;
}

std::vector<std::array<int, 4>> cactus_cases(int k) {
    std::vector<std::array<int, 4>> cases;
    for (int a = 1; a <= k; ++a)
        for (int d = 1; d < a; ++d)
            for (int b = 0; b <= k; ++b) {
                int c = 2 * k - a - b - d;
                if (c < 0 || c > k)
                    continue;
                bool ok = tcfr_admissible(k, a, d, b, c) &&
                          tcfr_admissible(k, a - 1, d - 1, b + 1, c + 1) &&
                          tcfr_admissible(k, a - 1, d, b + 1, c) &&
                          tcfr_admissible(k, a, d - 1, b, c + 1) &&
                          tcfr_admissible(k, a - 1, d, b, c + 1) &&
                          tcfr_admissible(k, a, d - 1, b + 1, c);
                if (ok)
                    cases.push_back({a, d, b, c});
            }
    return cases;
}

FunctionExpr cactus_identity_expr(int k, int a, int d, int b, int c) {
    FunctionExpr lhs = make_tcfr(k, a, d, b, c) * make_tcfr(k, a - 1, d - 1, b + 1, c + 1);
    FunctionExpr t1 = make_tcfr(k, a - 1, d, b + 1, c) * make_tcfr(k, a, d - 1, b, c + 1);
    FunctionExpr t2 = make_tcfr(k, a - 1, d, b, c + 1) * make_tcfr(k, a, d - 1, b + 1, c);
    return lhs - t1 - t2;
}

namespace {

LabelSet range_union(int n, std::initializer_list<std::pair<int, int>> ranges) {
    std::vector<int> v;
    for (auto [from, to] : ranges)
        for (int x = from; x <= to; ++x)
            v.push_back(x);
    return LabelSet(n, std::move(v));
}

} // namespace

FunctionExpr deg1_expr(int k, int a, int d) {
    int b = k - a, c = k - d, n = 3 * (k - 1);
    Rank2Web lhs = tcfr_web(k, a, d, b, c);
    require(lhs.beta == 0, errc::parameter, "deg1 needs beta = 0");
    FunctionExpr e(k, n);
    e.add_term(1, {Web(lhs)});
    e.add_term(-1, {Web(make_rank1_web(k, n, range_union(n, {{1, a}, {k, k + b - 1}}))),
                    Web(make_rank1_web(k, n, range_union(n, {{1, d}, {2 * k - 1, 2 * k + c - 2}})))});
    return e;
}

FunctionExpr deg2_expr(int k, int a, int d) {
    int b = k - d, c = k - a, n = 3 * (k - 1);
    Rank2Web lhs = tcfr_web(k, a, d, b, c);
    require(lhs.alpha == 0, errc::parameter, "deg2 needs alpha = 0");
    FunctionExpr e(k, n);
    e.add_term(1, {Web(lhs)});
    e.add_term(-1, {Web(make_rank1_web(k, n, range_union(n, {{1, a}, {2 * k - 1, 2 * k + c - 2}}))),
                    Web(make_rank1_web(k, n, range_union(n, {{1, d}, {k, k + b - 1}})))});
    return e;
}

SuiteReport run_identity_suite(int k, int samples, std::uint64_t seed) {
    SuiteReport suite;
    SignContext ctx;
    std::uint64_t salt = 0;
    auto run = [&](const std::string& name, const FunctionExpr& e) {
        IdentityReport r = verify_identity(name, e, samples, seed + 7919 * (++salt), ctx);
        suite.ok = suite.ok && r.ok;
        suite.identities.push_back(std::move(r));
    };
    for (int d = 1; d < k; ++d)
        for (int a = d + 1; a < k; ++a) {
            if (k - a >= 1 && tcfr_admissible(k, a, d, k - a, k - d))
                run("degeneracy-1 (" + std::to_string(a) + "," + std::to_string(d) + ";" +
                        std::to_string(k - a) + ";" + std::to_string(k - d) + ")",
                    deg1_expr(k, a, d));
            if (k - a >= 1 && tcfr_admissible(k, a, d, k - d, k - a))
                run("degeneracy-2 (" + std::to_string(a) + "," + std::to_string(d) + ";" +
                        std::to_string(k - d) + ";" + std::to_string(k - a) + ")",
                    deg2_expr(k, a, d));
        }
    for (const auto& [a, d, b, c] : cactus_cases(k)) {
        std::string name = "cactus (" + std::to_string(a) + "," + std::to_string(d) + ";" +
                           std::to_string(b) + ";" + std::to_string(c) + ")";
        if (a == k)
            name += " [degeneracy-3 replacement]";
        run(name, cactus_identity_expr(k, a, d, b, c));
    }
    return suite;
}

} // namespace wcm
