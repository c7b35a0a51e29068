#include "wcm/webs.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wcm {

Rank1Web make_rank1_web(int k, int n, LabelSet leaves) {
    require(leaves.n == n, errc::ambient_mismatch, "rank-1 web ambient mismatch");
    require(leaves.size() == k, errc::size, "rank-1 web needs exactly k leaves");
    require(k <= n, errc::size, "rank-1 web needs k <= n");
    return Rank1Web{k, n, std::move(leaves)};
}

Rank2Web make_rank2_web(int k, int n, LabelSet R, LabelSet S, LabelSet T, LabelSet V) {
    require(R.n == n && S.n == n && T.n == n && V.n == n, errc::ambient_mismatch,
            "rank-2 web ambient mismatch");
    require(!R.empty() && !S.empty() && !T.empty(), errc::size, "R, S, T must be nonempty");
    int a = R.size(), b = S.size(), c = T.size(), d = V.size();
    require((a + b + c) % 2 == 0, errc::parity, "a+b+c must be even");
    require(a + b + c + 2 * d == 2 * k, errc::size, "a+b+c+2d must equal 2k");
    require(separation_start(R, S, T).has_value(), errc::separation,
            "R, S, T are not cyclically separated in this order");
    LabelSet rst = set_union(set_union(R, S), T);
    require(disjoint(V, rst), errc::disjointness, "V must be disjoint from R, S, T");
    int alpha2 = a - b + c, beta2 = a + b - c, gamma2 = -a + b + c;
    require(alpha2 >= 0 && beta2 >= 0 && gamma2 >= 0, errc::negative_box,
            "a, b, c violate the triangle inequality");
    Rank2Web w{k, n, std::move(R), std::move(S), std::move(T), std::move(V),
               alpha2 / 2,        beta2 / 2,     gamma2 / 2};
    return w;
}

bool in_family(const Rank2Web& w) {
    return w.alpha >= 1 && w.beta >= 1 && w.gamma >= 1;
}

bool Rank2Web::operator<(const Rank2Web& o) const {
    if (R < o.R || o.R < R)
        return R < o.R;
    if (S < o.S || o.S < S)
        return S < o.S;
    if (T < o.T || o.T < T)
        return T < o.T;
    return V < o.V;
}

Rank2Web canonicalize(const Rank2Web& w) {
    Rank2Web r1 = make_rank2_web(w.k, w.n, w.S, w.T, w.R, w.V);
    Rank2Web r2 = make_rank2_web(w.k, w.n, w.T, w.R, w.S, w.V);
    const Rank2Web* best = &w;
    if (r1 < *best)
        best = &r1;
    if (r2 < *best)
        best = &r2;
    return *best;
}

bool is_canonical(const Rank2Web& w) {
    return canonicalize(w) == w;
}

namespace {

// canonical webs on a fixed support (as a cyclically ordered point list) for
// one ordered size triple (a,b,c)
void emit_on_support(int k, int n, const std::vector<int>& pts, int a, int b, int c, int d,
                     const std::vector<int>& rest, std::vector<Rank2Web>& out) {
    int m = static_cast<int>(pts.size());
    auto arc = [&](int start, int len) {
        std::vector<int> v(len);
        for (int j = 0; j < len; ++j)
            v[j] = pts[(start + j) % m];
        return LabelSet(n, std::move(v));
    };
    auto triple_less = [](const LabelSet& r1, const LabelSet& s1, const LabelSet& t1,
                          const LabelSet& r2, const LabelSet& s2, const LabelSet& t2) {
        if (!(r1 == r2))
            return r1 < r2;
        if (!(s1 == s2))
            return s1 < s2;
        return t1 < t2;
    };
    for (int s = 0; s < m; ++s) {
        LabelSet R = arc(s, a), S = arc(s + a, b), T = arc(s + a + b, c);
        // each web arises from exactly three (sizes, start) pairs across the
        // class sweep; keeping the lex-least rotation dedups globally
        if (triple_less(S, T, R, R, S, T) || triple_less(T, R, S, R, S, T))
            continue;
        if (d == 0) {
            out.push_back(make_rank2_web(k, n, R, S, T, LabelSet(n, {})));
        } else {
            for (auto& vsel : combinations(rest, d))
                out.push_back(make_rank2_web(k, n, R, S, T, LabelSet(n, vsel)));
        }
    }
}

} // namespace

std::vector<Rank2Web> enumerate_webs(int k, int n) {
    require(3 <= k && k < n, errc::parameter, "enumeration needs 3 <= k < n");
    // classes first: each ordered (alpha,beta,gamma) >= 1 gives one ordered
    // size triple (a,b,c)
    struct Cls {
        int a, b, c, d, m;
    };
    std::vector<Cls> classes;
    for (int alpha = 1; alpha <= k; ++alpha)
        for (int beta = 1; beta <= k; ++beta)
            for (int gamma = 1; gamma <= k; ++gamma) {
                int sum = alpha + beta + gamma;
                if (sum > k)
                    continue;
                int d = k - sum;
                int m = 2 * sum;
                if (m + d > n)
                    continue;
                classes.push_back({alpha + beta, beta + gamma, gamma + alpha, d, m});
            }
    std::sort(classes.begin(), classes.end(), [](const Cls& x, const Cls& y) {
        return std::tie(x.m, x.a, x.b, x.c) < std::tie(y.m, y.a, y.b, y.c);
    });

    std::vector<Rank2Web> all;
    std::vector<int> full(n);
    for (int i = 0; i < n; ++i)
        full[i] = i + 1;
    for (const Cls& cl : classes) {
        auto supports = combinations(full, cl.m);
        std::vector<std::vector<Rank2Web>> buckets(supports.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (long long si = 0; si < static_cast<long long>(supports.size()); ++si) {
            const auto& pts = supports[si];
            std::vector<int> rest;
            rest.reserve(n - cl.m);
            std::set_difference(full.begin(), full.end(), pts.begin(), pts.end(),
                                std::back_inserter(rest));
            emit_on_support(k, n, pts, cl.a, cl.b, cl.c, cl.d, rest, buckets[si]);
        }
        for (auto& bucket : buckets)
            for (auto& w : bucket)
                all.push_back(std::move(w));
    }
    return all;
}

std::map<ClassKey, long long> count_by_class(const std::vector<Rank2Web>& webs) {
    std::map<ClassKey, long long> table;
    for (const Rank2Web& w : webs) {
        std::array<int, 3> abc{w.a(), w.b(), w.c()};
        std::sort(abc.begin(), abc.end(), std::greater<>());
        ++table[ClassKey{abc, w.d()}];
    }
    return table;
}

std::map<ClassKey, long long> count_by_class(int k, int n) {
    return count_by_class(enumerate_webs(k, n));
}

Rank1Web stretch_web(const Rank1Web& w, StretchDir dir, int i) {
    LabelSet leaves = shift_set(w.leaves, i);
    if (dir == StretchDir::up)
        return make_rank1_web(w.k, w.n + 1, std::move(leaves));
    std::vector<int> v = leaves.elems;
    v.push_back(i);
    return make_rank1_web(w.k + 1, w.n + 1, LabelSet(w.n + 1, std::move(v)));
}

Rank2Web stretch_web(const Rank2Web& w, StretchDir dir, int i) {
    LabelSet R = shift_set(w.R, i), S = shift_set(w.S, i), T = shift_set(w.T, i);
    LabelSet V = shift_set(w.V, i);
    if (dir == StretchDir::down) {
        std::vector<int> v = V.elems;
        v.push_back(i);
        V = LabelSet(w.n + 1, std::move(v));
        return make_rank2_web(w.k + 1, w.n + 1, std::move(R), std::move(S), std::move(T),
                              std::move(V));
    }
    return make_rank2_web(w.k, w.n + 1, std::move(R), std::move(S), std::move(T), std::move(V));
}

namespace {
std::string set_str(const LabelSet& s) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < s.elems.size(); ++i)
        os << (i ? "," : "") << s.elems[i];
    os << "}";
    return os.str();
}
} // namespace

std::string web_key(const Rank1Web& w) {
    std::ostringstream os;
    os << "r1[" << w.k << "," << w.n << "]" << set_str(w.leaves);
    return os.str();
}

std::string web_key(const Rank2Web& w) {
    Rank2Web c = canonicalize(w);
    std::ostringstream os;
    os << "r2[" << c.k << "," << c.n << "]" << set_str(c.R) << set_str(c.S) << set_str(c.T)
       << set_str(c.V);
    return os.str();
}

namespace ref {

std::vector<Rank2Web> enumerate_webs(int k, int n) {
    require(n <= 16, errc::parameter, "reference enumerator is for small n");
    std::set<Rank2Web> found;
    // every assignment of {R,S,T,none} to the n positions
    std::vector<int> color(n, 0);
    while (true) {
        std::vector<int> r, s, t, none;
        for (int i = 0; i < n; ++i) {
            switch (color[i]) {
            case 0: none.push_back(i + 1); break;
            case 1: r.push_back(i + 1); break;
            case 2: s.push_back(i + 1); break;
            default: t.push_back(i + 1); break;
            }
        }
        if (!r.empty() && !s.empty() && !t.empty()) {
            int a = (int)r.size(), b = (int)s.size(), c = (int)t.size();
            int rem = 2 * k - a - b - c;
            if (rem >= 0 && rem % 2 == 0) {
                int d = rem / 2;
                LabelSet R(n, r), S(n, s), T(n, t);
                if (separation_start(R, S, T).has_value()) {
                    int alpha2 = a - b + c, beta2 = a + b - c, gamma2 = -a + b + c;
                    if (alpha2 >= 2 && beta2 >= 2 && gamma2 >= 2) {
                        for (auto& vsel : combinations(none, d)) {
                            Rank2Web w = make_rank2_web(k, n, R, S, T, LabelSet(n, vsel));
                            found.insert(canonicalize(w));
                        }
                    }
                }
            }
        }
        int i = n - 1;
        while (i >= 0 && color[i] == 3)
            color[i--] = 0;
        if (i < 0)
            break;
        ++color[i];
    }
    return {found.begin(), found.end()};
}

} // namespace ref

} // namespace wcm
