#include "wcm/expr.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace wcm {

std::string web_key(const TripodWeb& w) {
    std::ostringstream os;
    os << "t[" << w.k << "," << w.n << "]";
    for (const auto* L : {&w.L1, &w.L2, &w.L3}) {
        os << "(";
        for (size_t i = 0; i < L->size(); ++i)
            os << (i ? "," : "") << (*L)[i];
        os << ")";
    }
    return os.str();
}

std::string web_key(const Web& w) {
    return std::visit([](const auto& v) { return web_key(v); }, w);
}

int web_k(const Web& w) {
    return std::visit([](const auto& v) { return v.k; }, w);
}

int web_n(const Web& w) {
    return std::visit([](const auto& v) { return v.n; }, w);
}

void FunctionExpr::add_term(const Rat& coef, std::vector<Web> factors) {
    for (const Web& w : factors) {
        require(web_k(w) == k && web_n(w) == n, errc::ambient_mismatch,
                "expression factors must share (k,n)");
    }
    terms.push_back(Term{coef, std::move(factors)});
}

FunctionExpr FunctionExpr::operator*(const FunctionExpr& o) const {
    require(k == o.k && n == o.n, errc::ambient_mismatch, "expression product (k,n) mismatch");
    FunctionExpr out(k, n);
    for (const Term& s : terms)
        for (const Term& t : o.terms) {
            std::vector<Web> f = s.factors;
            f.insert(f.end(), t.factors.begin(), t.factors.end());
            out.terms.push_back(Term{s.coef * t.coef, std::move(f)});
        }
    return out;
}

FunctionExpr FunctionExpr::operator+(const FunctionExpr& o) const {
    require(k == o.k && n == o.n, errc::ambient_mismatch, "expression sum (k,n) mismatch");
    FunctionExpr out = *this;
    out.terms.insert(out.terms.end(), o.terms.begin(), o.terms.end());
    return out;
}

FunctionExpr FunctionExpr::operator-(const FunctionExpr& o) const {
    require(k == o.k && n == o.n, errc::ambient_mismatch, "expression difference (k,n) mismatch");
    FunctionExpr out = *this;
    for (const Term& t : o.terms) {
        out.terms.push_back(t);
        out.terms.back().coef = -out.terms.back().coef;
    }
    return out;
}

namespace {

std::vector<int> seq(int from, int to) { // inclusive; empty when to < from
    std::vector<int> v;
    for (int x = from; x <= to; ++x)
        v.push_back(x);
    return v;
}

// Plucker subset of the rank-1 function tcfr(a;b;c), a+b+c = k
LabelSet tcfr_rank1_set(int k, int a, int b, int c) {
    int n = 3 * (k - 1);
    std::vector<int> v = seq(1, a);
    auto s = seq(k, k + b - 1), t = seq(2 * k - 1, 2 * k + c - 2);
    v.insert(v.end(), s.begin(), s.end());
    v.insert(v.end(), t.begin(), t.end());
    return LabelSet(n, std::move(v));
}

// Universal constraints only; each case's set constructors catch the rest
// (subset ranges, collisions) with their own named errors.
void check_tcfr_params(int k, int a, int d, int b, int c) {
    require(k >= 2, errc::parameter, "tcfr needs k >= 2");
    require(a <= k && b <= k && c <= k && d <= k, errc::parameter, "tcfr needs a,b,c,d <= k");
    require(d >= 0 && b >= 0 && c >= 0, errc::parameter, "tcfr needs nonnegative parameters");
    require(a > d, errc::parameter, "tcfr needs a > d");
    require(a + b + c + d == 2 * k, errc::parameter, "tcfr needs a+b+c+d = 2k");
    int aw = a - d;
    require(std::abs(b - c) <= aw && aw <= b + c, errc::parameter,
            "tcfr needs a-d, b, c to satisfy the triangle inequality");
}

} // namespace

bool tcfr_admissible(int k, int a, int d, int b, int c) {
    try {
        make_tcfr(k, a, d, b, c);
        return true;
    } catch (const error&) {
        return false;
    }
}

Rank2Web tcfr_web(int k, int a, int d, int b, int c) {
    check_tcfr_params(k, a, d, b, c);
    int n = 3 * (k - 1);
    return make_rank2_web(k, n, LabelSet(n, seq(d + 1, a)), LabelSet(n, seq(k, k + b - 1)),
                          LabelSet(n, seq(2 * k - 1, 2 * k + c - 2)), LabelSet(n, seq(1, d)));
}

FunctionExpr make_tcfr(int k, int a, int d, int b, int c) {
    check_tcfr_params(k, a, d, b, c);
    int n = 3 * (k - 1);
    int aw = a - d;
    // aw+b+c = 2(k-d), so aw-b+c and aw+b-c are automatically even
    int alpha = (aw - b + c) / 2, beta = (aw + b - c) / 2;
    FunctionExpr e(k, n);
    if (a == k) {
        // gamma = 0 boundary: the function is the Plucker tcfr(d; b; c)
        e.add_term(1, {Web(make_rank1_web(k, n, tcfr_rank1_set(k, d, b, c)))});
        return e;
    }
    if (beta == 0) {
        // a+b = c+d = k: product tcfr(a;b;-) * tcfr(d;-;c)
        e.add_term(1, {Web(make_rank1_web(k, n, tcfr_rank1_set(k, a, b, 0))),
                       Web(make_rank1_web(k, n, tcfr_rank1_set(k, d, 0, c)))});
        return e;
    }
    if (alpha == 0) {
        // a+c = b+d = k: product tcfr(a;-;c) * tcfr(d;b;-)
        e.add_term(1, {Web(make_rank1_web(k, n, tcfr_rank1_set(k, a, 0, c))),
                       Web(make_rank1_web(k, n, tcfr_rank1_set(k, d, b, 0)))});
        return e;
    }
    e.add_term(1, {Web(tcfr_web(k, a, d, b, c))});
    return e;
}

} // namespace wcm
