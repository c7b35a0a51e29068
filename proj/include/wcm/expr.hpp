#pragma once

#include <variant>
#include <vector>

#include "wcm/rational.hpp"
#include "wcm/webs.hpp"

namespace wcm {

// Raw contraction data: three leaf lists, one per white vertex (V already
// assigned). Lists may share labels; each list is kept sorted.
struct TripodWeb {
    int k = 0, n = 0;
    std::vector<int> L1, L2, L3;
};

std::string web_key(const TripodWeb& w);

using Web = std::variant<Rank1Web, Rank2Web, TripodWeb>;

std::string web_key(const Web& w);
int web_k(const Web& w);
int web_n(const Web& w);

// Formal sum of products of webs; all webs share (k,n).
struct FunctionExpr {
    int k = 0, n = 0;
    struct Term {
        Rat coef;
        std::vector<Web> factors;
    };
    std::vector<Term> terms;

    FunctionExpr() = default;
    FunctionExpr(int k_, int n_) : k(k_), n(n_) {}

    void add_term(const Rat& coef, std::vector<Web> factors);
    FunctionExpr operator*(const FunctionExpr& o) const;
    FunctionExpr operator-(const FunctionExpr& o) const;
    FunctionExpr operator+(const FunctionExpr& o) const;
};

// The cactus-sequence function tcfr(a,d;b;c) on Gr(k, 3(k-1)) as a formal
// expression:
//   - proper web W({d+1..a},{k..k+b-1},{2k-1..2k+c-2},{1..d}) when the strict
//     triangle inequality holds and a < k;
//   - beta = 0 (a+b = c+d = k): product of the Plueckers {1..a} u S and
//     {1..d} u T;
//   - alpha = 0 (a+c = b+d = k): product of {1..a} u T and {1..d} u S;
//   - a = k (b+c+d = k): the single Plucker {1..d} u S u T.
FunctionExpr make_tcfr(int k, int a, int d, int b, int c);

// true iff make_tcfr accepts these parameters
bool tcfr_admissible(int k, int a, int d, int b, int c);

// the proper rank-2 web of tcfr, when it is one
Rank2Web tcfr_web(int k, int a, int d, int b, int c);

} // namespace wcm
