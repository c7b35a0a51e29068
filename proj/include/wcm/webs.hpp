#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "wcm/cyclic.hpp"

namespace wcm {

// One white vertex, k boundary leaves: the Pluecker coordinate p_leaves.
struct Rank1Web {
    int k = 0, n = 0;
    LabelSet leaves;

    bool operator==(const Rank1Web& o) const { return k == o.k && n == o.n && leaves == o.leaves; }
};

Rank1Web make_rank1_web(int k, int n, LabelSet leaves);

// The tripod family W(R,S,T,V): three white vertices joined to one black
// vertex. a+b+c+2d = 2k with a=|R| etc.; the box parameters solve
// a = alpha+beta, b = beta+gamma, c = gamma+alpha. Validation accepts the
// weak triangle inequality (alpha,beta,gamma >= 0); membership in the
// enumerated family additionally needs alpha,beta,gamma >= 1.
struct Rank2Web {
    int k = 0, n = 0;
    LabelSet R, S, T, V;
    int alpha = 0, beta = 0, gamma = 0;

    int a() const { return R.size(); }
    int b() const { return S.size(); }
    int c() const { return T.size(); }
    int d() const { return V.size(); }

    bool operator==(const Rank2Web& o) const {
        return k == o.k && n == o.n && R == o.R && S == o.S && T == o.T && V == o.V;
    }
    bool operator<(const Rank2Web& o) const;
};

Rank2Web make_rank2_web(int k, int n, LabelSet R, LabelSet S, LabelSet T, LabelSet V);

// strict triangle inequality: the web is an indecomposable-family member
bool in_family(const Rank2Web& w);

// Rotating (R,S,T) -> (S,T,R) names the same web; the canonical form is the
// lexicographically least of the three rotations.
Rank2Web canonicalize(const Rank2Web& w);
bool is_canonical(const Rank2Web& w);

// All canonical webs with alpha,beta,gamma >= 1, deterministic order.
// The OpenMP kernel; ref::enumerate_webs is the brute-force serial reference.
std::vector<Rank2Web> enumerate_webs(int k, int n);

struct ClassKey {
    std::array<int, 3> abc; // sorted descending
    int d;
    auto operator<=>(const ClassKey&) const = default;
};

std::map<ClassKey, long long> count_by_class(int k, int n);
std::map<ClassKey, long long> count_by_class(const std::vector<Rank2Web>& webs);

enum class StretchDir { up, down };

Rank1Web stretch_web(const Rank1Web& w, StretchDir dir, int i);
Rank2Web stretch_web(const Rank2Web& w, StretchDir dir, int i);

std::string web_key(const Rank1Web& w);
std::string web_key(const Rank2Web& w);

namespace ref {
// Serial reference: scans every coloring of [n] into (R,S,T,none) plus every
// admissible V, filtering by the separation predicate. For test-sized (k,n).
std::vector<Rank2Web> enumerate_webs(int k, int n);
} // namespace ref

} // namespace wcm
