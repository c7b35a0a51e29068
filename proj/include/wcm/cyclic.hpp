#pragma once

#include <optional>
#include <vector>

#include "wcm/error.hpp"

namespace wcm {

// A label in the cyclic set [n] = {1..n}.
struct CyclicLabel {
    int value = 0;
    int n = 0;
};

CyclicLabel make_cyclic_label(int value, int n);

// true iff x strictly precedes y in the total order i <_i i+1 <_i ... <_i i-1
bool cyclic_less(CyclicLabel i, CyclicLabel x, CyclicLabel y);

// A sorted subset of [n] = {1..n} with its ambient size. The cyclic structure
// identifies 0 with n; all label arithmetic is normalized back into 1..n.
struct LabelSet {
    int n = 0;
    std::vector<int> elems; // strictly increasing, values in 1..n

    LabelSet() = default;
    LabelSet(int ambient, std::vector<int> values);

    int size() const { return static_cast<int>(elems.size()); }
    bool empty() const { return elems.empty(); }
    bool contains(int x) const;

    bool operator==(const LabelSet& o) const { return n == o.n && elems == o.elems; }
    bool operator<(const LabelSet& o) const { return elems < o.elems; }
};

LabelSet set_union(const LabelSet& a, const LabelSet& b);
bool disjoint(const LabelSet& a, const LabelSet& b);

// normalize any integer into 1..n
int norm_label(int x, int n);

// position of x in the total order i <_i i+1 <_i ... <_i i-1 (0-based)
int cyclic_pos(int i, int x, int n);

// true iff x strictly precedes y in <_i; irreflexive
bool cyclic_less(int i, int x, int y, int n);

// The smallest i such that under <_i all of R precedes all of S precedes all
// of T, or nullopt. R, S, T must be nonempty, pairwise disjoint, same ambient.
std::optional<int> separation_start(const LabelSet& R, const LabelSet& S, const LabelSet& T);

// elements of s listed in increasing <_i order
std::vector<int> sorted_from(const LabelSet& s, int i);

// the index-shift map s_i : [n] -> [n+1], s_i(j) = j for j < i, j+1 otherwise
int shift_label(int j, int i);
LabelSet shift_set(const LabelSet& s, int i); // ambient grows by one; i itself is not hit

std::vector<std::vector<int>> combinations(const std::vector<int>& pool, int k);

} // namespace wcm
