#include "wcm/cyclic.hpp"

#include <algorithm>

namespace wcm {

CyclicLabel make_cyclic_label(int value, int n) {
    require(1 <= value && value <= n, errc::size, "cyclic label out of range 1..n");
    return CyclicLabel{value, n};
}

bool cyclic_less(CyclicLabel i, CyclicLabel x, CyclicLabel y) {
    require(i.n == x.n && x.n == y.n, errc::ambient_mismatch,
            "cyclic_less needs a shared ambient n");
    return cyclic_less(i.value, x.value, y.value, i.n);
}

LabelSet::LabelSet(int ambient, std::vector<int> values) : n(ambient), elems(std::move(values)) {
    std::sort(elems.begin(), elems.end());
    require(std::adjacent_find(elems.begin(), elems.end()) == elems.end(), errc::disjointness,
            "label set has repeated elements");
    for (int x : elems)
        require(1 <= x && x <= n, errc::size, "label out of range 1..n");
}

bool LabelSet::contains(int x) const {
    return std::binary_search(elems.begin(), elems.end(), x);
}

LabelSet set_union(const LabelSet& a, const LabelSet& b) {
    require(a.n == b.n, errc::ambient_mismatch, "ambient mismatch in union");
    std::vector<int> out;
    std::set_union(a.elems.begin(), a.elems.end(), b.elems.begin(), b.elems.end(),
                   std::back_inserter(out));
    return LabelSet(a.n, std::move(out));
}

bool disjoint(const LabelSet& a, const LabelSet& b) {
    for (int x : a.elems)
        if (b.contains(x))
            return false;
    return true;
}

int norm_label(int x, int n) {
    int r = x % n;
    return r <= 0 ? r + n : r;
}

int cyclic_pos(int i, int x, int n) {
    int d = (x - i) % n;
    return d < 0 ? d + n : d;
}

bool cyclic_less(int i, int x, int y, int n) {
    return cyclic_pos(i, x, n) < cyclic_pos(i, y, n);
}

std::optional<int> separation_start(const LabelSet& R, const LabelSet& S, const LabelSet& T) {
    require(R.n == S.n && S.n == T.n, errc::ambient_mismatch, "ambient mismatch");
    require(!R.empty() && !S.empty() && !T.empty(), errc::size, "separation needs nonempty sets");
    require(disjoint(R, S) && disjoint(S, T) && disjoint(R, T), errc::disjointness,
            "separation needs pairwise disjoint sets");
    int n = R.n;
    for (int i = 1; i <= n; ++i) {
        auto span = [&](const LabelSet& s) {
            int lo = n, hi = -1;
            for (int x : s.elems) {
                int p = cyclic_pos(i, x, n);
                lo = std::min(lo, p);
                hi = std::max(hi, p);
            }
            return std::pair<int, int>{lo, hi};
        };
        auto [rlo, rhi] = span(R);
        auto [slo, shi] = span(S);
        auto [tlo, thi] = span(T);
        (void)rlo;
        if (rhi < slo && shi < tlo)
            return i;
    }
    return std::nullopt;
}

std::vector<int> sorted_from(const LabelSet& s, int i) {
    std::vector<int> out = s.elems;
    std::sort(out.begin(), out.end(),
              [&](int a, int b) { return cyclic_pos(i, a, s.n) < cyclic_pos(i, b, s.n); });
    return out;
}

int shift_label(int j, int i) {
    return j < i ? j : j + 1;
}

LabelSet shift_set(const LabelSet& s, int i) {
    std::vector<int> out;
    out.reserve(s.elems.size());
    for (int x : s.elems)
        out.push_back(shift_label(x, i));
    return LabelSet(s.n + 1, std::move(out));
}

std::vector<std::vector<int>> combinations(const std::vector<int>& pool, int k) {
    std::vector<std::vector<int>> result;
    int n = static_cast<int>(pool.size());
    if (k < 0 || k > n)
        return result;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i)
        idx[i] = i;
    while (true) {
        std::vector<int> row(k);
        for (int i = 0; i < k; ++i)
            row[i] = pool[idx[i]];
        result.push_back(std::move(row));
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i)
            --i;
        if (i < 0)
            break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
    return result;
}

} // namespace wcm
