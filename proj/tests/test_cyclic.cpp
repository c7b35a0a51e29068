#include <doctest.h>

#include "wcm/cyclic.hpp"

using namespace wcm;

TEST_CASE("cyclic_less basics") {
    auto L = [](int v, int n) { return make_cyclic_label(v, n); };
    CHECK(cyclic_less(L(5, 6), L(6, 6), L(1, 6)));
    CHECK_FALSE(cyclic_less(L(1, 6), L(3, 6), L(2, 6)));
    CHECK_FALSE(cyclic_less(L(3, 6), L(3, 6), L(3, 6)));
    CHECK_THROWS_AS(cyclic_less(L(1, 6), L(1, 7), L(2, 7)), error);
}

TEST_CASE("cyclic_less is a strict total order for every base point") {
    for (int n = 2; n <= 12; ++n)
        for (int i = 1; i <= n; ++i) {
            for (int x = 1; x <= n; ++x) {
                CHECK_FALSE(cyclic_less(i, x, x, n));
                for (int y = 1; y <= n; ++y) {
                    if (x != y)
                        CHECK(cyclic_less(i, x, y, n) != cyclic_less(i, y, x, n));
                    for (int z = 1; z <= n; ++z)
                        if (cyclic_less(i, x, y, n) && cyclic_less(i, y, z, n))
                            CHECK(cyclic_less(i, x, z, n));
                }
            }
        }
}

namespace {

// brute force over all n candidate starting points, straight off the
// definition of <_i
std::optional<int> separation_oracle(const LabelSet& R, const LabelSet& S, const LabelSet& T) {
    int n = R.n;
    for (int i = 1; i <= n; ++i) {
        bool ok = true;
        for (int r : R.elems)
            for (int s : S.elems)
                ok = ok && cyclic_less(i, r, s, n);
        for (int s : S.elems)
            for (int t : T.elems)
                ok = ok && cyclic_less(i, s, t, n);
        if (ok)
            return i;
    }
    return std::nullopt;
}

} // namespace

TEST_CASE("separation examples, checked against the brute-force oracle") {
    auto S = [](int n, std::vector<int> v) { return LabelSet(n, std::move(v)); };
    CHECK(separation_start(S(6, {1, 2}), S(6, {3, 4}), S(6, {5, 6})) == 1);
    // wrap-around arcs: scanning from 4 the order is 4,5,6,1,2,3
    CHECK(separation_start(S(6, {5, 6}), S(6, {1}), S(6, {3})) == 4);
    CHECK(separation_oracle(S(6, {5, 6}), S(6, {1}), S(6, {3})) == 4);
    CHECK(separation_start(S(6, {1, 4}), S(6, {2}), S(6, {3})) == 4);
    CHECK(separation_oracle(S(6, {1, 4}), S(6, {2}), S(6, {3})) == 4);
    CHECK_FALSE(separation_start(S(6, {1, 4}), S(6, {2}), S(6, {5})).has_value());
    CHECK_THROWS_AS(separation_start(S(6, {1, 2}), S(6, {2, 3}), S(6, {5})), error);
}

TEST_CASE("separation matches the oracle on every disjoint triple of [6]") {
    int n = 6;
    for (int mask_r = 1; mask_r < (1 << n); ++mask_r)
        for (int mask_s = 1; mask_s < (1 << n); ++mask_s)
            for (int mask_t = 1; mask_t < (1 << n); ++mask_t) {
                if ((mask_r & mask_s) || (mask_s & mask_t) || (mask_r & mask_t))
                    continue;
                auto to_set = [&](int mask) {
                    std::vector<int> v;
                    for (int i = 0; i < n; ++i)
                        if (mask & (1 << i))
                            v.push_back(i + 1);
                    return LabelSet(n, std::move(v));
                };
                LabelSet R = to_set(mask_r), S = to_set(mask_s), T = to_set(mask_t);
                CHECK(separation_start(R, S, T) == separation_oracle(R, S, T));
            }
}

TEST_CASE("separation is invariant under rotating the triple") {
    int n = 7;
    for (int mask_r = 1; mask_r < (1 << n); ++mask_r)
        for (int mask_s = 1; mask_s < (1 << n); ++mask_s) {
            if (mask_r & mask_s)
                continue;
            int mask_t = ((1 << n) - 1) & ~(mask_r | mask_s);
            if (!mask_t)
                continue;
            auto to_set = [&](int mask) {
                std::vector<int> v;
                for (int i = 0; i < n; ++i)
                    if (mask & (1 << i))
                        v.push_back(i + 1);
                return LabelSet(n, std::move(v));
            };
            LabelSet R = to_set(mask_r), S = to_set(mask_s), T = to_set(mask_t);
            bool rst = separation_start(R, S, T).has_value();
            bool str = separation_start(S, T, R).has_value();
            bool trs = separation_start(T, R, S).has_value();
            CHECK(rst == str);
            CHECK(str == trs);
        }
}

TEST_CASE("shift map fixes labels below i") {
    LabelSet s(6, {1, 3, 5});
    CHECK(shift_set(s, 7) == LabelSet(7, {1, 3, 5}));
    CHECK(shift_set(s, 1) == LabelSet(7, {2, 4, 6}));
    CHECK(shift_set(s, 3) == LabelSet(7, {1, 4, 6}));
}
