#include <doctest.h>

#include "wcm/hom.hpp"

using namespace wcm;

namespace {

LabelSet S(int n, std::vector<int> v) {
    return LabelSet(n, std::move(v));
}

Rank2Profile prof36() {
    return make_rank2_profile(6, "DUDUDU", "UDUDUD");
}

} // namespace

TEST_CASE("rank-1 module: profile word, relations, loop degree") {
    ExplicitModule m = module_from_rank1(make_rank1_profile(6, S(6, {1, 2, 5})), 3, 12);
    CHECK_FALSE(relations_failure(m).has_value());
    // going once around multiplies by t^{n-k}
    PolyMat loop = PolyMat::identity(1, 12);
    for (int p = 1; p <= 6; ++p)
        loop = m.x[p - 1] * loop;
    CHECK(loop == PolyMat::t_identity(1, 12, 3));

    // I = {1..k}: first k arrows are identities
    ExplicitModule first = module_from_rank1(make_rank1_profile(6, S(6, {1, 2, 3})), 3, 12);
    for (int p = 1; p <= 3; ++p)
        CHECK(first.x[p - 1] == PolyMat::identity(1, 12));
    CHECK_FALSE(relations_failure(first).has_value());
}

TEST_CASE("module_from_profile validates and round-trips") {
    ExplicitModule m = module_from_profile(prof36(), 12);
    CHECK(m.r == 2);
    CHECK_FALSE(relations_failure(m).has_value());
    CHECK(extract_profile(m) == prof36());
    CHECK(is_indecomposable(m));
    // strand 2 is the submodule M_J, strand 1 the quotient M_I: the x
    // matrices are lower triangular with the contour exponents
    for (int p = 1; p <= 6; ++p) {
        CHECK(m.x[p - 1].at(0, 1).is_zero());
        CHECK(m.x[p - 1].at(0, 0).valuation() == (prof36().top[p - 1] == 'D' ? 0 : 1));
        CHECK(m.x[p - 1].at(1, 1).valuation() == (prof36().bottom[p - 1] == 'D' ? 0 : 1));
    }
    CHECK_THROWS_AS(module_from_profile(make_rank2_profile(6, "DUDUDU", "DUDUDU"), 12), error);
}

TEST_CASE("profile extraction flags direct sums") {
    ExplicitModule a = module_from_rank1(make_rank1_profile(6, S(6, {1, 3, 5})), 3, 12);
    ExplicitModule b = module_from_rank1(make_rank1_profile(6, S(6, {2, 4, 6})), 3, 12);
    ExplicitModule sum = direct_sum(a, b);
    Rank2Profile p = extract_profile(sum);
    CHECK(p.top_set() == S(6, {1, 3, 5}));
    CHECK(p.bottom_set() == S(6, {2, 4, 6}));
    // letters recovered; the diagonal model is not the glued module, and the
    // rank precondition rejects rank-1 input
    ExplicitModule r1 = module_from_rank1(make_rank1_profile(6, S(6, {1, 2, 3})), 3, 12);
    CHECK_THROWS_AS(extract_profile(r1), error);
}

TEST_CASE("indecomposability: positives and negatives") {
    ExplicitModule m = module_from_profile(prof36(), 12);
    CHECK(is_indecomposable(m));
    ExplicitModule r1 = module_from_rank1(make_rank1_profile(6, S(6, {1, 2, 5})), 3, 12);
    CHECK(is_indecomposable(r1));
    ExplicitModule a = module_from_rank1(make_rank1_profile(6, S(6, {1, 3, 5})), 3, 12);
    ExplicitModule b = module_from_rank1(make_rank1_profile(6, S(6, {2, 4, 6})), 3, 12);
    CHECK(endo_semisimple_rank(direct_sum(a, b)) == 2);
    CHECK_FALSE(is_indecomposable(direct_sum(a, b)));
    CHECK_FALSE(is_indecomposable(direct_sum(a, a)));
}

TEST_CASE("every (3,6) and (4,8) psi image builds and validates at 2n and 3n") {
    for (auto [k, n] : {std::pair{3, 6}, {4, 8}}) {
        SweepReport r = sweep_psi_modules(k, n, {2 * n, 3 * n});
        std::string first_failure = r.failures.empty() ? std::string() : r.failures.front();
        INFO(first_failure);
        CHECK(r.ok());
        CHECK(r.modules == 2 * static_cast<long long>(enumerate_webs(k, n).size()));
    }
}

TEST_CASE("module stretching golden case and profile compatibility") {
    ExplicitModule m = module_from_profile(prof36(), 12);
    ExplicitModule up = stretch_module(m, StretchDir::up, 3);
    CHECK(up.spec.n == 7);
    CHECK(up.spec.k == 3);
    CHECK(extract_profile(up) == stretch_profile(prof36(), StretchDir::up, 3));
    CHECK(extract_profile(up).top_set() == S(7, {1, 4, 6}));

    ExplicitModule down = stretch_module(m, StretchDir::down, 3);
    CHECK(down.spec.k == 4);
    CHECK(extract_profile(down) == stretch_profile(prof36(), StretchDir::down, 3));

    // rank-1: D_i(I) = U_i(I) u {i}
    ExplicitModule r1 = module_from_rank1(make_rank1_profile(6, S(6, {1, 2, 5})), 3, 12);
    ExplicitModule r1d = stretch_module(r1, StretchDir::down, 1);
    ExplicitModule expect = module_from_rank1(make_rank1_profile(7, S(7, {1, 2, 3, 6})), 4, 12);
    for (int p = 0; p < 7; ++p)
        CHECK(r1d.x[p] == expect.x[p]);
}

TEST_CASE("stretching preserves indecomposability on the (3,6) family") {
    for (const Rank2Web& w : enumerate_webs(3, 6)) {
        ExplicitModule m = module_from_profile(psi(w), 12);
        for (int i : {1, 4, 7}) {
            CHECK(is_indecomposable(stretch_module(m, StretchDir::up, i)));
            CHECK(is_indecomposable(stretch_module(m, StretchDir::down, i)));
        }
    }
}

TEST_CASE("module/web/profile stretching square commutes on full (3,6)") {
    for (const Rank2Web& w : enumerate_webs(3, 6)) {
        Rank2Profile p = psi(w);
        ExplicitModule m = module_from_profile(p, 12);
        for (int i = 1; i <= 7; ++i)
            for (StretchDir dir : {StretchDir::up, StretchDir::down}) {
                CHECK(extract_profile(stretch_module(m, dir, i)) ==
                      psi(stretch_web(w, dir, i)));
            }
    }
}

TEST_CASE("enumerate_modules counts") {
    ModuleCounts c = enumerate_modules(5, 12);
    CHECK(c.total == 44880);
    CHECK(c.real_root == 27720);
    CHECK(enumerate_modules(3, 5).total == 0);
    CHECK(enumerate_modules(4, 5).total == 0);
}

TEST_CASE("truncation guards") {
    CHECK_THROWS_AS(module_from_profile(prof36(), 6), error); // N must exceed n
}
