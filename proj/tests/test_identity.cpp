#include <doctest.h>

#include "wcm/identity.hpp"

using namespace wcm;

TEST_CASE("cactus cases at small k") {
    auto c3 = cactus_cases(3);
    REQUIRE(c3.size() == 1);
    CHECK(c3[0] == std::array<int, 4>{3, 1, 1, 1});
    CHECK(cactus_cases(4).size() == 4);
    CHECK(!cactus_cases(5).empty());
}

TEST_CASE("identity suites verify exactly for k = 3, 4") {
    for (int k : {3, 4}) {
        SuiteReport r = run_identity_suite(k, 12, 20260809);
        CHECK(r.ok);
        for (const auto& id : r.identities) {
            INFO(id.name << ": " << id.message);
            CHECK(id.ok);
        }
    }
}

TEST_CASE("a wrong identity is rejected with a witness") {
    // claim p_123 * p_456 == p_124 * p_356 (false)
    int n = 6;
    FunctionExpr e(3, n);
    e.add_term(1, {Web(make_rank1_web(3, n, LabelSet(n, {1, 2, 3}))),
                   Web(make_rank1_web(3, n, LabelSet(n, {4, 5, 6})))});
    e.add_term(-1, {Web(make_rank1_web(3, n, LabelSet(n, {1, 2, 4}))),
                    Web(make_rank1_web(3, n, LabelSet(n, {3, 5, 6})))});
    SignContext ctx;
    IdentityReport r = verify_identity("bogus", e, 10, 99, ctx);
    CHECK_FALSE(r.ok);
    CHECK_FALSE(r.message.empty());
}

TEST_CASE("sign context keeps chained identities consistent") {
    SignContext ctx;
    std::uint64_t seed = 4242;
    int k = 4;
    bool all_ok = true;
    for (const auto& [a, d, b, c] : cactus_cases(k)) {
        IdentityReport r = verify_identity("chain step", cactus_identity_expr(k, a, d, b, c), 8,
                                           seed++, ctx);
        all_ok = all_ok && r.ok;
    }
    CHECK(all_ok);
    // the three-term identities calibrated real signs for the rank-2 webs
    bool saw_rank2 = false;
    for (const auto& [key, sign] : ctx.signs) {
        if (key.rfind("r2", 0) == 0)
            saw_rank2 = true;
        CHECK((sign == 1 || sign == -1));
    }
    CHECK(saw_rank2);
}
