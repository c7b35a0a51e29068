#include <doctest.h>

#include "wcm/profiles.hpp"

using namespace wcm;

namespace {

LabelSet S(int n, std::vector<int> v) {
    return LabelSet(n, std::move(v));
}

Rank2Web primitive36() {
    return make_rank2_web(3, 6, S(6, {1, 2}), S(6, {3, 4}), S(6, {5, 6}), S(6, {}));
}

} // namespace

TEST_CASE("box decomposition of a wrapping n=8 profile") {
    Rank2Profile p = make_rank2_profile(8, "DUUDUDUU", "UDUUDUUD");
    std::vector<Box> boxes = decompose_boxes(p);
    REQUIRE(boxes.size() == 3);
    for (const Box& b : boxes)
        CHECK(b.size == 1);
}

TEST_CASE("no crossings means no boxes") {
    Rank2Profile p = make_rank2_profile(6, "DUDUDU", "DUDUDU");
    CHECK(decompose_boxes(p).empty());
}

TEST_CASE("unbalanced crossings are rejected") {
    // one U/D letter, no D/U at all
    Rank2Profile p = make_rank2_profile(4, "UUUU", "DUUU");
    CHECK_THROWS_AS(decompose_boxes(p), error);
}

TEST_CASE("psi golden case 135/246 and its boxes") {
    Rank2Profile p = psi(primitive36());
    CHECK(p.top == "DUDUDU");
    CHECK(p.bottom == "UDUDUD");
    CHECK(p.top_set() == S(6, {1, 3, 5}));
    CHECK(p.bottom_set() == S(6, {2, 4, 6}));
    std::vector<Box> boxes = decompose_boxes(p);
    REQUIRE(boxes.size() == 3);
    CHECK(boxes[0].start == 2);
    CHECK(boxes[0].ud_positions == std::vector<int>{2});
    CHECK(boxes[0].du_positions == std::vector<int>{3});
    CHECK(boxes[1].start == 4);
    CHECK(boxes[2].start == 6); // wraps to close at 1
    CHECK(boxes[2].du_positions == std::vector<int>{1});
}

TEST_CASE("psi of the worked k=7 web") {
    Rank2Web w = make_rank2_web(7, 18, S(18, {2, 3, 4, 5}), S(18, {7, 8, 9, 10}),
                                S(18, {13, 14, 15, 16}), S(18, {1}));
    Rank2Profile p = psi(w);
    CHECK(p.top_set() == S(18, {1, 2, 3, 7, 8, 13, 14}));
    CHECK(p.bottom_set() == S(18, {1, 4, 5, 9, 10, 15, 16}));
}

TEST_CASE("psi invariants over a full enumeration") {
    for (auto [k, n] : {std::pair{3, 6}, {3, 7}, {4, 8}}) {
        for (const Rank2Web& w : enumerate_webs(k, n)) {
            Rank2Profile p = psi(w);
            LabelSet I = p.top_set(), J = p.bottom_set();
            CHECK(I.size() == k);
            CHECK(J.size() == k);
            // I intersect J = V
            std::vector<int> inter;
            for (int x : I.elems)
                if (J.contains(x))
                    inter.push_back(x);
            CHECK(LabelSet(n, inter) == w.V);
            // box sizes are exactly {alpha, beta, gamma}
            std::vector<int> sizes;
            for (const Box& b : decompose_boxes(p))
                sizes.push_back(b.size);
            std::sort(sizes.begin(), sizes.end());
            std::vector<int> abg{w.alpha, w.beta, w.gamma};
            std::sort(abg.begin(), abg.end());
            CHECK(sizes == abg);
            // psi is rotation-invariant on the web
            CHECK(psi(make_rank2_web(k, n, w.S, w.T, w.R, w.V)) == p);
        }
    }
}

TEST_CASE("psi_inverse round trip over full enumerations") {
    for (auto [k, n] : {std::pair{3, 6}, {4, 8}, {5, 12}}) {
        long long checked = 0;
        for (const Rank2Web& w : enumerate_webs(k, n)) {
            if (!(psi_inverse(psi(w)) == w)) {
                FAIL("round trip broke at " << web_key(w));
            }
            ++checked;
        }
        CHECK(checked > 0);
    }
}

TEST_CASE("psi_inverse rejects non-3-box profiles") {
    Rank2Profile two_box = make_rank2_profile(4, "DUDU", "UDUD");
    CHECK(decompose_boxes(two_box).size() == 2);
    CHECK_THROWS_AS(psi_inverse(two_box), error);
}

TEST_CASE("psi rejects webs outside the family") {
    // beta = 0: a=2,b=1,c=3 with d=0, k=3
    Rank2Web w = make_rank2_web(3, 6, S(6, {1, 2}), S(6, {3}), S(6, {4, 5, 6}), S(6, {}));
    CHECK(w.beta == 0);
    CHECK_THROWS_AS(psi(w), error);
}

TEST_CASE("profile stretching golden cases") {
    Rank2Profile p = psi(primitive36());
    Rank2Profile up = stretch_profile(p, StretchDir::up, 3);
    CHECK(up.top_set() == S(7, {1, 4, 6}));
    CHECK(up.bottom_set() == S(7, {2, 5, 7}));

    Rank1Profile r1 = make_rank1_profile(6, S(6, {1, 2, 5}));
    CHECK(r1.word() == "DDUUDU");
    Rank1Profile down = stretch_profile(r1, StretchDir::down, 1);
    CHECK(down.downs == S(7, {1, 2, 3, 6}));
    Rank1Profile tail = stretch_profile(r1, StretchDir::up, 7);
    CHECK(tail.downs == S(7, {1, 2, 5}));
}

TEST_CASE("web and profile stretching commute with psi") {
    for (const Rank2Web& w : enumerate_webs(3, 6)) {
        for (int i = 1; i <= 7; ++i) {
            CHECK(psi(stretch_web(w, StretchDir::up, i)) ==
                  stretch_profile(psi(w), StretchDir::up, i));
            CHECK(psi(stretch_web(w, StretchDir::down, i)) ==
                  stretch_profile(psi(w), StretchDir::down, i));
        }
    }
}

TEST_CASE("compact encoding") {
    CHECK(psi(primitive36()).compact() == ")()()(");
    Rank2Profile p = make_rank2_profile(4, "DUDU", "DUUD");
    CHECK(p.compact() == "=.)(");
}
