#include <doctest.h>

#include "pacert/chains.hpp"
#include "pacert/errors.hpp"

#include <algorithm>

using namespace pacert;

TEST_CASE("build_chain r=2") {
    ChainConfig c = build_chain(2, 4, 1);
    CHECK(c.intersection("a1", "b1") == 5);
    CHECK(c.intersection("a2", "b1") == 1);
    CHECK(c.intersection("a2", "b2") == 1);
    CHECK(c.intersection("a1", "b2") == 0);
    CHECK(c.intersection("a1", "a2") == 0);
    CHECK(c.intersection("b1", "a2") == c.intersection("a2", "b1"));
    CHECK(c.matches_chain_shape());
}

TEST_CASE("genus gate") {
    CHECK_THROWS_AS(build_chain(2, 3, 1), GenusBoundError);
    CHECK_NOTHROW(build_chain(3, 5, 1));
    CHECK_THROWS_AS(build_chain(3, 4, 1), GenusBoundError);
}

TEST_CASE("determinant 5k") {
    CHECK(rank_and_det(build_chain(4, 6, 3)).det == 15);
    auto rd = rank_and_det(build_chain(2, 4, 1));
    CHECK(rd.rank == 2);
    CHECK(rd.det == 5);
    CHECK(rank_and_det(build_chain(3, 5, 2)).det == 10);
    auto z = rank_and_det(IntMatrix(2, 2));
    CHECK(z.rank == 0);
    CHECK(z.det == 0);
    for (int r = 2; r <= 6; ++r)
        for (int k = 1; k <= 4; ++k) {
            auto x = rank_and_det(build_chain(r, r + 2, k));
            CHECK(x.rank == static_cast<std::size_t>(r));
            CHECK(abs(x.det) == 5 * k);
        }
}

TEST_CASE("Strenner loop validation") {
    ChainConfig c = build_chain(2, 4, 1);
    CHECK(validate_strenner_loop(c, {"a1", "b1", "a2", "b2", "a2", "b1", "a1"}).valid());
    auto partial = validate_strenner_loop(c, {"a1", "b1", "a1"});
    CHECK_FALSE(partial.valid());
    CHECK_FALSE(partial.visits_all);
    // a1 and b2 are disjoint
    auto missing = validate_strenner_loop(c, {"a1", "b2", "a2", "b1", "a1"});
    CHECK_FALSE(missing.valid());
    CHECK_FALSE(missing.all_edges);
    CHECK_THROWS_AS(validate_strenner_loop(c, {"a1", "q9"}), UsageError);
}

TEST_CASE("backtrack reduction") {
    CHECK(reduce_backtracks({"a1", "b1", "a2", "b2", "a2", "b1"}).size() <= 1);
    CHECK(reduce_backtracks({"a1", "b1", "a2", "b2"}) == std::vector<std::string>{"a1", "b1", "a2", "b2"});
    CHECK(reduce_backtracks({"a1", "b1", "a2", "b1"}).size() == 1);
}

TEST_CASE("family words") {
    for (int r = 2; r <= 6; ++r) {
        ChainConfig c = build_chain(r, r + 2, 1);
        TwistWord w = family_word(c, 3);
        CHECK(w.n() == static_cast<std::size_t>(4 * r - 2));
        CHECK(w.penner_signs(c));
        CHECK(w.consecutive_intersect(c));
        CHECK(validate_strenner_loop(c, w.loop()).valid());
        for (std::size_t i = 0; i < w.n(); ++i) CHECK(w.letters[i].kappa == (i % 2 == 0 ? +1 : -1));
    }
    TwistWord w = family_word(build_chain(2, 4, 1), 5);
    CHECK(w.canonical() == "a1^+m b1^-m a2^+m b2^-m a2^+m b1^-m");
    CHECK(w.letter(7).curve == "a1");
    CHECK(w.letter(0).curve == "b1");
    CHECK(w.exponent(2) == -5);
}

TEST_CASE("config parsing") {
    ChainConfig c = parse_chain_config("r = 2\ng = 4\nk = 2\n");
    CHECK(c.k == 2);
    CHECK(c.intersection("a2", "b2") == 2);
}
