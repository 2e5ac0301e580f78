#include <doctest.h>

#include "pacert/curvesys.hpp"
#include "pacert/errors.hpp"
#include "pacert/penner.hpp"

#include <random>

using namespace pacert;

namespace {

struct Fig1 {
    SquareComplex X = build_complex(build_figure1());
    NormalPath a = curve_path(X, "a"), b = curve_path(X, "b");
};

const CurveModel& model() {
    static const CurveModel M = build_curve_model(build_chain(2, 4, 1));
    return M;
}

} // namespace

TEST_CASE("square complexes") {
    CHECK(build_complex(build_figure1()).squares() == 5);
    CHECK(build_complex(build_torus_square()).squares() == 1);
    CHECK(build_complex(build_figure1()).euler_characteristic() == -5);
}

TEST_CASE("figure 1 intersections") {
    Fig1 f;
    CHECK(intersection_number(f.X, f.a, f.b) == 5);
    CHECK(intersection_by_linking(f.X, f.a, f.b) == 5);
    CHECK(intersection_number(f.X, f.a, f.a) == 0);
    CHECK(intersection_by_linking(f.X, f.b, f.b) == 0);
    CHECK(f.a.length() == 5);
    CHECK(f.a.same_curve(f.X, f.a.reversed(f.X)));
}

TEST_CASE("twisting along a") {
    Fig1 f;
    CHECK(twist(f.X, f.b, f.a, 0) == f.b);
    CHECK(twist(f.X, f.a, f.a, 4) == f.a);
    for (long k = -3; k <= 3; ++k) {
        NormalPath t = twist(f.X, f.b, f.a, k);
        CHECK(intersection_number(f.X, t, f.a) == 5);
        CHECK(intersection_number(f.X, t, f.b) == static_cast<std::uint64_t>(25 * std::labs(k)));
        CHECK(intersection_by_linking(f.X, t, f.b) == static_cast<std::uint64_t>(25 * std::labs(k)));
        CHECK(twist(f.X, t, f.a, -k) == f.b);
        CHECK(t.length() == static_cast<std::size_t>(5 + 25 * std::labs(k)));
    }
}

TEST_CASE("path dump") {
    Fig1 f;
    auto d = f.a.dump(f.X);
    REQUIRE(d.size() == 5);
    for (auto [sq, in, out] : d) {
        CHECK(sq >= 0);
        CHECK(sq < 5);
        CHECK((in + 2) % 4 == out);  // a crosses every square straight through
    }
    CHECK_FALSE(f.a.to_string(f.X).empty());
}

TEST_CASE("budget guard") {
    Fig1 f;
    Budget tiny;
    tiny.max_edge_weight = 10;
    CHECK_THROWS_AS(twist(f.X, f.b, f.a, 3, tiny), ResourceError);
}

// i(f(x), c) equals (S M e_x)_c for the Penner transition matrix M and the
// symmetric intersection form S.
TEST_CASE("twist action against Penner matrices") {
    const CurveModel& M = model();
    ChainConfig cfg = build_chain(2, 4, 1);
    auto basis = cfg.basis();
    for (long m = 1; m <= 2; ++m) {
        TwistWord w = family_word(cfg, m);
        IntMatrix T = transition_matrix(w, cfg).matrix;
        auto f = relative_word(w, 0, static_cast<long>(w.n()));
        for (std::size_t x = 0; x < basis.size(); ++x) {
            NormalPath fx = apply_twists(M.complex, M.curves, f, M.curves.at(basis[x]));
            for (std::size_t c = 0; c < basis.size(); ++c) {
                Integer expect = 0;
                for (std::size_t y = 0; y < basis.size(); ++y) expect += cfg.intersection(basis[c], basis[y]) * T(y, x);
                CHECK(Integer(static_cast<unsigned long>(intersection_number(M.complex, fx, M.curves.at(basis[c])))) == expect);
            }
        }
    }
}

TEST_CASE("model curves") {
    const CurveModel& M = model();
    CHECK(M.complex.punctures() == 1);
    CHECK(intersection_number(M.complex, M.curves.at("a1"), M.curves.at("b1")) == 5);
    CHECK(intersection_number(M.complex, M.curves.at("a2"), M.curves.at("b1")) == 1);
    CHECK(intersection_number(M.complex, M.curves.at("a2"), M.curves.at("b2")) == 1);
    CHECK(intersection_number(M.complex, M.curves.at("a1"), M.curves.at("b2")) == 0);
    CHECK(intersection_number(M.complex, M.curves.at("a1"), M.curves.at("a2")) == 0);
    CHECK_THROWS_AS(build_curve_model(build_chain(3, 5, 1)), UsageError);
}

TEST_CASE("layout and linking agree on random curves") {
    const CurveModel& M = model();
    const std::vector<std::string> ids{"a1", "b1", "a2", "b2"};
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 25; ++t) {
        auto random_curve = [&] {
            std::vector<Twist> word;
            for (int i = 0; i < 3; ++i) word.push_back({ids[rng() % 4], static_cast<long>(rng() % 5) - 2});
            return apply_twists(M.complex, M.curves, word, M.curves.at(ids[rng() % 4]));
        };
        NormalPath p = random_curve(), q = random_curve();
        CHECK(intersection_number(M.complex, p, q) == intersection_by_linking(M.complex, p, q));
        CHECK(intersection_number(M.complex, p, q) == intersection_number(M.complex, q, p));
        CHECK(intersection_number(M.complex, p, p) == 0);
        CHECK(intersection_number(M.complex, p, p.reversed(M.complex)) == 0);
        CHECK(crossing_count(layout_strands(M.complex, {p}), 0, 0) == 0);
    }
}

TEST_CASE("filling") {
    Fig1 f;
    FillingReport both = fills(f.X, {f.a, f.b});
    CHECK(both.fills);
    CHECK(both.euler_gap == 0);
    CHECK_FALSE(fills(f.X, {f.a}).fills);
    CHECK_FALSE(fills(f.X, {f.a, f.a}).fills);
    const CurveModel& M = model();
    CHECK(fills(M.complex, {M.curves.at("a1"), M.curves.at("b1"), M.curves.at("a2"), M.curves.at("b2")}).fills);
    CHECK_FALSE(fills(M.complex, {M.curves.at("a1"), M.curves.at("b1")}).fills);
    SquareComplex two = build_complex(build_genus4_model(2));
    CHECK_THROWS_AS(fills(two, {curve_path(two, "a1")}), UsageError);
}

TEST_CASE("twisting estimates") {
    Fig1 f;
    CHECK(twisting_estimate(f.X, f.a, f.b, f.b).tau == 0);
    for (long k = -6; k <= 6; ++k) {
        if (k == 0) continue;
        TwistingEstimate e = twisting_estimate(f.X, f.a, f.b, twist(f.X, f.b, f.a, k));
        CHECK(std::labs(e.tau - std::labs(k)) <= e.error_bound);
        CHECK((e.signed_tau > 0) == (k > 0));
        TwistingEstimate swapped = twisting_estimate(f.X, f.a, twist(f.X, f.b, f.a, k), f.b);
        CHECK(swapped.tau == e.tau);
        CHECK(swapped.signed_tau == -e.signed_tau);
    }
    const CurveModel& M = model();
    CHECK_THROWS_AS(twisting_estimate(M.complex, M.curves.at("a1"), M.curves.at("b2"), M.curves.at("b1")), ProjectionUndefinedError);
    CHECK(twist_sign_selftest(f.X).empty());
    CHECK(twist_sign_selftest(M.complex).empty());
}

TEST_CASE("relative words and frames") {
    TwistWord w = family_word(build_chain(2, 4, 1), 3);
    auto f = relative_word(w, 0, 6);
    REQUIRE(f.size() == 6);
    CHECK(f[0].curve == "a1");
    CHECK(f[0].exponent == 3);
    CHECK(f[1].exponent == -3);
    auto inv = relative_word(w, 2, 0);
    REQUIRE(inv.size() == 2);
    CHECK(inv[0].curve == "b1");
    CHECK(inv[0].exponent == 3);
    CHECK(inv[1].curve == "a1");
    CHECK(inv[1].exponent == -3);
    CHECK(relative_word(w, 4, 4).empty());
    CHECK(frame_cost(5, 4) == 0);
    CHECK(frame_cost(5, 5) == 0);
    CHECK(frame_cost(5, 1) == 3);
    CHECK(frame_cost(1, 5) == 4);
    CHECK(balanced_frame({1, 6}, 0) == 3);
}

TEST_CASE("gamma sequence") {
    const CurveModel& M = model();
    TwistWord w = family_word(build_chain(2, 4, 1), 2);
    CHECK(gamma_curve(M, w, 1) == M.curves.at("a1"));
    CHECK(gamma_curve(M, w, 0) == M.curves.at("b1"));
    auto seq = gamma_sequence(M, w, -1, 4);
    REQUIRE(seq.size() == 6);
    CHECK(seq[2] == M.curves.at("a1"));

    // cache against the direct route in several frames
    GammaCache G(M, w);
    for (long j = -2; j <= 6; ++j)
        for (long s : {-1L, 0L, 2L, 5L}) CHECK(G.curve(j, s) == gamma_curve(M, w, j, s));

    // f shifts by n
    const long n = static_cast<long>(w.n());
    auto f = relative_word(w, 0, n);
    for (long j = -1; j <= 1; ++j) CHECK(apply_twists(M.complex, M.curves, f, gamma_curve(M, w, j)) == gamma_curve(M, w, j + n));

    // a consecutive triple pulled back by f_{j-1}^{-1}
    for (long j = 1; j <= n; ++j) {
        const NormalPath& cj = M.curves.at(w.letter(j).curve);
        CHECK(G.curve(j - 1, j - 1) == M.curves.at(w.letter(j - 1).curve));
        CHECK(G.curve(j, j - 1) == cj);
        CHECK(G.curve(j + 1, j - 1) == twist(M.complex, M.curves.at(w.letter(j + 1).curve), cj, w.exponent(j)));
    }
    Budget tiny;
    tiny.max_edge_weight = 50;
    CHECK_THROWS_AS(gamma_sequence(M, w, -3, 8, tiny), ResourceError);
}

TEST_CASE("R0") {
    const CurveModel& M = model();
    TwistWord w = family_word(build_chain(2, 4, 1), 4);
    R0Report r = compute_R0(M, w);
    CHECK(r.base_tau.size() == w.n());
    CHECK(r.R0 >= 3);
    for (std::size_t shift = 1; shift < w.n(); ++shift) {
        TwistWord v = w;
        std::rotate(v.letters.begin(), v.letters.begin() + static_cast<long>(shift), v.letters.end());
        CHECK(compute_R0(M, v).R0 == r.R0);
    }
    CHECK_THROWS(compute_R0(M, parse_twist_word("a1^+ b2^-", 3)));
}

TEST_CASE("lemma twisting is frame independent up to estimator slack") {
    const CurveModel& M = model();
    TwistWord w = family_word(build_chain(2, 4, 1), 3);
    GammaCache G(M, w);
    for (long i = -1; i <= 2; ++i)
        for (long l = i + 1; l <= 4; ++l)
            for (long j = l + 1; j <= 4; ++j) {
                long base = lemma_twisting(G, i, l, j).tau;
                for (long s = i - 1; s <= j; ++s) CHECK(std::labs(lemma_twisting(G, i, l, j, s).tau - base) <= 2);
            }
}

TEST_CASE("intersections along the sequence") {
    const CurveModel& M = model();
    TwistWord w = family_word(build_chain(2, 4, 1), 5);
    GammaCache G(M, w);
    CHECK(gamma_intersection(G, 1, 2) != 0);
    CHECK(gamma_intersection(G, 1, 2) == intersection_number(M.complex, gamma_curve(M, w, 1), gamma_curve(M, w, 2)));
}

TEST_CASE("Behrstock probe") {
    Fig1 f;
    std::vector<BehrstockTriple> t{
        {"big", f.a, f.b, twist(f.X, f.b, f.a, 15)},
        {"small", f.a, f.b, twist(f.X, f.b, f.a, 2)},
    };
    BehrstockReport r = behrstock_probe(f.X, t);
    REQUIRE(r.rows.size() == 2);
    CHECK(r.rows[0].hypothesis_met);
    CHECK(r.rows[0].forward_tau >= 12);
    REQUIRE(r.rows[0].reverse_tau);
    CHECK(*r.rows[0].reverse_tau <= 5);
    CHECK_FALSE(r.rows[1].hypothesis_met);
    CHECK(r.skipped == 1);
    CHECK(r.violations == 0);
}
