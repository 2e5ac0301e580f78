#include <doctest.h>

#include "pacert/errors.hpp"
#include "pacert/factor.hpp"
#include "pacert/matrix.hpp"
#include "pacert/perron.hpp"

#include <random>

using namespace pacert;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
    return m;
}

IntPoly random_poly(std::mt19937_64& rng, int deg) {
    std::uniform_int_distribution<long> d(-9, 9);
    std::vector<Integer> c;
    for (int i = 0; i < deg; ++i) c.push_back(d(rng));
    c.push_back(1 + static_cast<long>(rng() % 3));
    return IntPoly(c);
}

// Cofactor expansion along the first row.
Integer det_cofactor(const IntMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Integer total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0, jj = 0; j < n; ++j)
                if (j != c) minor(i - 1, jj++) = m(i, j);
        Integer t = m(0, c) * det_cofactor(minor);
        total += (c % 2 ? -t : t);
    }
    return total;
}

} // namespace

TEST_CASE("char_poly small cases") {
    CHECK(char_poly(IntMatrix::identity(2)) == IntPoly({1, -2, 1}));
    CHECK(char_poly(IntMatrix{{2, 1}, {1, 1}}) == IntPoly({1, -3, 1}));
    IntPoly p{-1, -7, 0, 1};
    CHECK(char_poly(IntMatrix::companion(p)) == p);
}

TEST_CASE("rank and det") {
    IntMatrix a{{5, 1}, {0, 1}};
    CHECK(rank(a) == 2);
    CHECK(det(a) == 5);
    IntMatrix b{{1, 1}, {1, 1}};
    CHECK(rank(b) == 1);
    CHECK(det(b) == 0);
    CHECK(rank(IntMatrix(2, 2)) == 0);
    CHECK(rank(IntMatrix{{1, 2, 3}, {2, 4, 6}}) == 1);
}

TEST_CASE("Bareiss det against cofactor expansion") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 60; ++t) {
        std::size_t n = 1 + static_cast<std::size_t>(t % 6);
        IntMatrix m = random_matrix(rng, n, -20, 20);
        CHECK(det(m) == det_cofactor(m));
    }
}

TEST_CASE("char_poly(t) equals det(tI - M) at integer points") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 30; ++t) {
        std::size_t n = 1 + static_cast<std::size_t>(t % 7);
        IntMatrix m = random_matrix(rng, n, -6, 9);
        IntPoly p = char_poly(m);
        REQUIRE(p.degree() == static_cast<int>(n));
        for (long x = -3; x <= 3; ++x) {
            IntMatrix s = IntMatrix::identity(n).scaled(x) - m;
            CHECK(p.eval(x) == det(s));
        }
        // Cayley-Hamilton
        CHECK(evaluate(p, m).is_zero());
    }
}

TEST_CASE("factor_over_z examples") {
    Factorization f = factor_over_z(IntPoly{-1, 0, 0, 0, 1});
    REQUIRE(f.factors.size() == 3);
    CHECK(f.expand() == IntPoly({-1, 0, 0, 0, 1}));
    CHECK(f.factors[0].poly.degree() == 1);
    CHECK(f.factors[1].poly.degree() == 1);
    CHECK(f.factors[2].poly == IntPoly({1, 0, 1}));

    Factorization g = factor_over_z(IntPoly{1, -3, 1});
    REQUIRE(g.factors.size() == 1);
    CHECK(g.factors[0].poly == IntPoly({1, -3, 1}));

    IntPoly prod = IntPoly{1, -3, 1} * IntPoly{-2, 1};
    Factorization h = factor_over_z(prod);
    REQUIRE(h.factors.size() == 2);
    CHECK(h.factors[0].poly == IntPoly({-2, 1}));
    CHECK(h.factors[1].poly == IntPoly({1, -3, 1}));
}

TEST_CASE("factorization round trip on random products") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 25; ++t) {
        IntPoly p = random_poly(rng, 1 + t % 4) * random_poly(rng, 2 + t % 3);
        if (t % 5 == 0) p = p * p;
        p = p * Integer(1 + t % 4);
        Factorization f = factor_over_z(p);
        CHECK(f.expand() == p);
        int prod_deg = 0;
        for (const auto& fa : f.factors) {
            CHECK(fa.poly.content() == 1);
            CHECK(fa.poly.lc() > 0);
            prod_deg += fa.poly.degree() * fa.multiplicity;
            // each factor must be irreducible: refactoring yields itself
            Factorization again = factor_over_z(fa.poly);
            REQUIRE(again.factors.size() == 1);
            CHECK(again.factors[0].multiplicity == 1);
        }
        CHECK(prod_deg == p.degree());
    }
}

TEST_CASE("Swinnerton-Dyer style polynomial needs recombination") {
    // x^4 - 10x^2 + 1 is irreducible but splits mod every prime
    Factorization f = factor_over_z(IntPoly{1, 0, -10, 0, 1});
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0].poly.degree() == 4);
}

TEST_CASE("squarefree decomposition") {
    IntPoly a{-1, 1}, b{1, 0, 1};
    IntPoly p = a * a * a * b;
    auto sq = squarefree_decomposition(p);
    REQUIRE(sq.size() == 2);
    CHECK(sq[0].first == b);
    CHECK(sq[0].second == 1);
    CHECK(sq[1].first == a);
    CHECK(sq[1].second == 3);
}

TEST_CASE("Sturm root counts") {
    IntPoly p = IntPoly{-1, 1} * IntPoly{-2, 1} * IntPoly{-5, 1};
    auto s = sturm_sequence(p);
    CHECK(count_roots(s, Rational(0), Rational(10)) == 3);
    CHECK(count_roots(s, Rational(1), Rational(2)) == 1);   // (1, 2]
    CHECK(count_roots(s, Rational(3), Rational(4)) == 0);
    CHECK(count_roots(sturm_sequence(IntPoly{1, 0, 1}), Rational(-100), Rational(100)) == 0);
}

TEST_CASE("perron_degree") {
    DegreeCertificate c = perron_degree(IntMatrix{{2, 1}, {1, 1}});
    CHECK(c.degree == 2);
    CHECK(c.perron_poly() == IntPoly({1, -3, 1}));
    CHECK(c.verify());
    // (3 + sqrt 5) / 2
    CHECK(c.lambda_digits(12) == "2.61803398875");
    CHECK_THROWS_AS(perron_degree(IntMatrix::identity(3)), PrimitivityError);
}

TEST_CASE("perron enclosure contains the root") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 10; ++t) {
        IntMatrix m = random_matrix(rng, 4, 1, 7);
        DegreeCertificate c = perron_degree(m);
        CHECK(c.verify());
        const IntPoly& p = c.perron_poly();
        CHECK(p.sign_at(c.lambda_lo) * p.sign_at(c.lambda_hi) <= 0);
        CHECK((c.lambda_hi - c.lambda_lo) * Rational(Integer("100000000000000000000000000000000000")) <= c.lambda_hi);
        // the Perron root is at least the minimum row sum
        Integer minrow = -1;
        for (std::size_t i = 0; i < 4; ++i) {
            Integer s = 0;
            for (std::size_t j = 0; j < 4; ++j) s += m(i, j);
            if (minrow < 0 || s < minrow) minrow = s;
        }
        CHECK(c.lambda_hi >= Rational(minrow));
    }
}
