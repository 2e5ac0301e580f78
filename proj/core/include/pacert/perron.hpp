#pragma once

#include "pacert/factor.hpp"
#include "pacert/matrix.hpp"

#include <cstddef>
#include <string>

namespace pacert {

struct DegreeCertificate {
    IntPoly char_poly;
    Factorization factorization;
    std::size_t perron_factor = 0;      // index into factorization.factors
    Rational lambda_lo, lambda_hi;      // lambda in (lo, hi]
    int degree = 0;
    std::size_t primitive_power = 0;    // first k with M^k > 0

    const IntPoly& perron_poly() const { return factorization.factors[perron_factor].poly; }
    std::string lambda_digits(int significant = 30) const;
    std::string charpoly_hash() const;
    bool perron_reciprocal() const { return perron_poly().is_reciprocal(); }

    // Re-check: product of factors, isolation, sign change.
    bool verify() const;
    // Shrink the enclosure until hi - lo <= width * hi.
    void refine(const Rational& relative_width);
};

struct PerronOptions {
    Rational relative_width = Rational(1, 1) / Rational(Integer("100000000000000000000000000000000000"));  // 1e-35
    FactorOptions factor;
};

// Largest real root of squarefree p isolated in (lo, hi].
std::pair<Rational, Rational> isolate_largest_root(const IntPoly& squarefree);

DegreeCertificate perron_degree(const IntMatrix& m, const PerronOptions& opt = {});

} // namespace pacert
