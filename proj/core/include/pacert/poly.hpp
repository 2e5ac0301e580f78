#pragma once

#include "pacert/bigint.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace pacert {

// Univariate polynomial over Z, coefficients in ascending degree.
// The zero polynomial has no coefficients and degree -1.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> ascending);
    IntPoly(std::initializer_list<long> ascending);

    static IntPoly monomial(const Integer& c, int degree);
    static IntPoly x_minus(const Integer& a);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Integer& lc() const { return c_.back(); }
    Integer coeff(int i) const;
    const std::vector<Integer>& coeffs() const { return c_; }

    Integer content() const;                // nonnegative gcd of coefficients
    IntPoly primitive_part() const;         // content removed, lc > 0
    IntPoly derivative() const;
    IntPoly negated() const;
    IntPoly reversed() const;               // x^deg p(1/x)
    bool is_reciprocal() const;             // p == +-reversed(p)

    Integer eval(const Integer& x) const;
    int sign_at(const Rational& x) const;

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const Integer& s) const;
    IntPoly& operator+=(const IntPoly& o) { return *this = *this + o; }
    IntPoly& operator-=(const IntPoly& o) { return *this = *this - o; }
    IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }
    bool operator==(const IntPoly& o) const = default;
    bool operator<(const IntPoly& o) const;  // degree then coefficients top-down

    // Euclidean division over Q when the quotient is integral; returns
    // false if d does not divide *this exactly over Z.
    bool divides_by(const IntPoly& d, IntPoly* quotient) const;

    // lc(d)^(deg - deg d + 1) * p = q d + r
    std::pair<IntPoly, IntPoly> pseudo_divmod(const IntPoly& d) const;

    std::string to_string(const std::string& var = "x") const;
    std::vector<std::string> to_strings() const;

private:
    void trim();
    std::vector<Integer> c_;
};

// Primitive gcd with positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

// Yun: p = c * prod s_i^i with s_i squarefree and pairwise coprime.
// Returns (s_i, i) for nonconstant s_i.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p);
IntPoly squarefree_part(const IntPoly& p);

// Sturm sequence with sign-preserving pseudo remainders.
std::vector<IntPoly> sturm_sequence(const IntPoly& p);
int sign_variations(const std::vector<IntPoly>& seq, const Rational& x);
// Number of distinct real roots in (lo, hi]; p squarefree, lo < hi.
int count_roots(const std::vector<IntPoly>& seq, const Rational& lo, const Rational& hi);
// 1 + max |c_i / lc|
Rational cauchy_bound(const IntPoly& p);

} // namespace pacert
