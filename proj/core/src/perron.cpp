#include "pacert/perron.hpp"

#include "pacert/errors.hpp"

#include <stdexcept>

namespace pacert {

namespace {

int roots_above(const std::vector<IntPoly>& seq, const Rational& x, const Rational& top) { return count_roots(seq, x, top); }

Rational midpoint_avoiding_root(const IntPoly& p, const Rational& lo, const Rational& hi) {
    Rational mid = (lo + hi) / 2;
    if (p.sign_at(mid) != 0) return mid;
    Rational alt = lo + (hi - lo) / 3;
    if (p.sign_at(alt) != 0) return alt;
    return lo + 2 * (hi - lo) / 3;
}

} // namespace

std::pair<Rational, Rational> isolate_largest_root(const IntPoly& p) {
    if (p.degree() < 1) throw std::invalid_argument("no roots to isolate");
    auto seq = sturm_sequence(p);
    Rational top = cauchy_bound(p);
    Rational lo = -top, hi = top;
    if (roots_above(seq, lo, top) < 1) throw std::runtime_error("polynomial has no real root");
    while (roots_above(seq, lo, top) > 1) {
        Rational mid = midpoint_avoiding_root(p, lo, hi);
        if (roots_above(seq, mid, top) >= 1) lo = mid;
        else hi = mid;
    }
    return {lo, hi};
}

std::string DegreeCertificate::lambda_digits(int significant) const {
    return format_significant((lambda_lo + lambda_hi) / 2, significant);
}

std::string DegreeCertificate::charpoly_hash() const {
    std::string s;
    for (auto& c : char_poly.coeffs()) s += c.get_str() + ",";
    return hex64(fnv1a(s));
}

void DegreeCertificate::refine(const Rational& relative_width) {
    const IntPoly& f = perron_poly();
    auto seq = sturm_sequence(f);
    while (lambda_hi - lambda_lo > relative_width * abs(lambda_hi)) {
        Rational mid = midpoint_avoiding_root(f, lambda_lo, lambda_hi);
        if (count_roots(seq, mid, lambda_hi) == 1) lambda_lo = mid;
        else lambda_hi = mid;
    }
}

bool DegreeCertificate::verify() const {
    if (factorization.expand() != char_poly && factorization.expand() != char_poly.negated()) return false;
    if (perron_factor >= factorization.factors.size()) return false;
    if (!(lambda_lo < lambda_hi)) return false;
    for (std::size_t i = 0; i < factorization.factors.size(); ++i) {
        const IntPoly& f = factorization.factors[i].poly;
        int n = count_roots(sturm_sequence(f), lambda_lo, lambda_hi);
        if (n != (i == perron_factor ? 1 : 0)) return false;
    }
    const IntPoly& f = perron_poly();
    int a = f.sign_at(lambda_lo), b = f.sign_at(lambda_hi);
    if (a == 0) return false;
    if (b != 0 && a == b) return false;
    return degree == f.degree();
}

DegreeCertificate perron_degree(const IntMatrix& m, const PerronOptions& opt) {
    if (!m.square()) throw DimensionError("Perron degree of a non-square matrix");
    if (!m.is_nonnegative()) throw PrimitivityError("matrix has a negative entry");
    DegreeCertificate cert;
    if (!is_primitive(m, &cert.primitive_power)) throw PrimitivityError("no power of the matrix up to dim^2 is positive");
    cert.char_poly = char_poly(m);
    cert.factorization = factor_over_z(cert.char_poly, opt.factor);
    auto [lo, hi] = isolate_largest_root(squarefree_part(cert.char_poly));
    cert.lambda_lo = lo;
    cert.lambda_hi = hi;
    int hits = 0;
    for (std::size_t i = 0; i < cert.factorization.factors.size(); ++i) {
        const IntPoly& f = cert.factorization.factors[i].poly;
        if (count_roots(sturm_sequence(f), lo, hi) == 1) {
            cert.perron_factor = i;
            ++hits;
        }
    }
    if (hits != 1) throw std::logic_error("dominant root not attributed to exactly one factor");
    cert.degree = cert.perron_poly().degree();
    cert.refine(opt.relative_width);
    return cert;
}

} // namespace pacert
