#include "pacert/bigint.hpp"

#include <cstdio>
#include <stdexcept>

namespace pacert {

std::string to_string(const Integer& z) { return z.get_str(10); }

std::string to_string(const Rational& q) { return q.get_str(10); }

Integer parse_integer(const std::string& s) {
    Integer z;
    if (s.empty() || z.set_str(s, 10) != 0) throw std::invalid_argument("not an integer: '" + s + "'");
    return z;
}

std::size_t decimal_digits(const Integer& z) {
    if (z == 0) return 1;
    Integer a = abs(z);
    std::size_t n = mpz_sizeinbase(a.get_mpz_t(), 10);
    // sizeinbase may overshoot by one
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(n - 1));
    return a < p ? n - 1 : n;
}

std::string format_significant(const Rational& q, int digits) {
    if (q <= 0) throw std::invalid_argument("format_significant expects a positive value");
    // e = floor(log10 q)
    Integer num = q.get_num(), den = q.get_den();
    long e = static_cast<long>(decimal_digits(num)) - static_cast<long>(decimal_digits(den));
    auto pow10 = [](long k) {
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k));
        return p;
    };
    auto ge_pow = [&](long k) {  // q >= 10^k ?
        if (k >= 0) return num >= pow10(k) * den;
        return num * pow10(-k) >= den;
    };
    while (!ge_pow(e)) --e;
    while (ge_pow(e + 1)) ++e;
    long shift = digits - 1 - e;
    Integer scaled_num = num, scaled_den = den;
    if (shift >= 0) scaled_num *= pow10(shift);
    else scaled_den *= pow10(-shift);
    Integer n = (2 * scaled_num + scaled_den) / (2 * scaled_den);
    if (decimal_digits(n) > static_cast<std::size_t>(digits)) {
        n /= 10;
        ++e;
    }
    std::string d = n.get_str(10);
    std::string out;
    if (e >= 0 && e < digits) {
        out = d.substr(0, static_cast<std::size_t>(e) + 1);
        if (static_cast<std::size_t>(e) + 1 < d.size()) out += "." + d.substr(static_cast<std::size_t>(e) + 1);
    } else if (e < 0 && e > -6) {
        out = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + d;
    } else {
        out = d.substr(0, 1) + "." + d.substr(1) + "e" + (e >= 0 ? "+" : "") + std::to_string(e);
    }
    return out;
}

std::uint64_t fnv1a(const std::string& s, std::uint64_t h) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hex64(std::uint64_t h) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace pacert
