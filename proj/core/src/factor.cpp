#include "pacert/factor.hpp"

#include "pacert/errors.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace pacert {

namespace modp {

namespace {

using u64 = std::uint64_t;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

u64 mulm(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }

u64 powm(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulm(r, a, p);
        a = mulm(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 invm(u64 a, u64 p) { return powm(a, p - 2, p); }

int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly sub(const Poly& a, const Poly& b, u64 p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
    trim(r);
    return r;
}

Poly mul(const Poly& a, const Poly& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    std::vector<unsigned __int128> acc(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += static_cast<unsigned __int128>(a[i]) * b[j];
    }
    Poly r(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<u64>(acc[i] % p);
    trim(r);
    return r;
}

// a = q b + r
void divmod(const Poly& a, const Poly& b, u64 p, Poly* q, Poly* r) {
    if (b.empty()) throw std::invalid_argument("mod-p division by zero");
    Poly rem = a;
    trim(rem);
    Poly quo;
    if (deg(rem) >= deg(b)) quo.assign(rem.size() - b.size() + 1, 0);
    u64 inv = invm(b.back(), p);
    while (!rem.empty() && deg(rem) >= deg(b)) {
        std::size_t k = rem.size() - b.size();
        u64 t = mulm(rem.back(), inv, p);
        quo[k] = t;
        for (std::size_t i = 0; i < b.size(); ++i) rem[k + i] = (rem[k + i] + p - mulm(t, b[i], p)) % p;
        trim(rem);
    }
    if (q) {
        trim(quo);
        *q = quo;
    }
    if (r) *r = rem;
}

Poly mod(const Poly& a, const Poly& b, u64 p) {
    Poly r;
    divmod(a, b, p, nullptr, &r);
    return r;
}

Poly monic(const Poly& a, u64 p) {
    if (a.empty()) return a;
    u64 inv = invm(a.back(), p);
    Poly r = a;
    for (auto& x : r) x = mulm(x, inv, p);
    return r;
}

Poly gcd(Poly a, Poly b, u64 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a, p);
}

// s a + t b = g (monic)
Poly xgcd(const Poly& a0, const Poly& b0, u64 p, Poly* s, Poly* t) {
    Poly r0 = a0, r1 = b0, s0{1}, s1{}, t0{}, t1{1};
    trim(r0);
    trim(r1);
    while (!r1.empty()) {
        Poly q, r;
        divmod(r0, r1, p, &q, &r);
        Poly s2 = sub(s0, mul(q, s1, p), p);
        Poly t2 = sub(t0, mul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    u64 inv = invm(r0.back(), p);
    for (auto& x : s0) x = mulm(x, inv, p);
    for (auto& x : t0) x = mulm(x, inv, p);
    for (auto& x : r0) x = mulm(x, inv, p);
    trim(s0);
    trim(t0);
    *s = s0;
    *t = t0;
    return r0;
}

Poly derivative(const Poly& a, u64 p) {
    if (a.size() <= 1) return {};
    Poly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mulm(a[i], i % p, p);
    trim(r);
    return r;
}

// a^e mod f, e given as a big integer
Poly powmod(const Poly& a, const Integer& e, const Poly& f, u64 p) {
    Poly r{1}, b = mod(a, f, p);
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = mod(mul(r, r, p), f, p);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = mod(mul(r, b, p), f, p);
    }
    return r;
}

// distinct degree factorisation of a monic squarefree f
std::vector<std::pair<Poly, int>> ddf(Poly f, u64 p) {
    std::vector<std::pair<Poly, int>> out;
    Poly x{0, 1};
    Poly h = x;
    int d = 0;
    while (deg(f) >= 2 * (d + 1)) {
        ++d;
        h = powmod(h, Integer(static_cast<unsigned long>(p)), f, p);
        Poly g = gcd(sub(h, x, p), f, p);
        if (deg(g) > 0) {
            out.emplace_back(g, d);
            Poly q;
            divmod(f, g, p, &q, nullptr);
            f = q;
            h = mod(h, f, p);
        }
    }
    if (deg(f) > 0) out.emplace_back(f, deg(f));
    return out;
}

void edf(const Poly& g, int d, u64 p, std::mt19937_64& rng, std::vector<Poly>& out) {
    if (deg(g) == d) {
        out.push_back(g);
        return;
    }
    Integer e;
    mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
    e = (e - 1) / 2;
    for (;;) {
        Poly a(static_cast<std::size_t>(deg(g)));
        for (auto& c : a) c = rng() % p;
        trim(a);
        if (deg(a) < 1) continue;
        Poly b = powmod(a, e, g, p);
        b = sub(b, Poly{1}, p);
        Poly f1 = gcd(b, g, p);
        if (deg(f1) > 0 && deg(f1) < deg(g)) {
            Poly f2;
            divmod(g, f1, p, &f2, nullptr);
            edf(f1, d, p, rng, out);
            edf(monic(f2, p), d, p, rng, out);
            return;
        }
    }
}

} // namespace

Poly reduce(const IntPoly& f, std::uint64_t p) {
    Poly r(f.coeffs().size());
    Integer t;
    for (std::size_t i = 0; i < r.size(); ++i) {
        mpz_fdiv_r_ui(t.get_mpz_t(), f.coeffs()[i].get_mpz_t(), static_cast<unsigned long>(p));
        r[i] = t.get_ui();
    }
    trim(r);
    return r;
}

bool is_squarefree(const Poly& f, std::uint64_t p) {
    Poly d = derivative(f, p);
    if (d.empty()) return false;
    return deg(gcd(f, d, p)) == 0;
}

std::vector<Poly> factor_monic_squarefree(const Poly& f, std::uint64_t p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Poly> out;
    for (auto& [g, d] : ddf(f, p)) edf(g, d, p, rng, out);
    std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });
    return out;
}

bool is_irreducible(const Poly& f, std::uint64_t p) {
    if (deg(f) < 1) return false;
    Poly m = monic(f, p);
    if (!is_squarefree(m, p)) return false;
    auto parts = ddf(m, p);
    return parts.size() == 1 && parts[0].second == deg(m);
}

} // namespace modp

namespace {

using modp::Poly;

const std::vector<std::uint64_t>& odd_primes() {
    static const std::vector<std::uint64_t> primes = [] {
        std::vector<std::uint64_t> v;
        const std::uint64_t limit = 20000;
        std::vector<char> sieve(limit, 1);
        for (std::uint64_t i = 2; i < limit; ++i) {
            if (!sieve[i]) continue;
            if (i > 2) v.push_back(i);
            for (std::uint64_t j = i * i; j < limit; j += i) sieve[j] = 0;
        }
        return v;
    }();
    return primes;
}

IntPoly lift_poly(const Poly& a) {
    std::vector<Integer> v;
    v.reserve(a.size());
    for (auto x : a) v.emplace_back(static_cast<unsigned long>(x));
    return IntPoly(std::move(v));
}

// Coefficients reduced into [0, m).
IntPoly reduce_nonneg(const IntPoly& f, const Integer& m) {
    std::vector<Integer> v = f.coeffs();
    for (auto& x : v) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return IntPoly(std::move(v));
}

// Coefficients reduced into (-m/2, m/2].
IntPoly reduce_symmetric(const IntPoly& f, const Integer& m) {
    std::vector<Integer> v = f.coeffs();
    Integer half = m / 2;
    for (auto& x : v) {
        mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
        if (x > half) x -= m;
    }
    return IntPoly(std::move(v));
}

// a = q h + r mod m with h monic
void divmod_monic(const IntPoly& a, const IntPoly& h, const Integer& m, IntPoly* q, IntPoly* r) {
    std::vector<Integer> rem = reduce_nonneg(a, m).coeffs();
    const int dh = h.degree();
    std::vector<Integer> quo;
    if (static_cast<int>(rem.size()) - 1 >= dh) quo.assign(rem.size() - static_cast<std::size_t>(dh), 0);
    for (int k = static_cast<int>(rem.size()) - 1 - dh; k >= 0; --k) {
        Integer t = rem[static_cast<std::size_t>(k + dh)];
        mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), m.get_mpz_t());
        if (t == 0) continue;
        quo[static_cast<std::size_t>(k)] = t;
        for (int i = 0; i <= dh; ++i) {
            Integer& x = rem[static_cast<std::size_t>(k + i)];
            x -= t * h.coeffs()[static_cast<std::size_t>(i)];
            mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
        }
    }
    if (q) *q = reduce_nonneg(IntPoly(quo), m);
    if (r) {
        rem.resize(static_cast<std::size_t>(std::max(dh, 0)));
        *r = reduce_nonneg(IntPoly(rem), m);
    }
}

Integer inverse_mod(const Integer& a, const Integer& m) {
    Integer r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) throw std::logic_error("non-invertible leading coefficient");
    return r;
}

// One quadratic Hensel step: f = g h mod m, s g + t h = 1 mod m, h monic.
void hensel_step(const IntPoly& f, IntPoly& g, IntPoly& h, IntPoly& s, IntPoly& t, const Integer& m) {
    Integer m2 = m * m;
    IntPoly e = reduce_nonneg(f - g * h, m2);
    IntPoly q, r;
    divmod_monic(s * e, h, m2, &q, &r);
    IntPoly g2 = reduce_nonneg(g + t * e + q * g, m2);
    IntPoly h2 = reduce_nonneg(h + r, m2);
    IntPoly b = reduce_nonneg(s * g2 + t * h2 - IntPoly{1}, m2);
    IntPoly c, d;
    divmod_monic(s * b, h2, m2, &c, &d);
    IntPoly s2 = reduce_nonneg(s - d, m2);
    IntPoly t2 = reduce_nonneg(t - t * b - c * g2, m2);
    g = g2;
    h = h2;
    s = s2;
    t = t2;
}

// Lift f = lc * prod u_i (mod p) to monic factors mod p^(2^j) >= bound.
std::vector<IntPoly> multifactor_lift(const IntPoly& f, const std::vector<Poly>& us, std::uint64_t p, const Integer& bound,
                                      Integer* modulus) {
    Integer P(static_cast<unsigned long>(p));
    int steps = 0;
    Integer M = P;
    while (M <= bound) {
        M *= M;
        ++steps;
    }
    *modulus = M;
    std::vector<IntPoly> lifted;
    IntPoly cur = reduce_nonneg(f, M);
    for (std::size_t i = 0; i + 1 < us.size(); ++i) {
        const Integer lc = cur.lc();
        // g carries the leading coefficient, h is the monic rest
        Poly hp{1};
        for (std::size_t j = i + 1; j < us.size(); ++j) hp = modp::mul(hp, us[j], p);
        Poly gp = us[i];
        std::uint64_t lcp = modp::reduce(IntPoly(std::vector<Integer>{lc}), p)[0];
        for (auto& x : gp) x = modp::mulm(x, lcp, p);
        Poly sp, tp;
        modp::xgcd(gp, hp, p, &sp, &tp);
        IntPoly g = lift_poly(gp), h = lift_poly(hp), s = lift_poly(sp), t = lift_poly(tp);
        Integer m = P;
        for (int k = 0; k < steps; ++k) {
            hensel_step(reduce_nonneg(cur, m * m), g, h, s, t, m);
            m *= m;
        }
        Integer inv = inverse_mod(lc, M);
        lifted.push_back(reduce_nonneg(g * inv, M));
        cur = h;
    }
    lifted.push_back(reduce_nonneg(cur, M));
    return lifted;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t r) {
    const std::size_t s = idx.size();
    for (std::size_t i = s; i-- > 0;) {
        if (idx[i] < r - s + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

Integer norm2_ceil(const IntPoly& f) {
    Integer s = 0;
    for (auto& c : f.coeffs()) s += c * c;
    Integer r = sqrt(s);
    if (r * r < s) r += 1;
    return r;
}

} // namespace

std::vector<IntPoly> factor_squarefree(const IntPoly& f0, const FactorOptions& opt) {
    IntPoly f = f0.primitive_part();
    if (f.degree() <= 1) return {f};
    // choose the good prime with fewest modular factors
    std::uint64_t best_p = 0;
    std::vector<Poly> best;
    int good = 0;
    for (std::uint64_t p : odd_primes()) {
        if (mpz_divisible_ui_p(f.lc().get_mpz_t(), static_cast<unsigned long>(p))) continue;
        Poly fp = modp::reduce(f, p);
        if (static_cast<int>(fp.size()) - 1 != f.degree()) continue;
        Poly m = modp::monic(fp, p);
        if (!modp::is_squarefree(m, p)) continue;
        auto fac = modp::factor_monic_squarefree(m, p, opt.seed ^ p);
        if (best_p == 0 || fac.size() < best.size()) {
            best_p = p;
            best = fac;
        }
        if (best.size() == 1) return {f};
        if (++good >= opt.primes_to_try) break;
    }
    if (best_p == 0) throw std::logic_error("no suitable prime for modular factorisation");

    const int n = f.degree();
    Integer bound = 2 * abs(f.lc()) * norm2_ceil(f);
    bound <<= static_cast<unsigned long>(n);
    Integer M;
    std::vector<IntPoly> us = multifactor_lift(f, best, best_p, bound, &M);

    std::vector<IntPoly> result;
    IntPoly cur = f;
    std::vector<IntPoly> pool = us;
    long tested = 0;
    const long cap = 1L << opt.max_recombination_log2;
    for (std::size_t s = 1; 2 * s <= pool.size(); ++s) {
        bool restart = true;
        while (restart) {
            restart = false;
            const std::size_t r = pool.size();
            if (2 * s > r) break;
            std::vector<std::size_t> idx(s);
            for (std::size_t i = 0; i < s; ++i) idx[i] = i;
            for (;;) {
                if (++tested > cap)
                    throw ResourceError("factor recombination exceeded the subset cap", static_cast<double>(tested),
                                        static_cast<double>(cap));
                IntPoly g = IntPoly{1} * cur.lc();
                for (auto i : idx) g = reduce_symmetric(g * pool[i], M);
                IntPoly cand = g.primitive_part();
                IntPoly q;
                if (cand.degree() >= 1 && cur.divides_by(cand, &q)) {
                    result.push_back(cand);
                    cur = q.primitive_part();
                    std::vector<IntPoly> rest;
                    for (std::size_t i = 0, k = 0; i < r; ++i) {
                        if (k < s && idx[k] == i) {
                            ++k;
                            continue;
                        }
                        rest.push_back(pool[i]);
                    }
                    pool.swap(rest);
                    restart = true;
                    break;
                }
                if (!next_combination(idx, r)) break;
            }
        }
    }
    if (cur.degree() >= 1) result.push_back(cur);
    std::sort(result.begin(), result.end());
    return result;
}

IntPoly Factorization::expand() const {
    IntPoly r = IntPoly{1} * unit;
    for (auto& f : factors)
        for (int i = 0; i < f.multiplicity; ++i) r *= f.poly;
    return r;
}

int Factorization::total_degree() const {
    int d = 0;
    for (auto& f : factors) d += f.poly.degree() * f.multiplicity;
    return d;
}

Factorization factor_over_z(const IntPoly& p, const FactorOptions& opt) {
    if (p.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
    Factorization out;
    out.unit = p.content();
    if (p.lc() < 0) out.unit = -out.unit;
    if (p.degree() == 0) return out;
    for (auto& [s, mult] : squarefree_decomposition(p))
        for (auto& g : factor_squarefree(s, opt)) out.factors.push_back({g, mult});
    std::sort(out.factors.begin(), out.factors.end(), [](const Factor& a, const Factor& b) {
        if (a.poly == b.poly) return a.multiplicity < b.multiplicity;
        return a.poly < b.poly;
    });
    return out;
}

std::uint64_t modular_irreducibility_witness(const IntPoly& f0, int primes_to_try) {
    IntPoly f = f0.primitive_part();
    if (f.degree() < 1) return 0;
    int tried = 0;
    for (std::uint64_t p : odd_primes()) {
        if (mpz_divisible_ui_p(f.lc().get_mpz_t(), static_cast<unsigned long>(p))) continue;
        Poly fp = modp::reduce(f, p);
        if (static_cast<int>(fp.size()) - 1 != f.degree()) continue;
        if (modp::is_irreducible(fp, p)) return p;
        if (++tried >= primes_to_try) break;
    }
    return 0;
}

} // namespace pacert
