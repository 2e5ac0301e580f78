#include "pacert/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace pacert {

IntPoly::IntPoly(std::vector<Integer> ascending) : c_(std::move(ascending)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> ascending) {
    for (long v : ascending) c_.emplace_back(v);
    trim();
}

IntPoly IntPoly::monomial(const Integer& c, int degree) {
    std::vector<Integer> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::x_minus(const Integer& a) { return IntPoly(std::vector<Integer>{-a, Integer(1)}); }

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Integer IntPoly::coeff(int i) const {
    if (i < 0 || i > degree()) return 0;
    return c_[static_cast<std::size_t>(i)];
}

Integer IntPoly::content() const {
    Integer g = 0;
    for (auto& x : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return {};
    Integer g = content();
    if (lc() < 0) g = -g;
    std::vector<Integer> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) mpz_divexact(v[i].get_mpz_t(), c_[i].get_mpz_t(), g.get_mpz_t());
    return IntPoly(std::move(v));
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Integer> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return IntPoly(std::move(v));
}

IntPoly IntPoly::negated() const {
    IntPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

IntPoly IntPoly::reversed() const {
    std::vector<Integer> v(c_.rbegin(), c_.rend());
    return IntPoly(std::move(v));
}

bool IntPoly::is_reciprocal() const {
    if (is_zero()) return false;
    IntPoly r = reversed();
    return r.degree() == degree() && (r == *this || r == negated());
}

Integer IntPoly::eval(const Integer& x) const {
    Integer acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int IntPoly::sign_at(const Rational& x) const {
    const Integer& a = x.get_num();
    const Integer& b = x.get_den();
    // b^d p(a/b), b > 0
    Integer acc = 0, bp = 1;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * a + *it * bp;
        bp *= b;
    }
    return sgn(acc);
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Integer> v(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<Integer> v(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Integer> v(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    }
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const Integer& s) const {
    std::vector<Integer> v = c_;
    for (auto& x : v) x *= s;
    return IntPoly(std::move(v));
}

bool IntPoly::operator<(const IntPoly& o) const {
    if (degree() != o.degree()) return degree() < o.degree();
    for (int i = degree(); i >= 0; --i)
        if (c_[static_cast<std::size_t>(i)] != o.c_[static_cast<std::size_t>(i)])
            return c_[static_cast<std::size_t>(i)] < o.c_[static_cast<std::size_t>(i)];
    return false;
}

bool IntPoly::divides_by(const IntPoly& d, IntPoly* quotient) const {
    if (d.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    std::vector<Integer> r = c_;
    if (degree() < d.degree()) {
        if (quotient) *quotient = {};
        return is_zero();
    }
    std::vector<Integer> q(static_cast<std::size_t>(degree() - d.degree()) + 1);
    const Integer& l = d.lc();
    const std::size_t dd = static_cast<std::size_t>(d.degree());
    for (int k = degree() - d.degree(); k >= 0; --k) {
        Integer& top = r[static_cast<std::size_t>(k) + dd];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), l.get_mpz_t())) return false;
        Integer t;
        mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), l.get_mpz_t());
        for (std::size_t i = 0; i <= dd; ++i) r[static_cast<std::size_t>(k) + i] -= t * d.c_[i];
        q[static_cast<std::size_t>(k)] = t;
    }
    for (auto& x : r)
        if (x != 0) return false;
    if (quotient) *quotient = IntPoly(std::move(q));
    return true;
}

std::pair<IntPoly, IntPoly> IntPoly::pseudo_divmod(const IntPoly& d) const {
    if (d.is_zero()) throw std::invalid_argument("pseudo division by the zero polynomial");
    if (degree() < d.degree()) return {IntPoly{}, *this};
    std::vector<Integer> r = c_;
    const std::size_t dd = static_cast<std::size_t>(d.degree());
    const int steps = degree() - d.degree() + 1;
    std::vector<Integer> q(static_cast<std::size_t>(steps));
    const Integer& l = d.lc();
    for (int k = steps - 1; k >= 0; --k) {
        Integer t = r[static_cast<std::size_t>(k) + dd];
        for (auto& x : r) x *= l;
        for (auto& x : q) x *= l;
        if (t != 0) {
            for (std::size_t i = 0; i <= dd; ++i) r[static_cast<std::size_t>(k) + i] -= t * d.c_[i];
            q[static_cast<std::size_t>(k)] += t;
        }
    }
    return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

std::string IntPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        const Integer& c = c_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Integer a = abs(c);
        if (s.empty()) s += c < 0 ? "-" : "";
        else s += c < 0 ? " - " : " + ";
        bool unit = a == 1 && i > 0;
        if (!unit) s += a.get_str();
        if (i > 0) {
            if (!unit) s += "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

std::vector<std::string> IntPoly::to_strings() const {
    std::vector<std::string> v;
    for (auto& x : c_) v.push_back(x.get_str());
    return v;
}

IntPoly gcd(const IntPoly& a0, const IntPoly& b0) {
    IntPoly a = a0.primitive_part(), b = b0.primitive_part();
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = a.pseudo_divmod(b).second;
        a = b;
        b = r.primitive_part();
    }
    return a;
}

static IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
    IntPoly q;
    if (!a.divides_by(b, &q)) throw std::logic_error("inexact polynomial division");
    return q;
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p) {
    std::vector<std::pair<IntPoly, int>> out;
    IntPoly f = p.primitive_part();
    if (f.degree() < 1) return out;
    IntPoly fp = f.derivative();
    IntPoly g = gcd(f, fp);
    IntPoly c = exact_div(f, g);
    IntPoly d = exact_div(fp, g) - c.derivative();
    int i = 1;
    while (c.degree() >= 1) {
        IntPoly a = gcd(c, d);
        if (a.degree() >= 1) out.emplace_back(a, i);
        c = exact_div(c, a);
        d = exact_div(d, a) - c.derivative();
        ++i;
    }
    return out;
}

IntPoly squarefree_part(const IntPoly& p) {
    IntPoly f = p.primitive_part();
    if (f.degree() < 1) return f;
    return exact_div(f, gcd(f, f.derivative())).primitive_part();
}

std::vector<IntPoly> sturm_sequence(const IntPoly& p) {
    std::vector<IntPoly> seq;
    if (p.is_zero()) return seq;
    seq.push_back(p);
    IntPoly d = p.derivative();
    if (d.is_zero()) return seq;
    seq.push_back(d);
    for (;;) {
        const IntPoly& a = seq[seq.size() - 2];
        const IntPoly& b = seq.back();
        if (b.degree() == 0) break;
        IntPoly r = a.pseudo_divmod(b).second;
        if (r.is_zero()) break;
        // the multiplier lc(b)^(da-db+1) may be negative
        int delta = a.degree() - b.degree() + 1;
        bool neg_mult = b.lc() < 0 && (delta % 2 == 1);
        if (!neg_mult) r = r.negated();
        Integer c = r.content();
        IntPoly rr = r;
        if (c > 1) {
            std::vector<Integer> v = r.coeffs();
            for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
            rr = IntPoly(std::move(v));
        }
        seq.push_back(rr);
    }
    return seq;
}

int sign_variations(const std::vector<IntPoly>& seq, const Rational& x) {
    int v = 0, last = 0;
    for (auto& p : seq) {
        int s = p.sign_at(x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

int count_roots(const std::vector<IntPoly>& seq, const Rational& lo, const Rational& hi) {
    return sign_variations(seq, lo) - sign_variations(seq, hi);
}

Rational cauchy_bound(const IntPoly& p) {
    if (p.degree() < 1) return 1;
    Rational m = 0;
    Integer l = abs(p.lc());
    for (int i = 0; i < p.degree(); ++i) {
        Rational q(abs(p.coeff(i)), l);
        q.canonicalize();
        if (q > m) m = q;
    }
    return m + 1;
}

} // namespace pacert
