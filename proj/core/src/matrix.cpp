#include "pacert/matrix.hpp"

#include "pacert/errors.hpp"
#include "pacert/poly.hpp"

#include <utility>

namespace pacert {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (auto& r : rows) {
        if (r.size() != cols_) throw DimensionError("ragged matrix literal");
        for (long v : r) a_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::companion(const IntPoly& p) {
    if (p.degree() < 1 || p.lc() != 1) throw DimensionError("companion matrix needs a monic polynomial of degree >= 1");
    auto n = static_cast<std::size_t>(p.degree());
    IntMatrix m(n, n);
    for (std::size_t i = 1; i < n; ++i) m(i, i - 1) = 1;
    for (std::size_t i = 0; i < n; ++i) m(i, n - 1) = -p.coeff(static_cast<int>(i));
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionError("matrix product: inner dimensions differ");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Integer& x = (*this)(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                if (o(k, j) != 0) r(i, j) += x * o(k, j);
        }
    return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum: shapes differ");
    IntMatrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix difference: shapes differ");
    IntMatrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

IntMatrix IntMatrix::scaled(const Integer& s) const {
    IntMatrix r = *this;
    for (auto& x : r.a_) x *= s;
    return r;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

bool IntMatrix::is_zero() const {
    for (auto& x : a_)
        if (x != 0) return false;
    return true;
}

bool IntMatrix::is_nonnegative() const {
    for (auto& x : a_)
        if (x < 0) return false;
    return true;
}

bool IntMatrix::is_positive() const {
    for (auto& x : a_)
        if (x <= 0) return false;
    return true;
}

std::vector<std::vector<std::string>> IntMatrix::to_strings() const {
    std::vector<std::vector<std::string>> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i].push_back((*this)(i, j).get_str());
    return out;
}

namespace {

// Row echelon by Bareiss; returns rank and accumulates the row-swap sign.
std::size_t bareiss(IntMatrix& m, int* sign) {
    const std::size_t R = m.rows(), C = m.cols();
    std::size_t r = 0;
    Integer prev = 1;
    int s = 1;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t piv = r;
        while (piv < R && m(piv, c) == 0) ++piv;
        if (piv == R) continue;
        if (piv != r) {
            for (std::size_t j = 0; j < C; ++j) std::swap(m(piv, j), m(r, j));
            s = -s;
        }
        for (std::size_t i = r + 1; i < R; ++i) {
            for (std::size_t j = c + 1; j < C; ++j) {
                Integer t = m(i, j) * m(r, c) - m(i, c) * m(r, j);
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, c) = 0;
        }
        prev = m(r, c);
        ++r;
    }
    if (sign) *sign = s;
    return r;
}

} // namespace

std::size_t rank(const IntMatrix& m) {
    IntMatrix w = m;
    return bareiss(w, nullptr);
}

Integer det(const IntMatrix& m) {
    if (!m.square()) throw DimensionError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix w = m;
    int s = 1;
    if (bareiss(w, &s) < n) return 0;
    return s * w(n - 1, n - 1);
}

IntPoly char_poly(const IntMatrix& m) {
    if (!m.square()) throw DimensionError("characteristic polynomial of a non-square matrix");
    const std::size_t n = m.rows();
    // descending coefficients of det(xI - A_k), A_k the leading k x k block
    std::vector<Integer> p{1};
    for (std::size_t k = 0; k < n; ++k) {
        const Integer& a = m(k, k);
        // s_t = r A_k^t c with r = row k, c = column k restricted to the block
        std::vector<Integer> s(k);
        std::vector<Integer> w(k);
        for (std::size_t i = 0; i < k; ++i) w[i] = m(i, k);
        for (std::size_t t = 0; t < k; ++t) {
            Integer acc = 0;
            for (std::size_t i = 0; i < k; ++i) acc += m(k, i) * w[i];
            s[t] = acc;
            if (t + 1 < k) {
                std::vector<Integer> nw(k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j)
                        if (m(i, j) != 0) nw[i] += m(i, j) * w[j];
                w.swap(nw);
            }
        }
        std::vector<Integer> q(k + 2);
        for (std::size_t i = 0; i <= k + 1; ++i) {
            if (i <= k) q[i] = p[i];
            if (i >= 1) q[i] -= a * p[i - 1];
        }
        for (std::size_t j = 0; j < k; ++j) {
            Integer acc = 0;
            for (std::size_t i = 0; i <= j; ++i) acc += p[i] * s[j - i];
            q[j + 2] -= acc;
        }
        p.swap(q);
    }
    std::vector<Integer> asc(p.rbegin(), p.rend());
    return IntPoly(std::move(asc));
}

IntMatrix evaluate(const IntPoly& p, const IntMatrix& m) {
    if (!m.square()) throw DimensionError("polynomial evaluation at a non-square matrix");
    IntMatrix acc(m.rows(), m.cols());
    for (int i = p.degree(); i >= 0; --i) acc = acc * m + IntMatrix::identity(m.rows()).scaled(p.coeff(i));
    return acc;
}

bool is_primitive(const IntMatrix& m, std::size_t* power_found) {
    if (!m.square()) throw DimensionError("primitivity of a non-square matrix");
    if (!m.is_nonnegative()) throw DimensionError("primitivity test needs a nonnegative matrix");
    const std::size_t n = m.rows();
    if (n == 0) return false;
    std::vector<char> b(n * n), cur;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b[i * n + j] = m(i, j) > 0;
    cur = b;
    auto all = [&](const std::vector<char>& x) {
        for (char c : x)
            if (!c) return false;
        return true;
    };
    for (std::size_t k = 1; k <= n * n; ++k) {
        if (all(cur)) {
            if (power_found) *power_found = k;
            return true;
        }
        std::vector<char> nx(n * n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l)
                if (cur[i * n + l])
                    for (std::size_t j = 0; j < n; ++j)
                        if (b[l * n + j]) nx[i * n + j] = 1;
        if (nx == cur && k > 1) break;  // pattern stabilised without being positive
        cur.swap(nx);
    }
    return false;
}

} // namespace pacert
