#pragma once

#include "pacert/bigint.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace pacert {

class IntPoly;

// Dense row-major matrix over Z.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix companion(const IntPoly& monic);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Integer& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix scaled(const Integer& s) const;
    IntMatrix transpose() const;
    bool operator==(const IntMatrix& o) const = default;

    bool is_zero() const;
    bool is_nonnegative() const;
    bool is_positive() const;

    std::vector<std::vector<std::string>> to_strings() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Integer> a_;
};

// Fraction-free (Bareiss) elimination.
std::size_t rank(const IntMatrix& m);
Integer det(const IntMatrix& m);

// det(xI - M), Berkowitz; division free, monic.
IntPoly char_poly(const IntMatrix& m);

// p(M) by Horner.
IntMatrix evaluate(const IntPoly& p, const IntMatrix& m);

// Some power B^k, k <= dim^2, of the zero pattern is strictly positive.
// Entries must be nonnegative. `power_found` receives the first such k.
bool is_primitive(const IntMatrix& m, std::size_t* power_found = nullptr);

} // namespace pacert
