#pragma once

#include <gmpxx.h>

#include <vector>

#include "cospec/graph.hpp"

namespace cospec {

using BigInt = mpz_class;
using Rational = mpq_class;

// Canonicalized rational p/q (lowest terms, positive denominator).
Rational make_rational(long num, long den);
Rational make_rational(const BigInt& num, const BigInt& den);

// Dense matrix of exact rationals; entries are always canonical.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols);

    static RatMatrix identity(int n);
    static RatMatrix adjacency(const Graph& g);
    static RatMatrix column(const std::vector<Rational>& v);
    static RatMatrix permutation(const std::vector<int>& p); // P e_j = e_{p[j]}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& operator()(int i, int j) { return a_[index(i, j)]; }
    const Rational& operator()(int i, int j) const { return a_[index(i, j)]; }

    RatMatrix transpose() const;
    Rational trace() const;

    bool operator==(const RatMatrix&) const = default;

private:
    std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * cols_ + j; }

    int rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator*(const Rational& s, const RatMatrix& a);
std::vector<Rational> operator*(const RatMatrix& a, const std::vector<Rational>& v);

// Integer polynomial, ascending coefficients, trimmed; empty == zero.
struct IntPoly {
    std::vector<BigInt> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    BigInt eval(const BigInt& x) const;
    void trim();

    bool operator==(const IntPoly&) const = default;
};

IntPoly poly_add(const IntPoly& a, const IntPoly& b);
IntPoly poly_sub(const IntPoly& a, const IntPoly& b);
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);

// det(xI - m) by the Faddeev-LeVerrier recurrence over exact rationals;
// ascending coefficients, monic of degree n.
std::vector<Rational> charpoly_rational(const RatMatrix& m);

// Same, asserting integer coefficients (always the case for integer
// matrices); throws std::domain_error otherwise.
IntPoly charpoly_exact(const RatMatrix& m);
IntPoly charpoly_exact(const Graph& g);

// Exact rank over the rationals (fraction-free elimination on the
// denominator-cleared integer matrix).
int rank_exact(const RatMatrix& m);

// For m with one-dimensional kernel: the integral kernel vector with
// gcd of entries 1 and first nonzero entry positive. Throws
// std::domain_error when the nullity is not exactly 1.
std::vector<BigInt> integer_kernel_vector(const RatMatrix& m);

} // namespace cospec
