#pragma once

#include "floodpoly/bigint.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace floodpoly {

/// Dense exact-integer univariate polynomial. coeffs()[k] is the coefficient
/// of x^k; normalized so the highest stored coefficient is nonzero (the zero
/// polynomial stores nothing).
class IntPolynomial {
public:
    IntPolynomial() = default; // zero
    explicit IntPolynomial(std::vector<BigInt> coeffs);

    static IntPolynomial constant(BigInt c);
    static IntPolynomial monomial(BigInt c, std::size_t k);
    static IntPolynomial x() { return monomial(BigInt(1), 1); }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; } // -1 for zero
    const BigInt& coeff(std::size_t k) const;                          // zero beyond degree
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    const BigInt& leading_coeff() const; // throws std::domain_error on zero

    IntPolynomial& operator+=(const IntPolynomial& rhs);
    IntPolynomial& operator-=(const IntPolynomial& rhs);
    friend IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs += rhs; }
    friend IntPolynomial operator-(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs -= rhs; }
    friend IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs);
    IntPolynomial& operator*=(const IntPolynomial& rhs);

    /// Multiply by x^k.
    IntPolynomial shifted(std::size_t k) const;

    /// Exact Horner evaluation.
    BigInt eval(const BigInt& t) const;

    /// Largest s with (x+1)^s dividing the polynomial, by repeated exact
    /// synthetic division at -1. Throws std::domain_error on the zero
    /// polynomial.
    std::size_t multiplicity_x_plus_1() const;

    /// "x^4 + 4x^3 + 2x^2" style, descending powers; "0" for zero.
    std::string to_string() const;
    /// Inverse of to_string; accepts any `term (+- term)*` with optional
    /// coefficients and exponents. Throws ParseError.
    static IntPolynomial parse(std::string_view text);

    /// Exact coefficient-vector key, usable for grouping and hashing.
    std::string key() const;

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    std::vector<BigInt> coeffs_;
    void normalize();
};

} // namespace floodpoly
