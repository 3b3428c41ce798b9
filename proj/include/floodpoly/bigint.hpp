#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace floodpoly {

/// Arbitrary-precision signed integer: sign + base-2^32 magnitude.
///
/// Deliberately small. Polynomial coefficients only ever need add, subtract,
/// multiply, comparisons and decimal I/O; synthetic division at -1 is pure
/// add/subtract, so no general division is implemented.
class BigInt {
public:
    BigInt() = default; // zero
    BigInt(std::int64_t value);

    static BigInt from_string(std::string_view text); // throws ParseError

    bool is_zero() const { return mag_.empty(); }
    int sign() const { return is_zero() ? 0 : (negative_ ? -1 : 1); }

    std::string to_string() const;
    /// Throws std::overflow_error when negative or out of range.
    std::uint64_t to_uint64() const;
    std::int64_t to_int64() const;
    bool fits_uint64() const;

    BigInt operator-() const;
    BigInt& operator+=(const BigInt& rhs);
    BigInt& operator-=(const BigInt& rhs);
    BigInt& operator*=(const BigInt& rhs);

    friend BigInt operator+(BigInt lhs, const BigInt& rhs) { return lhs += rhs; }
    friend BigInt operator-(BigInt lhs, const BigInt& rhs) { return lhs -= rhs; }
    friend BigInt operator*(const BigInt& lhs, const BigInt& rhs);

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.negative_ == b.negative_ && a.mag_ == b.mag_;
    }
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b);

private:
    bool negative_ = false;              // never true for zero
    std::vector<std::uint32_t> mag_;     // little-endian limbs, no leading zeros

    void trim();
    static int compare_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static void add_mag(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static void sub_mag(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b); // |a| >= |b|
    void mul_small_add(std::uint32_t factor, std::uint32_t addend); // |this| = |this|*factor + addend
    std::uint32_t divmod_small(std::uint32_t divisor);              // returns remainder
};

/// Exact C(n, k) via Pascal's rule (no division).
BigInt binomial(unsigned n, unsigned k);

} // namespace floodpoly
