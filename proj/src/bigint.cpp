#include "floodpoly/bigint.hpp"

#include "floodpoly/errors.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace floodpoly {

BigInt::BigInt(std::int64_t value) {
    if (value == 0) return;
    negative_ = value < 0;
    // avoid UB on INT64_MIN
    std::uint64_t mag = negative_ ? ~static_cast<std::uint64_t>(value) + 1 : static_cast<std::uint64_t>(value);
    mag_.push_back(static_cast<std::uint32_t>(mag));
    if (mag >> 32) mag_.push_back(static_cast<std::uint32_t>(mag >> 32));
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) negative_ = false;
}

int BigInt::compare_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

void BigInt::add_mag(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t sum = carry + a[i] + (i < b.size() ? b[i] : 0);
        a[i] = static_cast<std::uint32_t>(sum);
        carry = sum >> 32;
    }
    if (carry) a.push_back(static_cast<std::uint32_t>(carry));
}

void BigInt::sub_mag(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t diff = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        borrow = diff < 0;
        if (diff < 0) diff += (std::int64_t{1} << 32);
        a[i] = static_cast<std::uint32_t>(diff);
    }
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
    if (negative_ == rhs.negative_) {
        add_mag(mag_, rhs.mag_);
    } else if (compare_mag(mag_, rhs.mag_) >= 0) {
        sub_mag(mag_, rhs.mag_);
    } else {
        std::vector<std::uint32_t> tmp = rhs.mag_;
        sub_mag(tmp, mag_);
        mag_ = std::move(tmp);
        negative_ = rhs.negative_;
    }
    trim();
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) {
    negative_ = !negative_;
    *this += rhs;
    if (!is_zero()) negative_ = !negative_;
    return *this;
}

BigInt operator*(const BigInt& lhs, const BigInt& rhs) {
    BigInt out;
    if (lhs.is_zero() || rhs.is_zero()) return out;
    out.mag_.assign(lhs.mag_.size() + rhs.mag_.size(), 0);
    for (std::size_t i = 0; i < lhs.mag_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < rhs.mag_.size(); ++j) {
            std::uint64_t cur = out.mag_[i + j] + carry +
                                static_cast<std::uint64_t>(lhs.mag_[i]) * rhs.mag_[j];
            out.mag_[i + j] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        out.mag_[i + rhs.mag_.size()] += static_cast<std::uint32_t>(carry);
    }
    out.negative_ = lhs.negative_ != rhs.negative_;
    out.trim();
    return out;
}

BigInt& BigInt::operator*=(const BigInt& rhs) {
    *this = *this * rhs;
    return *this;
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    if (!out.is_zero()) out.negative_ = !out.negative_;
    return out;
}

std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    if (a.negative_ != b.negative_) return a.negative_ ? std::strong_ordering::less : std::strong_ordering::greater;
    int cmp = BigInt::compare_mag(a.mag_, b.mag_);
    if (a.negative_) cmp = -cmp;
    if (cmp < 0) return std::strong_ordering::less;
    if (cmp > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

void BigInt::mul_small_add(std::uint32_t factor, std::uint32_t addend) {
    std::uint64_t carry = addend;
    for (std::uint32_t& limb : mag_) {
        std::uint64_t cur = static_cast<std::uint64_t>(limb) * factor + carry;
        limb = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
    }
    if (carry) mag_.push_back(static_cast<std::uint32_t>(carry));
    trim();
}

std::uint32_t BigInt::divmod_small(std::uint32_t divisor) {
    std::uint64_t rem = 0;
    for (std::size_t i = mag_.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | mag_[i];
        mag_[i] = static_cast<std::uint32_t>(cur / divisor);
        rem = cur % divisor;
    }
    trim();
    return static_cast<std::uint32_t>(rem);
}

BigInt BigInt::from_string(std::string_view text) {
    std::size_t pos = 0;
    bool neg = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        neg = text[pos] == '-';
        ++pos;
    }
    if (pos == text.size()) throw ParseError("empty integer literal");
    BigInt out;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (c < '0' || c > '9') throw ParseError("invalid digit in integer literal: " + std::string(text));
        out.mul_small_add(10, static_cast<std::uint32_t>(c - '0'));
    }
    if (!out.is_zero()) out.negative_ = neg;
    return out;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    BigInt tmp = *this;
    std::string digits;
    while (!tmp.is_zero()) {
        std::uint32_t chunk = tmp.divmod_small(1000000000u);
        std::string part = std::to_string(chunk);
        if (!tmp.is_zero()) part.insert(0, 9 - part.size(), '0');
        std::reverse(part.begin(), part.end());
        digits += part;
    }
    if (negative_) digits += '-';
    std::reverse(digits.begin(), digits.end());
    return digits;
}

bool BigInt::fits_uint64() const {
    return !negative_ && mag_.size() <= 2;
}

std::uint64_t BigInt::to_uint64() const {
    if (!fits_uint64()) throw std::overflow_error("BigInt does not fit in uint64: " + to_string());
    std::uint64_t out = 0;
    for (std::size_t i = mag_.size(); i-- > 0;) out = (out << 32) | mag_[i];
    return out;
}

std::int64_t BigInt::to_int64() const {
    if (mag_.size() > 2) throw std::overflow_error("BigInt does not fit in int64: " + to_string());
    std::uint64_t abs = 0;
    for (std::size_t i = mag_.size(); i-- > 0;) abs = (abs << 32) | mag_[i];
    if (negative_) {
        if (abs > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()) + 1)
            throw std::overflow_error("BigInt does not fit in int64: " + to_string());
        return static_cast<std::int64_t>(~abs + 1);
    }
    if (abs > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
        throw std::overflow_error("BigInt does not fit in int64: " + to_string());
    return static_cast<std::int64_t>(abs);
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return BigInt(0);
    if (k > n - k) k = n - k;
    std::vector<BigInt> row(k + 1, BigInt(0));
    row[0] = BigInt(1);
    for (unsigned i = 1; i <= n; ++i) {
        for (unsigned j = std::min(i, k); j > 0; --j) row[j] += row[j - 1];
    }
    return row[k];
}

} // namespace floodpoly
