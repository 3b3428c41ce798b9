#include "floodpoly/poly.hpp"

#include "floodpoly/errors.hpp"

#include <cctype>
#include <stdexcept>

namespace floodpoly {

namespace {
const BigInt kZero(0);
} // namespace

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

void IntPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::constant(BigInt c) {
    return monomial(std::move(c), 0);
}

IntPolynomial IntPolynomial::monomial(BigInt c, std::size_t k) {
    IntPolynomial out;
    if (c.is_zero()) return out;
    out.coeffs_.assign(k + 1, BigInt(0));
    out.coeffs_[k] = std::move(c);
    return out;
}

const BigInt& IntPolynomial::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : kZero;
}

const BigInt& IntPolynomial::leading_coeff() const {
    if (is_zero()) throw std::domain_error("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), BigInt(0));
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    normalize();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), BigInt(0));
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    normalize();
    return *this;
}

IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs) {
    IntPolynomial out;
    if (lhs.is_zero() || rhs.is_zero()) return out;
    out.coeffs_.assign(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            if (rhs.coeffs_[j].is_zero()) continue;
            out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
    }
    out.normalize();
    return out;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
    *this = *this * rhs;
    return *this;
}

IntPolynomial IntPolynomial::shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    IntPolynomial out;
    out.coeffs_.assign(coeffs_.size() + k, BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i + k] = coeffs_[i];
    return out;
}

BigInt IntPolynomial::eval(const BigInt& t) const {
    BigInt acc(0);
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        acc = acc * t + coeffs_[k];
    }
    return acc;
}

std::size_t IntPolynomial::multiplicity_x_plus_1() const {
    if (is_zero()) throw std::domain_error("multiplicity_x_plus_1 is undefined for the zero polynomial");
    std::vector<BigInt> cur = coeffs_;
    std::size_t count = 0;
    while (cur.size() >= 2) {
        // p(x) = (x+1) q(x) + r with q[i-1] = c_i - q[i]; recurse only on exact r = 0
        std::vector<BigInt> q(cur.size() - 1, BigInt(0));
        q[cur.size() - 2] = cur.back();
        for (std::size_t i = cur.size() - 2; i >= 1; --i) q[i - 1] = cur[i] - q[i];
        BigInt rem = cur[0] - q[0];
        if (!rem.is_zero()) break;
        cur = std::move(q);
        ++count;
    }
    return count;
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const BigInt& c = coeffs_[k];
        if (c.is_zero()) continue;
        bool neg = c.sign() < 0;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        BigInt abs = neg ? -c : c;
        std::string mag = abs.to_string();
        if (k == 0) {
            out += mag;
        } else {
            if (mag != "1") out += mag;
            out += "x";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

IntPolynomial IntPolynomial::parse(std::string_view text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto parse_digits = [&]() -> BigInt {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError("expected digits at offset " + std::to_string(start) +
                                            " in polynomial: " + std::string(text));
        return BigInt::from_string(text.substr(start, pos - start));
    };

    std::vector<BigInt> coeffs;
    auto add_term = [&](const BigInt& c, std::size_t k) {
        if (coeffs.size() <= k) coeffs.resize(k + 1, BigInt(0));
        coeffs[k] += c;
    };

    skip_ws();
    if (pos == text.size()) throw ParseError("empty polynomial");
    bool first = true;
    while (true) {
        skip_ws();
        if (pos == text.size()) {
            if (first) throw ParseError("empty polynomial");
            break;
        }
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
            skip_ws();
        } else if (!first) {
            throw ParseError("expected '+' or '-' at offset " + std::to_string(pos) +
                             " in polynomial: " + std::string(text));
        }
        first = false;

        BigInt coef(1);
        bool saw_number = false;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            coef = parse_digits();
            saw_number = true;
        }
        skip_ws();
        std::size_t exponent = 0;
        bool saw_x = false;
        if (pos < text.size() && (text[pos] == 'x' || text[pos] == 'X')) {
            saw_x = true;
            exponent = 1;
            ++pos;
            skip_ws();
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                skip_ws();
                BigInt e = parse_digits();
                if (e > BigInt(100'000))
                    throw ParseError("exponent too large: " + e.to_string());
                exponent = static_cast<std::size_t>(e.to_int64());
            }
        }
        if (!saw_number && !saw_x)
            throw ParseError("expected term at offset " + std::to_string(pos) +
                             " in polynomial: " + std::string(text));
        if (sign < 0) coef = -coef;
        add_term(coef, exponent);
    }
    return IntPolynomial(std::move(coeffs));
}

std::string IntPolynomial::key() const {
    std::string out = "d" + std::to_string(degree());
    for (const BigInt& c : coeffs_) {
        out += "|";
        out += c.to_string();
    }
    return out;
}

} // namespace floodpoly
