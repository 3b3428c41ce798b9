#include "floodpoly/bigint.hpp"
#include "floodpoly/errors.hpp"

#include <doctest.h>

#include <stdexcept>

#include <random>

using floodpoly::BigInt;
using floodpoly::binomial;

TEST_CASE("bigint small arithmetic") {
    CHECK((BigInt(2) + BigInt(3)).to_string() == "5");
    CHECK((BigInt(2) - BigInt(3)).to_string() == "-1");
    CHECK((BigInt(-4) * BigInt(-5)).to_string() == "20");
    CHECK((BigInt(-4) * BigInt(5)).to_string() == "-20");
    CHECK(BigInt(0).to_string() == "0");
    CHECK((BigInt(7) - BigInt(7)).is_zero());
    CHECK((-BigInt(0)).to_string() == "0");
}

TEST_CASE("bigint matches __int128 on random int64 pairs") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<std::int64_t> dist(-1'000'000'000LL, 1'000'000'000LL);
    for (int i = 0; i < 500; ++i) {
        std::int64_t a = dist(rng), b = dist(rng);
        CHECK((BigInt(a) + BigInt(b)).to_int64() == a + b);
        CHECK((BigInt(a) - BigInt(b)).to_int64() == a - b);
        __int128 prod = static_cast<__int128>(a) * b;
        BigInt p = BigInt(a) * BigInt(b);
        CHECK(p.to_int64() == static_cast<std::int64_t>(prod));
        CHECK((BigInt(a) < BigInt(b)) == (a < b));
    }
}

TEST_CASE("bigint int64 boundaries") {
    std::int64_t lo = std::numeric_limits<std::int64_t>::min();
    std::int64_t hi = std::numeric_limits<std::int64_t>::max();
    CHECK(BigInt(lo).to_string() == "-9223372036854775808");
    CHECK(BigInt(hi).to_string() == "9223372036854775807");
    CHECK(BigInt(lo).to_int64() == lo);
    CHECK(BigInt(hi).to_int64() == hi);
    CHECK_THROWS_AS((BigInt(hi) * BigInt(2)).to_int64(), std::overflow_error);
    CHECK_THROWS_AS(BigInt(-1).to_uint64(), std::overflow_error);
}

TEST_CASE("bigint big products and decimal round trip") {
    // 30! computed by repeated multiplication, checked against the known value
    BigInt fact(1);
    for (int k = 2; k <= 30; ++k) fact *= BigInt(k);
    CHECK(fact.to_string() == "265252859812191058636308480000000");
    CHECK(BigInt::from_string(fact.to_string()) == fact);
    CHECK(BigInt::from_string("-00123").to_string() == "-123");
    CHECK(BigInt::from_string("+7").to_string() == "7");
    CHECK_THROWS_AS(BigInt::from_string("12a"), floodpoly::ParseError);
    CHECK_THROWS_AS(BigInt::from_string(""), floodpoly::ParseError);
}

TEST_CASE("bigint ordering") {
    CHECK(BigInt(-5) < BigInt(-4));
    CHECK(BigInt(-5) < BigInt(0));
    CHECK(BigInt(0) < BigInt(1));
    BigInt big = BigInt(1'000'000'000) * BigInt(1'000'000'000);
    CHECK(BigInt(5) < big);
    CHECK(-big < BigInt(5));
}

TEST_CASE("binomial values") {
    CHECK(binomial(0, 0).to_string() == "1");
    CHECK(binomial(5, 2).to_string() == "10");
    CHECK(binomial(28, 14).to_string() == "40116600");
    CHECK(binomial(4, 7).is_zero());
    CHECK(binomial(64, 32).to_string() == "1832624140942590534");
    // row symmetry
    for (unsigned n = 0; n <= 12; ++n) {
        for (unsigned k = 0; k <= n; ++k) CHECK(binomial(n, k) == binomial(n, n - k));
    }
}
