#include "floodpoly/formulas.hpp"
#include "floodpoly/bigint.hpp"
#include "floodpoly/cascade.hpp"
#include "floodpoly/enumeration.hpp"
#include "floodpoly/errors.hpp"

#include <doctest.h>

#include <stdexcept>

#include "testutil.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

using namespace floodpoly;
using testutil::P;

TEST_CASE("fibonacci polynomials") {
    CHECK(fibonacci_poly(0).is_zero());
    CHECK(fibonacci_poly(1) == P("x"));
    CHECK(fibonacci_poly(2) == P("x^2"));
    CHECK(fibonacci_poly(6) == P("x^6 + 4x^5 + 3x^4"));
    CHECK(fibonacci_poly(8) == P("x^8 + 6x^7 + 10x^6 + 4x^5"));
}

TEST_CASE("lucas polynomials") {
    CHECK(lucas_poly(0) == P("2"));
    CHECK(lucas_poly(1) == P("x"));
    CHECK(lucas_poly(3) == P("x^3 + 3x^2"));
    CHECK(lucas_poly(4) == P("x^4 + 4x^3 + 2x^2"));
    CHECK(lucas_poly(0).eval(BigInt(1)) == BigInt(2));
}

TEST_CASE("path recursion") {
    CHECK(path_flood_poly(1) == P("x"));
    CHECK(path_flood_poly(2) == P("x^2"));
    CHECK(path_flood_poly(3) == P("x^3 + x^2"));
    CHECK(path_flood_poly(8) == P("x^8 + 6x^7 + 10x^6 + 4x^5"));
    for (unsigned n = 1; n <= 20; ++n) CHECK(path_flood_poly(n) == fibonacci_poly(n));
    CHECK_THROWS_AS(path_flood_poly(0), std::invalid_argument);
}

TEST_CASE("cycle recursion") {
    CHECK(cycle_flood_poly(3) == P("x^3 + 3x^2"));
    CHECK(cycle_flood_poly(4) == P("x^4 + 4x^3 + 2x^2"));
    CHECK(cycle_flood_poly(5) == P("x^5 + 5x^4 + 5x^3"));
    for (unsigned n = 3; n <= 20; ++n) CHECK(cycle_flood_poly(n) == lucas_poly(n));
    CHECK_THROWS_AS(cycle_flood_poly(2), std::invalid_argument);
}

TEST_CASE("2xN ladder recursion") {
    CHECK(a_poly(1) == P("x^2 + 2x"));
    CHECK(a_poly(2) == P("x^2 + 2x") * P("x^2 + 2x"));
    CHECK(b_poly(1) == P("2x"));
    CHECK(b_poly(2) == P("2x^2"));
    CHECK(parallel_path_2n_poly(1) == P("x^2"));
    CHECK(parallel_path_2n_poly(2) == P("x^4 + 4x^3 + 2x^2"));
    CHECK(parallel_path_2n_poly(4) == flood_polynomial(parallel_path(2, 4)));
    CHECK(parallel_path_2n_poly(4) == P("x^8 + 8x^7 + 26x^6 + 44x^5 + 38x^4 + 8x^3"));
}

TEST_CASE("triangle mosaic composition sum") {
    CHECK(triangle_mosaic_poly(1) == P("x"));
    CHECK(triangle_mosaic_poly(2) == P("x^2"));
    CHECK(triangle_mosaic_poly(3) == P("x^3 + 3x^2"));
    CHECK(triangle_mosaic_poly(6) == flood_polynomial(triangle_mosaic(6)));
    CHECK(triangle_mosaic_poly(6) == P("x^6 + 6x^5 + 15x^4 + 20x^3 + 14x^2"));
    CHECK_THROWS_AS(triangle_mosaic_poly(25), TooLargeError);
    CHECK_NOTHROW(triangle_mosaic_poly(25, 26));
}

TEST_CASE("centipede and tick products") {
    for (unsigned n = 3; n <= 12; ++n) CHECK(centipede_poly(Composition{n - 1}) == fibonacci_poly(n));
    IntPolynomial p3 = P("x^3 + x^2");
    CHECK(centipede_poly(Composition{1, 2, 2}) == P("x^2") * p3 * p3 * p3 * p3);
    CHECK(tick_poly(Composition{2, 2}) == p3 * p3 * p3 * p3);
    CHECK_THROWS_AS(centipede_poly(Composition{1}), std::invalid_argument);
    CHECK_THROWS_AS(tick_poly(Composition{2}), std::invalid_argument);

    std::mt19937 rng(89);
    for (int i = 0; i < 30; ++i) {
        std::uniform_int_distribution<unsigned> len(1, 4), part(1, 4);
        std::vector<unsigned> parts(len(rng));
        for (auto& x : parts) x = part(rng);
        if (std::accumulate(parts.begin(), parts.end(), 0u) < 3) continue;
        Composition a(parts);
        // tick = one extra three-path factor over the centipede
        CHECK(tick_poly(a) == fibonacci_poly(3) * centipede_poly(a));
        // both are invariant under reordering the parts
        std::vector<unsigned> shuffled = parts;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        Composition b(shuffled);
        CHECK(centipede_poly(a) == centipede_poly(b));
        CHECK(tick_poly(a) == tick_poly(b));
    }
}

TEST_CASE("even path factorization") {
    auto [f4, l4] = even_path_factorization(4);
    CHECK(f4 == P("x^4 + 2x^3"));
    CHECK(l4 == P("x^4 + 4x^3 + 2x^2"));
    CHECK(f4 * l4 == path_flood_poly(8));
    auto [f3, l3] = even_path_factorization(3);
    CHECK(f3 * l3 == path_flood_poly(6));
    CHECK_THROWS_AS(even_path_factorization(2), std::invalid_argument);

    for (unsigned n = 3; n <= 20; ++n) {
        CHECK(fibonacci_poly(2 * n) == fibonacci_poly(n) * lucas_poly(n));
        CHECK(fibonacci_poly(n).eval(BigInt(1)) * lucas_poly(n).eval(BigInt(1)) ==
              fibonacci_poly(2 * n).eval(BigInt(1)));
    }
}

TEST_CASE("formulas equal brute force on small instances") {
    for (unsigned n = 1; n <= 12; ++n) CHECK(path_flood_poly(n) == flood_polynomial(path(n)));
    for (unsigned n = 3; n <= 12; ++n) CHECK(cycle_flood_poly(n) == flood_polynomial(cycle(n)));
    for (unsigned n = 1; n <= 6; ++n)
        CHECK(parallel_path_2n_poly(n) == flood_polynomial(parallel_path(2, n)));
    for (unsigned n = 1; n <= 12; ++n)
        CHECK(triangle_mosaic_poly(n) == flood_polynomial(triangle_mosaic(n)));
    CHECK(centipede_poly(Composition{1, 2, 2}) == flood_polynomial(centipede(Composition{1, 2, 2})));
    CHECK(tick_poly(Composition{2, 2}) == flood_polynomial(tick(Composition{2, 2})));
}

namespace {

// column j of the row-major m x n grid
std::uint64_t column_mask(std::size_t m, std::size_t n, std::size_t j) {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < m; ++i) out |= std::uint64_t{1} << (i * n + j);
    return out;
}

bool parallel_path_property(std::size_t m, std::size_t n, std::uint64_t mask) {
    if (!(mask & column_mask(m, n, 0))) return false;
    if (!(mask & column_mask(m, n, n - 1))) return false;
    for (std::size_t l = 1; l + 1 < n; ++l) {
        if (!(mask & (column_mask(m, n, l) | column_mask(m, n, l + 1)))) return false;
    }
    return true;
}

} // namespace

TEST_CASE("path flooding is exactly the parallel path property") {
    for (std::size_t n = 1; n <= 12; ++n) {
        Graph g = path(n);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            CHECK(floods(g, VertexSet::from_mask(n, mask)) == parallel_path_property(1, n, mask));
        }
    }
}

TEST_CASE("cycle flooding is exactly trigger-freeness of the complement") {
    for (std::size_t n = 3; n <= 12; ++n) {
        Graph g = cycle(n);
        auto trigger_pairs = g.triggers();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            bool complement_clear = true;
            for (const auto& [u, v] : trigger_pairs) {
                if (!(mask >> u & 1) && !(mask >> v & 1)) complement_clear = false;
            }
            CHECK(floods(g, VertexSet::from_mask(n, mask)) == complement_clear);
        }
    }
}

TEST_CASE("triangle mosaic flooding is exactly a pair within distance four") {
    for (std::size_t n = 2; n <= 12; ++n) {
        Graph g = triangle_mosaic(n);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            bool close_pair = false;
            for (std::size_t i = 0; i < n && !close_pair; ++i) {
                if (!(mask >> i & 1)) continue;
                for (std::size_t j = i + 1; j < n && j <= i + 4; ++j) {
                    if (mask >> j & 1) close_pair = true;
                }
            }
            CHECK(floods(g, VertexSet::from_mask(n, mask)) == close_pair);
        }
        // and any adjacent spine pair floods
        for (std::size_t k = 0; k + 1 < n; ++k) {
            CHECK(floods(g, VertexSet::of(n, {k, k + 1})));
        }
    }
}

TEST_CASE("A and B match their set-counting definitions on small ladders") {
    // A_n: sets of the 2xN grid with the parallel path property, by size;
    // B_n: the non-flooding ones among those
    for (std::size_t n = 1; n <= 6; ++n) {
        Graph g = parallel_path(2, n);
        const std::size_t total = 2 * n;
        std::vector<BigInt> a_counts(total + 1, BigInt(0)), b_counts(total + 1, BigInt(0));
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << total); ++mask) {
            if (!parallel_path_property(2, n, mask)) continue;
            std::size_t size = static_cast<std::size_t>(std::popcount(mask));
            a_counts[size] += BigInt(1);
            if (!floods(g, VertexSet::from_mask(total, mask))) b_counts[size] += BigInt(1);
        }
        CHECK(IntPolynomial(std::move(a_counts)) == a_poly(static_cast<unsigned>(n)));
        CHECK(IntPolynomial(std::move(b_counts)) == b_poly(static_cast<unsigned>(n)));
    }
}

TEST_CASE("2xN flooding characterization among property-satisfying sets") {
    for (std::size_t n = 1; n <= 6; ++n) {
        Graph g = parallel_path(2, n);
        const std::size_t total = 2 * n;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << total); ++mask) {
            if (!parallel_path_property(2, n, mask)) continue;
            bool paired = false;
            for (std::size_t j = 0; j < n && !paired; ++j) {
                if (!(mask >> j & 1)) continue; // v_{1,j} is row 0
                for (std::size_t dj : {j, j + 1}) {
                    if (dj < n && (mask >> (n + dj) & 1)) paired = true;
                }
                if (j > 0 && (mask >> (n + j - 1) & 1)) paired = true;
            }
            CHECK(floods(g, VertexSet::from_mask(total, mask)) == paired);
        }
    }
}

TEST_CASE("column conditions are necessary for grid flooding") {
    for (auto [m, n] : std::vector<std::pair<std::size_t, std::size_t>>{
             {1, 16}, {2, 8}, {3, 5}, {4, 4}}) {
        Graph g = parallel_path(m, n);
        const std::size_t total = m * n;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << total); ++mask) {
            if (floods(g, VertexSet::from_mask(total, mask)))
                CHECK(parallel_path_property(m, n, mask));
        }
    }
}

TEST_CASE("leaf reduction examples") {
    CHECK(!leaf_reduction(path(5)).has_value());
    CHECK(!leaf_reduction(cycle(6)).has_value());

    Graph t = tick(Composition{2, 2});
    IntPolynomial original = flood_polynomial(t);
    auto once = leaf_reduction(t);
    REQUIRE(once.has_value());
    CHECK(flood_polynomial(*once) == original);
    auto comps = once->components();
    std::vector<std::size_t> sizes;
    for (const auto& c : comps) sizes.push_back(c.count());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::size_t>{3, 9});

    Graph cen = centipede(Composition{1, 2, 2});
    IntPolynomial cen_poly = flood_polynomial(cen);
    Graph cur = cen;
    int reductions = 0;
    while (auto next = leaf_reduction(cur)) {
        cur = *next;
        ++reductions;
        CHECK(flood_polynomial(cur) == cen_poly);
        REQUIRE(reductions < 10);
    }
    CHECK(reductions == 2);
    std::vector<std::size_t> final_sizes;
    for (const auto& c : cur.components()) final_sizes.push_back(c.count());
    std::sort(final_sizes.begin(), final_sizes.end());
    CHECK(final_sizes == std::vector<std::size_t>{2, 3, 3, 3, 3});
    // all pieces are paths: no vertex above degree 2 and no component with a cycle
    for (const auto& c : cur.components()) {
        std::size_t edges_inside = 0;
        c.for_each([&](std::size_t v) {
            CHECK(cur.degree(v) <= 2);
            cur.neighbors(v).for_each([&](std::size_t w) {
                if (v < w) ++edges_inside;
            });
        });
        CHECK(edges_inside + 1 == c.count());
    }
}

TEST_CASE("long centipedes push coefficients past 64 bits") {
    // 120 unit parts: (x^3+x^2)^119 * (x^2)^120 = x^478 (x+1)^119
    std::vector<unsigned> ones(120, 1);
    Composition a(ones);
    IntPolynomial p = centipede_poly(a);
    // degree equals the centipede's vertex count: 121 + 4*119
    CHECK(p.degree() == 597);
    CHECK(p.multiplicity_x_plus_1() == 119);
    BigInt two_pow_119(1);
    for (int i = 0; i < 119; ++i) two_pow_119 *= BigInt(2);
    CHECK(p.eval(BigInt(1)) == two_pow_119);
    for (unsigned k : {0u, 1u, 59u, 119u}) CHECK(p.coeff(478 + k) == binomial(119, k));
    CHECK(p.coeff(477).is_zero());
}

TEST_CASE("formula_for_family multiplies per-atom formulas") {
    auto p = formula_for_family(FamilySpec::parse("path:4 + cycle:4"));
    REQUIRE(p.has_value());
    CHECK(*p == path_flood_poly(8)); // the equal-polynomial pair
    CHECK(formula_for_family(FamilySpec::parse("grid:2x4")) == parallel_path_2n_poly(4));
    CHECK(formula_for_family(FamilySpec::parse("grid:4x2")) == parallel_path_2n_poly(4));
    CHECK(formula_for_family(FamilySpec::parse("grid:1x6")) == path_flood_poly(6));
    CHECK(!formula_for_family(FamilySpec::parse("grid:3x3")).has_value());
    CHECK(!formula_for_family(FamilySpec::parse("complete:4")).has_value());
    CHECK(!formula_for_family(FamilySpec::parse("path:3 + complete:4")).has_value());
}
