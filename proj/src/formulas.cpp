#include "floodpoly/formulas.hpp"

#include "floodpoly/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace floodpoly {

namespace {

const IntPolynomial& poly_x() {
    static const IntPolynomial p = IntPolynomial::x();
    return p;
}

// x^2 + 2x
IntPolynomial poly_x2_2x() {
    return IntPolynomial(std::vector<BigInt>{BigInt(0), BigInt(2), BigInt(1)});
}

} // namespace

IntPolynomial fibonacci_poly(unsigned n) {
    IntPolynomial prev;            // f_0 = 0
    IntPolynomial cur = poly_x();  // f_1 = x
    if (n == 0) return prev;
    for (unsigned k = 2; k <= n; ++k) {
        IntPolynomial next = (cur + prev).shifted(1);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

IntPolynomial lucas_poly(unsigned n) {
    IntPolynomial prev = IntPolynomial::constant(BigInt(2)); // L_0 = 2
    IntPolynomial cur = poly_x();                            // L_1 = x
    if (n == 0) return prev;
    for (unsigned k = 2; k <= n; ++k) {
        IntPolynomial next = (cur + prev).shifted(1);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

IntPolynomial path_flood_poly(unsigned n) {
    if (n < 1) throw std::invalid_argument("path_flood_poly needs n >= 1");
    IntPolynomial prev = poly_x();                      // F_{P_1}
    IntPolynomial cur = IntPolynomial::monomial(BigInt(1), 2); // F_{P_2}
    if (n == 1) return prev;
    for (unsigned k = 3; k <= n; ++k) {
        IntPolynomial next = (cur + prev).shifted(1);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

IntPolynomial cycle_flood_poly(unsigned n) {
    if (n < 3) throw std::invalid_argument("cycle_flood_poly needs n >= 3");
    IntPolynomial prev = IntPolynomial::parse("x^3 + 3x^2");        // F_{O_3}
    IntPolynomial cur = IntPolynomial::parse("x^4 + 4x^3 + 2x^2");  // F_{O_4}
    if (n == 3) return prev;
    for (unsigned k = 5; k <= n; ++k) {
        IntPolynomial next = (cur + prev).shifted(1);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

IntPolynomial a_poly(unsigned n) {
    if (n < 1) throw std::invalid_argument("a_poly needs n >= 1");
    IntPolynomial prev = poly_x2_2x();        // A_1
    IntPolynomial cur = prev * prev;          // A_2
    if (n == 1) return prev;
    const IntPolynomial factor = poly_x2_2x();
    for (unsigned k = 3; k <= n; ++k) {
        IntPolynomial next = factor * (cur + prev);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

IntPolynomial b_poly(unsigned n) {
    if (n < 1) throw std::invalid_argument("b_poly needs n >= 1");
    IntPolynomial prev = IntPolynomial::monomial(BigInt(2), 1); // B_1 = 2x
    IntPolynomial cur = IntPolynomial::monomial(BigInt(2), 2);  // B_2 = 2x^2
    if (n == 1) return prev;
    const IntPolynomial two = IntPolynomial::constant(BigInt(2));
    for (unsigned k = 3; k <= n; ++k) {
        IntPolynomial next = (cur + two * prev).shifted(1);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

IntPolynomial parallel_path_2n_poly(unsigned n) {
    return a_poly(n) - b_poly(n);
}

IntPolynomial triangle_mosaic_poly(unsigned n, unsigned cap) {
    if (n < 1) throw std::invalid_argument("triangle_mosaic_poly needs n >= 1");
    if (n == 1) return poly_x();
    if (n == 2) return IntPolynomial::monomial(BigInt(1), 2);
    if (n > cap)
        throw TooLargeError("triangle mosaic composition sum capped at n = " + std::to_string(cap));
    // counts per composition length fit in 64 bits: at most 2^n <= 2^cap terms
    std::vector<std::uint64_t> by_size(n + 2, 0);
    CompN4Stream stream(n);
    Composition a{1};
    while (stream.next(a)) ++by_size[a.length() - 1];
    std::vector<BigInt> coeffs(n + 1, BigInt(0));
    for (std::size_t k = 0; k <= n; ++k) coeffs[k] = BigInt(static_cast<std::int64_t>(by_size[k]));
    return IntPolynomial(std::move(coeffs));
}

namespace {

IntPolynomial leaf_cluster_product(const Composition& a, std::size_t p3_power) {
    IntPolynomial out = IntPolynomial::constant(BigInt(1));
    const IntPolynomial p3 = fibonacci_poly(3); // x^3 + x^2
    for (std::size_t i = 0; i < p3_power; ++i) out *= p3;
    for (unsigned part : a.parts()) out *= fibonacci_poly(part + 1);
    return out;
}

} // namespace

IntPolynomial centipede_poly(const Composition& a) {
    if (a.sum() < 2) throw std::invalid_argument("centipede_poly needs a composition of n-1 with n >= 3");
    return leaf_cluster_product(a, a.length() - 1);
}

IntPolynomial tick_poly(const Composition& a) {
    if (a.sum() < 3) throw std::invalid_argument("tick_poly needs a composition of n >= 3");
    return leaf_cluster_product(a, a.length());
}

std::optional<Graph> leaf_reduction(const Graph& g) {
    const std::size_t n = g.vertex_count();
    for (std::size_t v = 0; v < n; ++v) {
        const std::size_t deg = g.degree(v);
        if (deg < 4 || deg % 2 != 0) continue; // need 2m+2 with m >= 1
        const std::size_t m = (deg - 2) / 2;
        std::vector<std::size_t> leaf_nbrs, other_nbrs;
        g.neighbors(v).for_each([&](std::size_t x) {
            (g.degree(x) == 1 ? leaf_nbrs : other_nbrs).push_back(x);
        });
        if (leaf_nbrs.size() < m + 2) continue;
        // designate the m+2 highest-indexed leaves; surplus leaves act as g's
        while (leaf_nbrs.size() > m + 2) {
            other_nbrs.push_back(leaf_nbrs.front());
            leaf_nbrs.erase(leaf_nbrs.begin());
        }
        std::sort(other_nbrs.begin(), other_nbrs.end());

        std::vector<Edge> edges;
        for (const auto& [a, b] : g.edges()) {
            if (a != v && b != v) edges.emplace_back(a, b);
        }
        // detached P_3 on the original vertices: l_{m+1} - v - l_{m+2}
        edges.emplace_back(v, leaf_nbrs[m]);
        edges.emplace_back(v, leaf_nbrs[m + 1]);
        for (std::size_t k = 0; k < m; ++k) edges.emplace_back(leaf_nbrs[k], other_nbrs[k]);
        std::vector<std::string> labels;
        if (g.has_labels()) {
            for (std::size_t u = 0; u < n; ++u) labels.push_back(g.label(u));
        }
        return Graph::from_edge_list(n, edges, std::move(labels));
    }
    return std::nullopt;
}

std::pair<IntPolynomial, IntPolynomial> even_path_factorization(unsigned n) {
    if (n < 3) throw std::invalid_argument("even_path_factorization needs n >= 3");
    return {fibonacci_poly(n), lucas_poly(n)};
}

std::optional<IntPolynomial> formula_for_family(const FamilySpec& spec) {
    IntPolynomial out = IntPolynomial::constant(BigInt(1));
    for (const FamilyAtom& atom : spec.atoms) {
        switch (atom.kind) {
        case FamilyAtom::Kind::Path:
            out *= path_flood_poly(static_cast<unsigned>(atom.a));
            break;
        case FamilyAtom::Kind::Grid: {
            std::size_t rows = std::min(atom.a, atom.b), cols = std::max(atom.a, atom.b);
            if (rows == 1)
                out *= path_flood_poly(static_cast<unsigned>(cols));
            else if (rows == 2)
                out *= parallel_path_2n_poly(static_cast<unsigned>(cols));
            else
                return std::nullopt; // no known recursion for m >= 3
            break;
        }
        case FamilyAtom::Kind::Cycle:
            out *= cycle_flood_poly(static_cast<unsigned>(atom.a));
            break;
        case FamilyAtom::Kind::Triangle:
            out *= triangle_mosaic_poly(static_cast<unsigned>(atom.a));
            break;
        case FamilyAtom::Kind::Centipede:
            out *= centipede_poly(Composition(atom.parts));
            break;
        case FamilyAtom::Kind::Tick:
            out *= tick_poly(Composition(atom.parts));
            break;
        case FamilyAtom::Kind::Complete:
        case FamilyAtom::Kind::EdgeList:
            return std::nullopt;
        }
    }
    return out;
}

} // namespace floodpoly
