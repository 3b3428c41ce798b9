#pragma once

#include "floodpoly/families.hpp"
#include "floodpoly/poly.hpp"

#include <optional>
#include <utility>

namespace floodpoly {

/// f_0 = 0, f_1 = x, f_n = x f_{n-1} + x f_{n-2}.
IntPolynomial fibonacci_poly(unsigned n);

/// L_0 = 2, L_1 = x, L_n = x L_{n-1} + x L_{n-2}.
IntPolynomial lucas_poly(unsigned n);

/// Flood polynomial of the path P_n by its own recursion
/// (x, x^2, then F = x F_{n-1} + x F_{n-2}); equals fibonacci_poly(n). n >= 1.
IntPolynomial path_flood_poly(unsigned n);

/// Flood polynomial of the cycle O_n by its own recursion
/// (x^3+3x^2, x^4+4x^3+2x^2, then the same shift); equals lucas_poly(n). n >= 3.
IntPolynomial cycle_flood_poly(unsigned n);

/// A_n: weight sum over cascade sets of the 2xN grid with the parallel path
/// property. A_1 = x^2+2x, A_2 = (x^2+2x)^2, A_n = (x^2+2x)(A_{n-1}+A_{n-2}).
IntPolynomial a_poly(unsigned n);
/// B_n: the non-flooding ones. B_1 = 2x, B_2 = 2x^2, B_n = x(B_{n-1}+2B_{n-2}).
IntPolynomial b_poly(unsigned n);
/// Flood polynomial of the 2xN grid: A_n - B_n. n >= 1.
IntPolynomial parallel_path_2n_poly(unsigned n);

inline constexpr unsigned kDefaultCompositionCap = 24;
/// Flood polynomial of the triangle mosaic T_n as the literal sum of
/// x^{len(a)-1} over COMP(n, 4). Hard-coded x / x^2 for n = 1, 2 where the
/// composition sum does not apply. Throws TooLargeError over the cap.
IntPolynomial triangle_mosaic_poly(unsigned n, unsigned cap = kDefaultCompositionCap);

/// (x^3+x^2)^{len(a)-1} * prod_j fibonacci_poly(a_j + 1); sum(a) >= 2.
IntPolynomial centipede_poly(const Composition& a);
/// (x^3+x^2)^{len(a)} * prod_j fibonacci_poly(a_j + 1); sum(a) >= 3.
IntPolynomial tick_poly(const Composition& a);

/// One flood-polynomial-preserving reduction step: locate the
/// smallest-indexed vertex v with deg(v) = 2m+2 (m >= 1) and at least m+2
/// leaf neighbors; detach v together with its two highest-indexed leaf
/// neighbors as a P_3, rewiring each remaining designated leaf to the
/// matching other neighbor of v in index order. nullopt when no vertex
/// qualifies.
std::optional<Graph> leaf_reduction(const Graph& g);

/// (fibonacci_poly(n), lucas_poly(n)); the product is the flood polynomial
/// of P_{2n}. n >= 3.
std::pair<IntPolynomial, IntPolynomial> even_path_factorization(unsigned n);

/// Closed-form/recursive flood polynomial for a family expression, when every
/// atom has one (path, 1xN/2xN/Nx1/Nx2 grids, cycle, triangle, centipede,
/// tick). nullopt otherwise (complete graphs, wider grids, edge lists).
std::optional<IntPolynomial> formula_for_family(const FamilySpec& spec);

} // namespace floodpoly
