#pragma once

#include "floodpoly/graph.hpp"
#include "floodpoly/poly.hpp"

namespace floodpoly {

inline constexpr std::size_t kDefaultEnumerationCap = 28;
/// Absolute ceiling: the subset counter and kernel masks are 64-bit.
inline constexpr std::size_t kEnumerationHardLimit = 62;

struct EnumerationOptions {
    unsigned threads = 0;                     // 0 = hardware concurrency
    std::size_t cap = kDefaultEnumerationCap; // TooLargeError beyond this
};

/// Exact flood polynomial by enumeration of all 2^n cascade sets:
/// coefficient c_k counts the k-element sets whose closure covers the graph.
/// Deterministic for any worker count. Throws TooLargeError over the cap.
IntPolynomial flood_polynomial(const Graph& g, const EnumerationOptions& opts = {});

/// All flooding cascade sets none of whose single-vertex removals flood
/// (sufficient by upward closure), sorted by size then lexicographically.
std::vector<VertexSet> minimal_flooding_sets(const Graph& g, const EnumerationOptions& opts = {});

/// Vertices absent from every minimal flooding cascade set.
VertexSet free_vertices(const Graph& g, const EnumerationOptions& opts = {});

struct FloodSummary {
    IntPolynomial polynomial;
    BigInt flood_set_size; // = polynomial evaluated at 1
    std::vector<VertexSet> minimal_sets;
    VertexSet free_vertices;
};
FloodSummary flood_summary(const Graph& g, const EnumerationOptions& opts = {});

} // namespace floodpoly
