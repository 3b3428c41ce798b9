#pragma once

#include "floodpoly/graph.hpp"

namespace floodpoly {

/// One cascade round: c plus every vertex with at least two neighbors in c.
VertexSet cascade_step(const Graph& g, const VertexSet& c);

/// Fixed point of the cascade sequence starting at c. Idempotent.
VertexSet closure(const Graph& g, const VertexSet& c);

/// True iff closure(g, c) covers every vertex.
bool floods(const Graph& g, const VertexSet& c);

/// Full cascade sequence C_0, ..., C_k where C_k is the first fixed point.
struct CascadeTrace {
    std::vector<VertexSet> steps;
    std::size_t converged_at = 0; // index of the fixed point (steps.size() - 1)
};
CascadeTrace trace(const Graph& g, const VertexSet& c);

namespace detail {
/// Single-word closure kernel: full rescans per round, fastest for tiny n.
std::uint64_t closure64(const std::uint64_t* adj, std::size_t n, std::uint64_t c);
/// Worklist closure: visits only newly flooded vertices' unflooded neighbors,
/// counting flooded neighbors with short-circuit at two. Used for graphs wider
/// than one word; exposed so tests can cross-check the two kernels.
VertexSet closure_worklist(const Graph& g, const VertexSet& c);
} // namespace detail

} // namespace floodpoly
