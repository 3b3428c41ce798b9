#pragma once

#include "floodpoly/vertex_set.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace floodpoly {

using Edge = std::pair<std::size_t, std::size_t>;

/// Largest graph the exhaustive canonical labeler accepts.
inline constexpr std::size_t kCanonicalFormMaxVertices = 10;

/// Immutable finite simple graph: indexed vertex list + per-vertex neighbor
/// sets. Vertices are 0-indexed internally and 1-indexed in all text I/O.
/// Safe to share across threads once constructed.
class Graph {
public:
    /// Builds a graph from (u, v) pairs. Duplicate edges collapse silently;
    /// self-loops throw std::invalid_argument, out-of-range indices
    /// std::out_of_range.
    static Graph from_edge_list(std::size_t n, const std::vector<Edge>& edges,
                                std::vector<std::string> labels = {});

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edge_count_; }

    std::size_t degree(std::size_t v) const;
    const VertexSet& neighbors(std::size_t v) const;
    bool has_edge(std::size_t u, std::size_t v) const;

    /// All edges as (u, v) with u < v, sorted.
    std::vector<Edge> edges() const;

    /// Vertices of degree <= 1.
    VertexSet leaves_and_isolated() const;

    /// Edges whose endpoints both have degree exactly 2, sorted, u < v.
    std::vector<Edge> triggers() const;

    /// This graph followed by `other` with indices shifted; no cross edges.
    Graph disjoint_union(const Graph& other) const;

    /// Max shortest-path length over all pairs; nullopt when disconnected,
    /// 0 when n <= 1.
    std::optional<std::size_t> diameter() const;

    /// Connected components, ordered by smallest contained vertex.
    std::vector<VertexSet> components() const;

    /// Minimal adjacency encoding over all vertex permutations; equal strings
    /// iff isomorphic. Throws TooLargeError when n > 10.
    std::string canonical_form() const;

    /// Display label for a vertex: the provided label, or "v_{k}" (1-indexed).
    std::string label(std::size_t v) const;
    bool has_labels() const { return !labels_.empty(); }

private:
    Graph() = default;

    std::size_t n_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<std::string> labels_;
};

namespace detail {
/// Upper-triangle adjacency bits of g in row-major pair order; n <= 11.
std::uint64_t pack_adjacency_mask(const Graph& g);
/// Minimum of the packed mask over all vertex permutations.
std::uint64_t canonical_adjacency_mask(std::size_t n, std::uint64_t mask);
std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j); // i < j
} // namespace detail

} // namespace floodpoly
