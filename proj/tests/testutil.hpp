#pragma once

#include "floodpoly/families.hpp"
#include "floodpoly/graph.hpp"
#include "floodpoly/poly.hpp"

#include <random>
#include <set>
#include <vector>

namespace testutil {

using floodpoly::Edge;
using floodpoly::Graph;
using floodpoly::IntPolynomial;
using floodpoly::VertexSet;

inline IntPolynomial P(const char* text) { return IntPolynomial::parse(text); }

/// Deliberately naive closure over std::set adjacency; the reference the
/// bit-twiddling kernels are checked against.
inline std::set<std::size_t> naive_closure(const std::vector<std::set<std::size_t>>& adj,
                                           std::set<std::size_t> c) {
    const std::size_t n = adj.size();
    for (;;) {
        std::set<std::size_t> next = c;
        for (std::size_t v = 0; v < n; ++v) {
            if (c.count(v)) continue;
            std::size_t hits = 0;
            for (std::size_t w : adj[v]) hits += c.count(w);
            if (hits >= 2) next.insert(v);
        }
        if (next == c) return c;
        c = std::move(next);
    }
}

inline std::vector<std::set<std::size_t>> to_naive(const Graph& g) {
    std::vector<std::set<std::size_t>> adj(g.vertex_count());
    for (const auto& [u, v] : g.edges()) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    return adj;
}

inline Graph random_graph(std::mt19937& rng, std::size_t n, double p) {
    std::bernoulli_distribution flip(p);
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            if (flip(rng)) edges.emplace_back(u, v);
        }
    }
    return Graph::from_edge_list(n, edges);
}

inline VertexSet random_subset(std::mt19937& rng, std::size_t n) {
    VertexSet out(n);
    std::bernoulli_distribution flip(0.5);
    for (std::size_t v = 0; v < n; ++v) {
        if (flip(rng)) out.insert(v);
    }
    return out;
}

/// The running 8-vertex example: a 2x4 grid with columns numbered first
/// (v_1, v_2 the left column, v_7, v_8 the right one).
inline Graph column_major_grid_2x4() {
    return Graph::from_edge_list(
        8, {{0, 2}, {0, 1}, {1, 3}, {2, 4}, {2, 3}, {3, 5}, {4, 5}, {5, 7}, {6, 7}, {4, 6}});
}

/// Square with one pendant: two edges join degree-2 vertices.
inline Graph square_with_pendant() {
    return Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 4}});
}

/// Six vertices, two of which sit in no minimal flooding cascade set.
inline Graph two_free_vertex_graph() {
    return Graph::from_edge_list(6, {{0, 2}, {1, 2}, {1, 3}, {2, 4}, {3, 4}, {4, 5}});
}

/// All compositions of total whose length is at most max_len.
inline std::vector<std::vector<unsigned>> compositions_up_to_length(unsigned total,
                                                                    std::size_t max_len) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur;
    auto rec = [&](auto&& self, unsigned left) -> void {
        if (left == 0) {
            if (!cur.empty()) out.push_back(cur);
            return;
        }
        if (cur.size() == max_len) return;
        for (unsigned part = 1; part <= left; ++part) {
            cur.push_back(part);
            self(self, left - part);
            cur.pop_back();
        }
    };
    rec(rec, total);
    return out;
}

} // namespace testutil
