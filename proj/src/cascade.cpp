#include "floodpoly/cascade.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

namespace floodpoly {

namespace {

void check_host(const Graph& g, const VertexSet& c) {
    if (c.universe_size() != g.vertex_count())
        throw std::invalid_argument("cascade set universe does not match graph size");
}

} // namespace

namespace detail {

std::uint64_t closure64(const std::uint64_t* adj, std::size_t n, std::uint64_t c) {
    const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    for (;;) {
        std::uint64_t added = 0;
        std::uint64_t rest = full & ~c;
        while (rest) {
            std::size_t v = static_cast<std::size_t>(std::countr_zero(rest));
            rest &= rest - 1;
            if (std::popcount(adj[v] & c) >= 2) added |= std::uint64_t{1} << v;
        }
        if (!added) return c;
        c |= added;
    }
}

VertexSet closure_worklist(const Graph& g, const VertexSet& c) {
    check_host(g, c);
    const std::size_t n = g.vertex_count();
    VertexSet flooded = c;
    std::vector<std::uint8_t> hits(n, 0); // flooded-neighbor count, capped at 2
    std::vector<std::size_t> queue = c.to_indices();
    while (!queue.empty()) {
        std::size_t u = queue.back();
        queue.pop_back();
        g.neighbors(u).for_each([&](std::size_t x) {
            if (flooded.contains(x) || hits[x] >= 2) return;
            if (++hits[x] == 2) {
                flooded.insert(x);
                queue.push_back(x);
            }
        });
    }
    return flooded;
}

} // namespace detail

VertexSet cascade_step(const Graph& g, const VertexSet& c) {
    check_host(g, c);
    const std::size_t n = g.vertex_count();
    VertexSet next = c;
    for (std::size_t v = 0; v < n; ++v) {
        if (c.contains(v)) continue;
        std::size_t hits = 0;
        const VertexSet& nbrs = g.neighbors(v);
        for (std::size_t w = 0; w < nbrs.word_count() && hits < 2; ++w) {
            std::uint64_t common = nbrs.word(w) & c.word(w);
            while (common && hits < 2) {
                common &= common - 1;
                ++hits;
            }
        }
        if (hits >= 2) next.insert(v);
    }
    return next;
}

VertexSet closure(const Graph& g, const VertexSet& c) {
    check_host(g, c);
    const std::size_t n = g.vertex_count();
    if (n <= 64) {
        std::vector<std::uint64_t> adj(n);
        for (std::size_t v = 0; v < n; ++v) adj[v] = g.neighbors(v).word(0);
        return VertexSet::from_mask(n, detail::closure64(adj.data(), n, c.as_mask()));
    }
    return detail::closure_worklist(g, c);
}

bool floods(const Graph& g, const VertexSet& c) {
    return closure(g, c) == VertexSet::full(g.vertex_count());
}

CascadeTrace trace(const Graph& g, const VertexSet& c) {
    check_host(g, c);
    CascadeTrace out;
    out.steps.push_back(c);
    for (;;) {
        VertexSet next = cascade_step(g, out.steps.back());
        if (next == out.steps.back()) break;
        out.steps.push_back(std::move(next));
    }
    out.converged_at = out.steps.size() - 1;
    return out;
}

} // namespace floodpoly
