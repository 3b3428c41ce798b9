#include "floodpoly/graph.hpp"

#include "floodpoly/errors.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace floodpoly {

Graph Graph::from_edge_list(std::size_t n, const std::vector<Edge>& edges,
                            std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != n)
        throw std::invalid_argument("label count does not match vertex count");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, VertexSet(n));
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n)
            throw std::out_of_range("edge endpoint out of range: (" + std::to_string(u + 1) +
                                    ", " + std::to_string(v + 1) + ") with n = " + std::to_string(n));
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u + 1));
        g.adj_[u].insert(v);
        g.adj_[v].insert(u);
    }
    for (std::size_t v = 0; v < n; ++v) g.edge_count_ += g.adj_[v].count();
    g.edge_count_ /= 2;
    g.labels_ = std::move(labels);
    return g;
}

std::size_t Graph::degree(std::size_t v) const {
    if (v >= n_) throw std::out_of_range("vertex index out of range");
    return adj_[v].count();
}

const VertexSet& Graph::neighbors(std::size_t v) const {
    if (v >= n_) throw std::out_of_range("vertex index out of range");
    return adj_[v];
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
    if (u >= n_ || v >= n_) throw std::out_of_range("vertex index out of range");
    return adj_[u].contains(v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (std::size_t u = 0; u < n_; ++u) {
        adj_[u].for_each([&](std::size_t v) {
            if (u < v) out.emplace_back(u, v);
        });
    }
    return out;
}

VertexSet Graph::leaves_and_isolated() const {
    VertexSet out(n_);
    for (std::size_t v = 0; v < n_; ++v) {
        if (adj_[v].count() <= 1) out.insert(v);
    }
    return out;
}

std::vector<Edge> Graph::triggers() const {
    std::vector<Edge> out;
    for (std::size_t u = 0; u < n_; ++u) {
        if (adj_[u].count() != 2) continue;
        adj_[u].for_each([&](std::size_t v) {
            if (u < v && adj_[v].count() == 2) out.emplace_back(u, v);
        });
    }
    return out;
}

Graph Graph::disjoint_union(const Graph& other) const {
    std::vector<Edge> all = edges();
    for (const auto& [u, v] : other.edges()) all.emplace_back(u + n_, v + n_);
    std::vector<std::string> labels;
    if (has_labels() || other.has_labels()) {
        labels.reserve(n_ + other.n_);
        for (std::size_t v = 0; v < n_; ++v) labels.push_back(label(v));
        for (std::size_t v = 0; v < other.n_; ++v) labels.push_back(other.label(v));
    }
    return from_edge_list(n_ + other.n_, all, std::move(labels));
}

std::optional<std::size_t> Graph::diameter() const {
    if (n_ <= 1) return 0;
    std::size_t best = 0;
    std::vector<std::size_t> dist(n_);
    for (std::size_t start = 0; start < n_; ++start) {
        std::fill(dist.begin(), dist.end(), n_); // n_ = unreached
        std::deque<std::size_t> queue{start};
        dist[start] = 0;
        std::size_t reached = 1;
        while (!queue.empty()) {
            std::size_t u = queue.front();
            queue.pop_front();
            best = std::max(best, dist[u]);
            adj_[u].for_each([&](std::size_t w) {
                if (dist[w] == n_) {
                    dist[w] = dist[u] + 1;
                    ++reached;
                    queue.push_back(w);
                }
            });
        }
        if (reached < n_) return std::nullopt;
    }
    return best;
}

std::vector<VertexSet> Graph::components() const {
    std::vector<VertexSet> out;
    std::vector<bool> seen(n_, false);
    for (std::size_t start = 0; start < n_; ++start) {
        if (seen[start]) continue;
        VertexSet comp(n_);
        std::vector<std::size_t> stack{start};
        seen[start] = true;
        while (!stack.empty()) {
            std::size_t u = stack.back();
            stack.pop_back();
            comp.insert(u);
            adj_[u].for_each([&](std::size_t w) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            });
        }
        out.push_back(std::move(comp));
    }
    return out;
}

std::string Graph::label(std::size_t v) const {
    if (v >= n_) throw std::out_of_range("vertex index out of range");
    if (!labels_.empty() && !labels_[v].empty()) return labels_[v];
    return "v_" + std::to_string(v + 1);
}

namespace detail {

std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) {
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

std::uint64_t pack_adjacency_mask(const Graph& g) {
    std::size_t n = g.vertex_count();
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < n; ++i) {
        g.neighbors(i).for_each([&](std::size_t j) {
            if (i < j) mask |= std::uint64_t{1} << pair_index(n, i, j);
        });
    }
    return mask;
}

namespace {

// Per-n tables: every permutation as a pair-index remap. Cached for the sizes
// the corpus generator hits in bulk; larger n fall back to next_permutation.
constexpr std::size_t kTableMaxVertices = 8;

struct PermTables {
    std::size_t pair_count = 0;
    std::vector<std::vector<std::uint8_t>> remaps;
};

const PermTables& tables_for(std::size_t n) {
    static std::array<PermTables, kTableMaxVertices + 1> cache;
    static std::array<std::once_flag, kTableMaxVertices + 1> flags;
    std::call_once(flags[n], [n] {
        PermTables& t = cache[n];
        t.pair_count = n * (n - 1) / 2;
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::vector<std::uint8_t> remap(t.pair_count);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = i + 1; j < n; ++j) {
                    std::size_t pi = perm[i], pj = perm[j];
                    if (pi > pj) std::swap(pi, pj);
                    remap[pair_index(n, i, j)] =
                        static_cast<std::uint8_t>(pair_index(n, pi, pj));
                }
            }
            t.remaps.push_back(std::move(remap));
        } while (std::next_permutation(perm.begin(), perm.end()));
    });
    return cache[n];
}

} // namespace

std::uint64_t canonical_adjacency_mask(std::size_t n, std::uint64_t mask) {
    if (n <= 1) return 0;
    if (n > kCanonicalFormMaxVertices)
        throw TooLargeError("canonical_form supports at most " +
                            std::to_string(kCanonicalFormMaxVertices) + " vertices");
    std::uint64_t best = ~std::uint64_t{0};
    if (n <= kTableMaxVertices) {
        const PermTables& t = tables_for(n);
        for (const auto& remap : t.remaps) {
            std::uint64_t candidate = 0;
            std::uint64_t bits = mask;
            while (bits) {
                candidate |= std::uint64_t{1} << remap[static_cast<std::size_t>(__builtin_ctzll(bits))];
                bits &= bits - 1;
            }
            best = std::min(best, candidate);
        }
        return best;
    }
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::uint64_t candidate = 0;
        std::uint64_t bits = mask;
        while (bits) {
            std::size_t e = static_cast<std::size_t>(__builtin_ctzll(bits));
            bits &= bits - 1;
            // invert pair index: find (i, j) with i < j
            std::size_t i = 0, offset = e;
            while (offset >= n - 1 - i) {
                offset -= n - 1 - i;
                ++i;
            }
            std::size_t j = i + 1 + offset;
            std::size_t pi = perm[i], pj = perm[j];
            if (pi > pj) std::swap(pi, pj);
            candidate |= std::uint64_t{1} << pair_index(n, pi, pj);
        }
        best = std::min(best, candidate);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

} // namespace detail

std::string Graph::canonical_form() const {
    if (n_ > kCanonicalFormMaxVertices)
        throw TooLargeError("canonical_form supports at most " +
                            std::to_string(kCanonicalFormMaxVertices) +
                            " vertices, got " + std::to_string(n_));
    std::uint64_t canon = detail::canonical_adjacency_mask(n_, detail::pack_adjacency_mask(*this));
    std::ostringstream out;
    out << n_ << ":" << std::hex << canon;
    return out.str();
}

} // namespace floodpoly
