#include "floodpoly/enumeration.hpp"

#include "floodpoly/cascade.hpp"
#include "floodpoly/errors.hpp"

#include <algorithm>
#include <bit>
#include <thread>

namespace floodpoly {

namespace {

void check_cap(const Graph& g, const EnumerationOptions& opts) {
    std::size_t cap = std::min(opts.cap, kEnumerationHardLimit);
    if (g.vertex_count() > cap)
        throw TooLargeError("graph has " + std::to_string(g.vertex_count()) +
                            " vertices, enumeration cap is " + std::to_string(cap));
}

struct Kernel {
    std::size_t n;
    std::vector<std::uint64_t> adj;
    std::uint64_t full;
    std::uint64_t required; // leaves and isolated points: present in every flooding set

    explicit Kernel(const Graph& g) : n(g.vertex_count()), adj(n), full(0), required(0) {
        for (std::size_t v = 0; v < n; ++v) adj[v] = g.neighbors(v).word(0);
        full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        required = g.leaves_and_isolated().as_mask();
    }

    bool floods(std::uint64_t c) const {
        // a set missing any leaf or isolated point never floods
        if ((c & required) != required) return false;
        return detail::closure64(adj.data(), n, c) == full;
    }
};

unsigned worker_count(const EnumerationOptions& opts, std::size_t n) {
    unsigned t = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    if (n < 12) t = 1; // range smaller than the spawn cost
    return t;
}

} // namespace

IntPolynomial flood_polynomial(const Graph& g, const EnumerationOptions& opts) {
    check_cap(g, opts);
    const std::size_t n = g.vertex_count();
    if (n == 0) return IntPolynomial::constant(BigInt(1)); // the empty set floods the empty graph

    Kernel kernel(g);
    const std::uint64_t total = std::uint64_t{1} << n;
    const unsigned workers = worker_count(opts, n);

    std::vector<std::vector<std::uint64_t>> counts(workers, std::vector<std::uint64_t>(n + 1, 0));
    auto run_range = [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
        auto& local = counts[w];
        for (std::uint64_t c = lo; c < hi; ++c) {
            if (kernel.floods(c)) ++local[static_cast<std::size_t>(std::popcount(c))];
        }
    };

    if (workers == 1) {
        run_range(0, 0, total);
    } else {
        // contiguous ranges = fixing the high-order subset bits per worker
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            std::uint64_t lo = total / workers * w;
            std::uint64_t hi = w + 1 == workers ? total : total / workers * (w + 1);
            pool.emplace_back(run_range, w, lo, hi);
        }
        for (auto& t : pool) t.join();
    }

    std::vector<BigInt> coeffs(n + 1, BigInt(0));
    for (const auto& local : counts) {
        for (std::size_t k = 0; k <= n; ++k) {
            if (local[k]) coeffs[k] += BigInt(static_cast<std::int64_t>(local[k]));
        }
    }
    return IntPolynomial(std::move(coeffs));
}

std::vector<VertexSet> minimal_flooding_sets(const Graph& g, const EnumerationOptions& opts) {
    check_cap(g, opts);
    const std::size_t n = g.vertex_count();
    std::vector<VertexSet> out;
    if (n == 0) {
        out.push_back(VertexSet(0));
        return out;
    }

    Kernel kernel(g);
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t c = 0; c < total; ++c) {
        if (!kernel.floods(c)) continue;
        bool minimal = true;
        std::uint64_t bits = c;
        while (bits && minimal) {
            std::uint64_t low = bits & (~bits + 1);
            bits ^= low;
            if (kernel.floods(c ^ low)) minimal = false;
        }
        if (minimal) out.push_back(VertexSet::from_mask(n, c));
    }
    std::sort(out.begin(), out.end(), VertexSet::size_lex_less);
    return out;
}

VertexSet free_vertices(const Graph& g, const EnumerationOptions& opts) {
    VertexSet used(g.vertex_count());
    for (const VertexSet& s : minimal_flooding_sets(g, opts)) used |= s;
    return used.complement();
}

FloodSummary flood_summary(const Graph& g, const EnumerationOptions& opts) {
    FloodSummary out;
    out.polynomial = flood_polynomial(g, opts);
    out.flood_set_size = out.polynomial.eval(BigInt(1));
    out.minimal_sets = minimal_flooding_sets(g, opts);
    VertexSet used(g.vertex_count());
    for (const VertexSet& s : out.minimal_sets) used |= s;
    out.free_vertices = used.complement();
    return out;
}

} // namespace floodpoly
