#include "floodpoly/analysis.hpp"

#include "floodpoly/errors.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace floodpoly {

PolyFacts facts_from_polynomial(const IntPolynomial& p) {
    if (p.is_zero() || p.degree() < 1)
        throw std::invalid_argument("not a flood polynomial: degree must be >= 1");
    if (!(p.leading_coeff() == BigInt(1)))
        throw std::invalid_argument("not a flood polynomial: must be monic");
    for (const BigInt& c : p.coeffs()) {
        if (c.sign() < 0) throw std::invalid_argument("not a flood polynomial: negative coefficient");
    }
    if (p.coeff(0) > BigInt(1))
        throw std::invalid_argument("not a flood polynomial: constant term must be 0 or 1");

    PolyFacts facts;
    facts.n = static_cast<std::size_t>(p.degree());
    const std::int64_t n = static_cast<std::int64_t>(facts.n);
    facts.flood_count = p.eval(BigInt(1));

    const BigInt& c1 = p.coeff(facts.n - 1);
    if (c1 > BigInt(n))
        throw std::invalid_argument("not a flood polynomial: c_{n-1} exceeds n");
    const std::int64_t leaves = n - c1.to_int64();
    facts.leaves_plus_isolated = static_cast<std::size_t>(leaves);

    if (facts.n >= 2) {
        const BigInt& c2 = p.coeff(facts.n - 2);
        if (c2 > binomial(static_cast<unsigned>(n), 2))
            throw std::invalid_argument("not a flood polynomial: c_{n-2} exceeds C(n,2)");
        const std::int64_t triggers = n * (n - 1) / 2 - (n - 1) * leaves +
                                      leaves * (leaves - 1) / 2 - c2.to_int64();
        if (triggers < 0)
            throw std::invalid_argument("not a flood polynomial: trigger formula is negative");
        facts.trigger_count = static_cast<std::size_t>(triggers);
    }
    facts.free_vertex_upper_bound = p.multiplicity_x_plus_1();
    return facts;
}

void EquivalenceSearch::add(const Graph& g, std::string display) {
    ++seen_;
    IntPolynomial poly;
    std::string canon;
    try {
        poly = flood_polynomial(g, opts_);
        canon = g.canonical_form();
    } catch (const TooLargeError&) {
        ++skipped_;
        return;
    }
    std::string key = poly.key();
    auto [it, inserted] = class_by_key_.try_emplace(key, classes_.size());
    if (inserted) classes_.push_back(EquivalenceClass{poly, {}});
    EquivalenceClass& cls = classes_[it->second];
    for (const EquivalenceMember& member : cls.members) {
        if (member.canonical_id == canon) return; // isomorphic duplicate
    }
    if (display.empty()) display = "graph#" + std::to_string(seen_ - 1);
    cls.members.push_back(EquivalenceMember{seen_ - 1, canon, std::move(display)});
}

EquivalenceReport EquivalenceSearch::finish() const {
    EquivalenceReport report;
    report.graphs_seen = seen_;
    report.skipped_too_large = skipped_;
    for (const EquivalenceClass& cls : classes_) {
        if (cls.members.size() >= 2) report.classes.push_back(cls);
    }
    std::sort(report.classes.begin(), report.classes.end(),
              [](const EquivalenceClass& a, const EquivalenceClass& b) {
                  if (a.polynomial.degree() != b.polynomial.degree())
                      return a.polynomial.degree() < b.polynomial.degree();
                  return a.polynomial.key() < b.polynomial.key();
              });
    return report;
}

bool VerifyReport::all_pass() const {
    for (const LawCheck& law : laws) {
        if (!law.pass) return false;
    }
    return true;
}

VerifyReport verify_graph(const Graph& g, const EnumerationOptions& opts) {
    VerifyReport report;
    const std::size_t n = g.vertex_count();
    FloodSummary summary = flood_summary(g, opts);
    const IntPolynomial& p = summary.polynomial;

    auto push = [&](std::string law, bool pass, std::string detail) {
        report.laws.push_back(LawCheck{std::move(law), pass, std::move(detail)});
    };

    {
        bool pass = p.degree() == static_cast<int>(n) && p.leading_coeff() == BigInt(1);
        push("monic degree n", pass, "deg = " + std::to_string(p.degree()));
    }
    {
        bool pass = true;
        for (std::size_t k = 0; k <= n; ++k) {
            const BigInt& c = p.coeff(k);
            if (c.sign() < 0 || c > binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)))
                pass = false;
        }
        push("0 <= c_k <= C(n,k)", pass, "");
    }

    PolyFacts facts = facts_from_polynomial(p);
    {
        bool pass = facts.flood_count == summary.flood_set_size;
        push("|F(G)| = F(1)", pass, facts.flood_count.to_string());
    }
    {
        std::size_t actual = g.leaves_and_isolated().count();
        bool pass = facts.leaves_plus_isolated == actual;
        push("leaves+isolated = n - c_{n-1}", pass,
             "poly says " + std::to_string(facts.leaves_plus_isolated) +
                 ", graph has " + std::to_string(actual));
    }
    {
        std::size_t actual = g.triggers().size();
        bool pass = facts.trigger_count == actual;
        push("trigger count formula", pass,
             "poly says " + std::to_string(facts.trigger_count) +
                 ", graph has " + std::to_string(actual));
    }
    {
        std::size_t actual = summary.free_vertices.count();
        bool pass = actual <= facts.free_vertex_upper_bound;
        push("free vertices <= (x+1)-multiplicity", pass,
             std::to_string(actual) + " <= " + std::to_string(facts.free_vertex_upper_bound));
    }
    return report;
}

std::vector<Graph> all_graphs(std::size_t n) {
    if (n == 0) return {};
    if (n > 8) throw TooLargeError("all_graphs is exhaustive permutation search; n <= 8 only");

    std::vector<std::uint64_t> reps{0}; // the 1-vertex graph
    for (std::size_t k = 2; k <= n; ++k) {
        std::unordered_set<std::uint64_t> seen;
        std::vector<std::uint64_t> next;
        for (std::uint64_t rep : reps) {
            // re-pack the (k-1)-vertex mask into k-vertex pair indexing
            std::uint64_t base = 0;
            std::uint64_t bits = rep;
            while (bits) {
                std::size_t e = static_cast<std::size_t>(__builtin_ctzll(bits));
                bits &= bits - 1;
                std::size_t i = 0, offset = e;
                while (offset >= k - 2 - i) {
                    offset -= k - 2 - i;
                    ++i;
                }
                std::size_t j = i + 1 + offset;
                base |= std::uint64_t{1} << detail::pair_index(k, i, j);
            }
            // new vertex k-1 attached to every subset of the old vertices
            for (std::uint64_t nbrs = 0; nbrs < (std::uint64_t{1} << (k - 1)); ++nbrs) {
                std::uint64_t mask = base;
                std::uint64_t nb = nbrs;
                while (nb) {
                    std::size_t i = static_cast<std::size_t>(__builtin_ctzll(nb));
                    nb &= nb - 1;
                    mask |= std::uint64_t{1} << detail::pair_index(k, i, k - 1);
                }
                std::uint64_t canon = detail::canonical_adjacency_mask(k, mask);
                if (seen.insert(canon).second) next.push_back(canon);
            }
        }
        std::sort(next.begin(), next.end());
        reps = std::move(next);
    }

    std::vector<Graph> out;
    out.reserve(reps.size());
    for (std::uint64_t mask : reps) {
        std::vector<Edge> edges;
        std::uint64_t bits = mask;
        while (bits) {
            std::size_t e = static_cast<std::size_t>(__builtin_ctzll(bits));
            bits &= bits - 1;
            std::size_t i = 0, offset = e;
            while (offset >= n - 1 - i) {
                offset -= n - 1 - i;
                ++i;
            }
            edges.emplace_back(i, i + 1 + offset);
        }
        out.push_back(Graph::from_edge_list(n, edges));
    }
    return out;
}

} // namespace floodpoly
