#pragma once

#include "floodpoly/enumeration.hpp"
#include "floodpoly/graph.hpp"
#include "floodpoly/poly.hpp"

#include <string>
#include <unordered_map>
#include <vector>

namespace floodpoly {

/// Structural facts readable straight off a flood polynomial: vertex count
/// from the degree, flood-set size from the value at 1, leaves+isolated from
/// c_{n-1}, trigger count from c_{n-1} and c_{n-2}, and the (x+1)-multiplicity
/// bound on free vertices.
struct PolyFacts {
    std::size_t n = 0;
    BigInt flood_count;
    std::size_t leaves_plus_isolated = 0;
    std::size_t trigger_count = 0;
    std::size_t free_vertex_upper_bound = 0;
};

/// Throws std::invalid_argument unless p looks like a flood polynomial:
/// monic, degree >= 1, nonnegative coefficients, constant term 0 or 1, and
/// the derived counts nonnegative.
PolyFacts facts_from_polynomial(const IntPolynomial& p);

struct EquivalenceMember {
    std::size_t input_index = 0;
    std::string canonical_id;
    std::string display;
};

struct EquivalenceClass {
    IntPolynomial polynomial;
    std::vector<EquivalenceMember> members; // pairwise non-isomorphic
};

struct EquivalenceReport {
    std::vector<EquivalenceClass> classes;
    std::size_t graphs_seen = 0;
    std::size_t skipped_too_large = 0;
};

/// Streaming grouping of graphs by exact flood polynomial, with isomorphic
/// duplicates merged via canonical_form. Graphs over either cap are skipped
/// and counted.
class EquivalenceSearch {
public:
    explicit EquivalenceSearch(EnumerationOptions opts = {}) : opts_(opts) {}
    void add(const Graph& g, std::string display = {});
    /// Classes with at least two non-isomorphic members, largest polynomial
    /// degree last, deterministic order.
    EquivalenceReport finish() const;

private:
    EnumerationOptions opts_;
    std::size_t seen_ = 0;
    std::size_t skipped_ = 0;
    std::unordered_map<std::string, std::size_t> class_by_key_;
    std::vector<EquivalenceClass> classes_; // members deduped by canonical_id
};

struct LawCheck {
    std::string law;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<LawCheck> laws;
    bool all_pass() const;
};

/// Runs every polynomial-vs-structure law on one graph: monic degree n,
/// flood count = F(1), leaf law, trigger law, coefficient bounds, and the
/// free-vertex bound against the actual free vertices.
VerifyReport verify_graph(const Graph& g, const EnumerationOptions& opts = {});

/// Every isomorphism class on exactly n vertices (canonical-form dedup,
/// built by single-vertex augmentation). n <= 8.
std::vector<Graph> all_graphs(std::size_t n);

} // namespace floodpoly
