#pragma once

#include "floodpoly/graph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace floodpoly {

/// Composition of a positive integer: nonempty sequence of parts >= 1.
class Composition {
public:
    explicit Composition(std::vector<unsigned> parts);
    Composition(std::initializer_list<unsigned> parts)
        : Composition(std::vector<unsigned>(parts)) {}

    const std::vector<unsigned>& parts() const { return parts_; }
    unsigned sum() const { return sum_; }
    std::size_t length() const { return parts_.size(); }

    friend bool operator==(const Composition&, const Composition&) = default;

private:
    std::vector<unsigned> parts_;
    unsigned sum_ = 0;
};

/// D(alpha): partial sums of alpha without the last, a subset of [n-1].
std::vector<unsigned> descent_set(const Composition& a);
/// co(S): the composition of n whose descent set is S (S ascending, within
/// 1..n-1). Inverse of descent_set. Throws std::out_of_range.
Composition composition_from_descents(const std::vector<unsigned>& descents, unsigned n);

Graph path(std::size_t n);                          // n >= 1
Graph parallel_path(std::size_t m, std::size_t n);  // m, n >= 1; row-major vertex order
Graph cycle(std::size_t n);                         // n >= 3
Graph complete(std::size_t n);                      // n >= 1
Graph triangle_mosaic(std::size_t n);               // n >= 1; edges where |i-j| <= 2

/// Path on sum(a)+1 vertices with four pendant leaves at v_{d+1} for each
/// d in D(a). Requires sum(a) >= 2.
Graph centipede(const Composition& a);
/// Cycle on sum(a) vertices with four pendant leaves at v_d for each
/// d in D(a) and at v_n. Requires sum(a) >= 3.
Graph tick(const Composition& a);

/// Streams COMP(n, 4): the compositions of n+1 having an interior part of
/// size <= 4, in lexicographic order of their descent sets. No
/// materialization; |COMP(n, 4)| grows like 2^n.
class CompN4Stream {
public:
    explicit CompN4Stream(unsigned n); // n >= 1
    /// Advances to the next composition; false when exhausted.
    bool next(Composition& out);

private:
    unsigned n_;
    std::vector<unsigned> descents_;
    bool started_ = false;
    bool advance();
    bool qualifies() const;
};

struct FamilyAtom {
    enum class Kind { Path, Grid, Cycle, Complete, Triangle, Centipede, Tick, EdgeList };
    Kind kind;
    std::size_t a = 0, b = 0;           // numeric parameters
    std::vector<unsigned> parts;        // centipede / tick
    std::string file;                   // edgelist
};

/// Parsed family expression: `atom (+ atom)*` where atom is one of
/// path:n, grid:MxN, cycle:n, complete:n, triangle:n, centipede:a1,a2,...,
/// tick:a1,a2,..., edgelist:file.
struct FamilySpec {
    std::vector<FamilyAtom> atoms;

    static FamilySpec parse(std::string_view text); // ParseError
    std::string to_string() const;
};

/// Generates the graph: disjoint-union fold over the atoms.
Graph build_graph(const FamilySpec& spec);
/// parse + build in one step. Also accepts "@file" for an edge-list file.
Graph graph_from_spec(std::string_view text);

} // namespace floodpoly
