#include "floodpoly/families.hpp"

#include "floodpoly/errors.hpp"
#include "floodpoly/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace floodpoly {

Composition::Composition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("composition must have at least one part");
    for (unsigned p : parts_) {
        if (p == 0) throw std::invalid_argument("composition parts must be positive");
        sum_ += p;
    }
}

std::vector<unsigned> descent_set(const Composition& a) {
    std::vector<unsigned> out;
    out.reserve(a.length() - 1);
    unsigned run = 0;
    for (std::size_t i = 0; i + 1 < a.length(); ++i) {
        run += a.parts()[i];
        out.push_back(run);
    }
    return out;
}

Composition composition_from_descents(const std::vector<unsigned>& descents, unsigned n) {
    if (n == 0) throw std::out_of_range("co(S, n) needs n >= 1");
    std::vector<unsigned> parts;
    parts.reserve(descents.size() + 1);
    unsigned prev = 0;
    for (unsigned s : descents) {
        if (s <= prev || s >= n)
            throw std::out_of_range("descent set must be strictly increasing within 1..n-1");
        parts.push_back(s - prev);
        prev = s;
    }
    parts.push_back(n - prev);
    return Composition(std::move(parts));
}

namespace {

// the dense neighbor-set representation costs n^2 bits
constexpr std::size_t kMaxGeneratedVertices = 16384;

void check_generated_size(std::size_t n) {
    if (n > kMaxGeneratedVertices)
        throw TooLargeError("generated graph would have " + std::to_string(n) +
                            " vertices; the dense representation caps at " +
                            std::to_string(kMaxGeneratedVertices));
}

std::vector<std::string> index_labels(std::size_t n) {
    std::vector<std::string> out;
    out.reserve(n);
    for (std::size_t v = 1; v <= n; ++v) out.push_back("v_" + std::to_string(v));
    return out;
}

} // namespace

Graph path(std::size_t n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    check_generated_size(n);
    std::vector<Edge> edges;
    for (std::size_t v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edge_list(n, edges, index_labels(n));
}

Graph parallel_path(std::size_t m, std::size_t n) {
    if (m < 1 || n < 1) throw std::invalid_argument("parallel_path needs m, n >= 1");
    check_generated_size(m * n);
    const auto id = [n](std::size_t i, std::size_t j) { return i * n + j; };
    std::vector<Edge> edges;
    std::vector<std::string> labels(m * n);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            labels[id(i, j)] = "v_{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "}";
            if (j + 1 < n) edges.emplace_back(id(i, j), id(i, j + 1));
            if (i + 1 < m) edges.emplace_back(id(i, j), id(i + 1, j));
        }
    }
    return Graph::from_edge_list(m * n, edges, std::move(labels));
}

Graph cycle(std::size_t n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    check_generated_size(n);
    std::vector<Edge> edges;
    for (std::size_t v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph::from_edge_list(n, edges, index_labels(n));
}

Graph complete(std::size_t n) {
    if (n < 1) throw std::invalid_argument("complete needs n >= 1");
    check_generated_size(n);
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    }
    return Graph::from_edge_list(n, edges, index_labels(n));
}

Graph triangle_mosaic(std::size_t n) {
    if (n < 1) throw std::invalid_argument("triangle_mosaic needs n >= 1");
    check_generated_size(n);
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n && v <= u + 2; ++v) edges.emplace_back(u, v);
    }
    return Graph::from_edge_list(n, edges, index_labels(n));
}

namespace {

// Shared spine-plus-pendants builder for centipede and tick.
Graph decorated_spine(std::size_t spine, bool cyclic, const std::vector<unsigned>& decorated) {
    check_generated_size(spine + 4 * decorated.size());
    std::vector<Edge> edges;
    for (std::size_t v = 0; v + 1 < spine; ++v) edges.emplace_back(v, v + 1);
    if (cyclic) edges.emplace_back(spine - 1, 0);
    std::vector<std::string> labels = index_labels(spine);
    std::size_t next = spine;
    for (unsigned d : decorated) {
        for (int leaf = 1; leaf <= 4; ++leaf) {
            edges.emplace_back(static_cast<std::size_t>(d) - 1, next++);
            labels.push_back("l_{" + std::to_string(d) + "," + std::to_string(leaf) + "}");
        }
    }
    return Graph::from_edge_list(next, edges, std::move(labels));
}

} // namespace

Graph centipede(const Composition& a) {
    const std::size_t n = a.sum() + 1;
    if (n < 3) throw std::invalid_argument("centipede needs a composition of n-1 with n >= 3");
    std::vector<unsigned> decorated = descent_set(a);
    for (unsigned& d : decorated) ++d; // leaves sit at v_{d+1}
    return decorated_spine(n, false, decorated);
}

Graph tick(const Composition& a) {
    const std::size_t n = a.sum();
    if (n < 3) throw std::invalid_argument("tick needs a composition of n >= 3");
    std::vector<unsigned> decorated = descent_set(a);
    decorated.push_back(static_cast<unsigned>(n));
    return decorated_spine(n, true, decorated);
}

CompN4Stream::CompN4Stream(unsigned n) : n_(n) {
    if (n < 1) throw std::invalid_argument("COMP(n, 4) needs n >= 1");
}

// Descent subsets of [n] in lexicographic sequence order:
// {} -> {1} -> {1,2} -> ... -> {1,n} -> {2} -> ... -> {n}.
bool CompN4Stream::advance() {
    if (!started_) {
        started_ = true;
        return true; // the empty set
    }
    if (descents_.empty()) {
        descents_.push_back(1);
        return n_ >= 1;
    }
    if (descents_.back() < n_) {
        descents_.push_back(descents_.back() + 1);
        return true;
    }
    descents_.pop_back();
    if (descents_.empty()) return false;
    ++descents_.back();
    return true;
}

bool CompN4Stream::qualifies() const {
    // interior parts of co(S, n+1) are the gaps between consecutive descents
    for (std::size_t i = 0; i + 1 < descents_.size(); ++i) {
        if (descents_[i + 1] - descents_[i] <= 4) return true;
    }
    return false;
}

bool CompN4Stream::next(Composition& out) {
    while (advance()) {
        if (qualifies()) {
            out = composition_from_descents(descents_, n_ + 1);
            return true;
        }
    }
    return false;
}

namespace {

std::size_t parse_size(std::string_view text, std::string_view what) {
    if (text.empty()) throw ParseError("missing " + std::string(what));
    std::size_t value = 0;
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("invalid " + std::string(what) + ": " + std::string(text));
        value = value * 10 + static_cast<std::size_t>(c - '0');
        // the dense neighbor-set representation is quadratic in n
        if (value > 10'000) throw ParseError("unreasonably large " + std::string(what));
    }
    return value;
}

std::vector<unsigned> parse_parts(std::string_view text) {
    std::vector<unsigned> parts;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string_view piece = text.substr(start, comma == std::string_view::npos ? comma : comma - start);
        parts.push_back(static_cast<unsigned>(parse_size(piece, "composition part")));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return parts;
}

FamilyAtom parse_atom(std::string_view text) {
    std::size_t colon = text.find(':');
    if (colon == std::string_view::npos)
        throw ParseError("family atom needs the form name:params, got: " + std::string(text));
    std::string_view name = text.substr(0, colon);
    std::string_view params = text.substr(colon + 1);
    FamilyAtom atom;
    if (name == "path") {
        atom.kind = FamilyAtom::Kind::Path;
        atom.a = parse_size(params, "path length");
    } else if (name == "grid") {
        atom.kind = FamilyAtom::Kind::Grid;
        std::size_t x = params.find('x');
        if (x == std::string_view::npos) throw ParseError("grid needs MxN, got: " + std::string(params));
        atom.a = parse_size(params.substr(0, x), "grid rows");
        atom.b = parse_size(params.substr(x + 1), "grid columns");
    } else if (name == "cycle") {
        atom.kind = FamilyAtom::Kind::Cycle;
        atom.a = parse_size(params, "cycle length");
    } else if (name == "complete") {
        atom.kind = FamilyAtom::Kind::Complete;
        atom.a = parse_size(params, "complete graph size");
    } else if (name == "triangle") {
        atom.kind = FamilyAtom::Kind::Triangle;
        atom.a = parse_size(params, "triangle mosaic size");
    } else if (name == "centipede") {
        atom.kind = FamilyAtom::Kind::Centipede;
        atom.parts = parse_parts(params);
    } else if (name == "tick") {
        atom.kind = FamilyAtom::Kind::Tick;
        atom.parts = parse_parts(params);
    } else if (name == "edgelist") {
        atom.kind = FamilyAtom::Kind::EdgeList;
        atom.file = std::string(params);
        if (atom.file.empty()) throw ParseError("edgelist needs a file path");
    } else {
        throw ParseError("unknown family: " + std::string(name));
    }
    return atom;
}

std::string_view trimmed(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

} // namespace

FamilySpec FamilySpec::parse(std::string_view text) {
    FamilySpec spec;
    std::size_t start = 0;
    std::string source(text);
    // the circled-plus union sign is accepted as a synonym for '+'
    for (std::size_t pos; (pos = source.find("\xE2\x8A\x95")) != std::string::npos;)
        source.replace(pos, 3, "+");
    while (start <= source.size()) {
        std::size_t plus = source.find('+', start);
        std::string_view piece = std::string_view(source).substr(
            start, plus == std::string::npos ? plus : plus - start);
        piece = trimmed(piece);
        if (piece.empty()) throw ParseError("empty family atom in: " + source);
        spec.atoms.push_back(parse_atom(piece));
        if (plus == std::string::npos) break;
        start = plus + 1;
    }
    if (spec.atoms.empty()) throw ParseError("empty family spec");
    return spec;
}

std::string FamilySpec::to_string() const {
    std::string out;
    for (const FamilyAtom& atom : atoms) {
        if (!out.empty()) out += " + ";
        switch (atom.kind) {
        case FamilyAtom::Kind::Path: out += "path:" + std::to_string(atom.a); break;
        case FamilyAtom::Kind::Grid:
            out += "grid:" + std::to_string(atom.a) + "x" + std::to_string(atom.b);
            break;
        case FamilyAtom::Kind::Cycle: out += "cycle:" + std::to_string(atom.a); break;
        case FamilyAtom::Kind::Complete: out += "complete:" + std::to_string(atom.a); break;
        case FamilyAtom::Kind::Triangle: out += "triangle:" + std::to_string(atom.a); break;
        case FamilyAtom::Kind::Centipede:
        case FamilyAtom::Kind::Tick: {
            out += atom.kind == FamilyAtom::Kind::Centipede ? "centipede:" : "tick:";
            for (std::size_t i = 0; i < atom.parts.size(); ++i) {
                if (i) out += ",";
                out += std::to_string(atom.parts[i]);
            }
            break;
        }
        case FamilyAtom::Kind::EdgeList: out += "edgelist:" + atom.file; break;
        }
    }
    return out;
}

Graph build_graph(const FamilySpec& spec) {
    Graph out = Graph::from_edge_list(0, {});
    for (const FamilyAtom& atom : spec.atoms) {
        Graph part = [&]() -> Graph {
            switch (atom.kind) {
            case FamilyAtom::Kind::Path: return path(atom.a);
            case FamilyAtom::Kind::Grid: return parallel_path(atom.a, atom.b);
            case FamilyAtom::Kind::Cycle: return cycle(atom.a);
            case FamilyAtom::Kind::Complete: return complete(atom.a);
            case FamilyAtom::Kind::Triangle: return triangle_mosaic(atom.a);
            case FamilyAtom::Kind::Centipede: return centipede(Composition(atom.parts));
            case FamilyAtom::Kind::Tick: return tick(Composition(atom.parts));
            case FamilyAtom::Kind::EdgeList: return read_edge_list_file(atom.file);
            }
            throw std::logic_error("unreachable");
        }();
        out = out.disjoint_union(part);
    }
    return out;
}

Graph graph_from_spec(std::string_view text) {
    std::string_view t = trimmed(text);
    if (!t.empty() && t.front() == '@') return read_edge_list_file(std::string(t.substr(1)));
    return build_graph(FamilySpec::parse(t));
}

} // namespace floodpoly
