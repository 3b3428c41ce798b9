#include "floodpoly/graph_io.hpp"

#include "floodpoly/errors.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace floodpoly {

namespace {

bool skippable(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

} // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            if (!skippable(line)) return true;
        }
        return false;
    };

    if (!next_line()) throw ParseError("edge list: missing header line \"n m\"");
    std::size_t n = 0, m = 0;
    {
        std::istringstream header(line);
        if (!(header >> n >> m)) throw ParseError("edge list: bad header line: " + line);
    }
    if (n > 16384)
        throw TooLargeError("edge list declares " + std::to_string(n) +
                            " vertices; the dense representation caps at 16384");
    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (!next_line()) throw ParseError("edge list: expected " + std::to_string(m) +
                                           " edges, got " + std::to_string(i));
        std::istringstream row(line);
        std::size_t u = 0, v = 0;
        if (!(row >> u >> v)) throw ParseError("edge list: bad edge line: " + line);
        if (u == 0 || v == 0) throw ParseError("edge list: vertices are 1-indexed: " + line);
        edges.emplace_back(u - 1, v - 1);
    }
    return Graph::from_edge_list(n, edges);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open edge list file: " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const auto& [u, v] : g.edges()) out << u + 1 << " " << v + 1 << "\n";
}

Graph from_graph6(std::string_view line) {
    if (line.empty()) throw ParseError("graph6: empty line");
    std::size_t pos = 0;
    if (line[0] == '>') {
        constexpr std::string_view header = ">>graph6<<";
        if (line.substr(0, header.size()) != header) throw ParseError("graph6: bad header");
        pos = header.size();
    }
    if (pos >= line.size()) throw ParseError("graph6: missing size byte");
    unsigned char first = static_cast<unsigned char>(line[pos]);
    if (first == 126) throw TooLargeError("graph6: only n <= 62 is supported");
    if (first < 63 || first > 63 + 62) throw ParseError("graph6: bad size byte");
    const std::size_t n = first - 63;
    ++pos;

    const std::size_t bits = n * (n - 1) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (line.size() - pos < bytes)
        throw ParseError("graph6: truncated line (need " + std::to_string(bytes) + " data bytes)");

    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++bit) {
            unsigned char byte = static_cast<unsigned char>(line[pos + bit / 6]);
            if (byte < 63 || byte > 126) throw ParseError("graph6: byte out of range");
            unsigned value = byte - 63;
            if ((value >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    return Graph::from_edge_list(n, edges);
}

std::string to_graph6(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n > 62) throw TooLargeError("graph6: only n <= 62 is supported");
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    const std::size_t bits = n * (n - 1) / 2;
    std::vector<unsigned char> data((bits + 5) / 6, 0);
    std::size_t bit = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++bit) {
            if (g.has_edge(i, j)) data[bit / 6] |= 1u << (5 - bit % 6);
        }
    }
    for (unsigned char b : data) out.push_back(static_cast<char>(63 + b));
    return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph6 file: " + path);
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty()) continue;
        if (line == ">>graph6<<") continue;
        out.push_back(from_graph6(line));
    }
    return out;
}

} // namespace floodpoly
