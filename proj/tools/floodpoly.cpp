#include "floodpoly/analysis.hpp"
#include "floodpoly/cascade.hpp"
#include "floodpoly/enumeration.hpp"
#include "floodpoly/errors.hpp"
#include "floodpoly/families.hpp"
#include "floodpoly/formulas.hpp"
#include "floodpoly/graph_io.hpp"
#include "floodpoly/poly_json.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace floodpoly;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTooLarge = 3;

json vertex_set_to_json(const VertexSet& s) {
    json out = json::array();
    s.for_each([&](std::size_t v) { out.push_back(v + 1); });
    return out;
}

json graph_to_json(const Graph& g) {
    return json{{"n", g.vertex_count()}, {"m", g.edge_count()}};
}

VertexSet parse_seed(const Graph& g, const std::string& seed) {
    VertexSet out(g.vertex_count());
    std::size_t start = 0;
    while (start <= seed.size()) {
        std::size_t comma = seed.find(',', start);
        std::string piece = seed.substr(start, comma == std::string::npos ? comma : comma - start);
        if (piece.empty()) throw ParseError("bad seed list: " + seed);
        std::size_t v = 0;
        for (char c : piece) {
            if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad seed vertex: " + piece);
            v = v * 10 + static_cast<std::size_t>(c - '0');
        }
        if (v == 0 || v > g.vertex_count())
            throw ParseError("seed vertex " + piece + " out of range 1.." + std::to_string(g.vertex_count()));
        out.insert(v - 1);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

int run_compute(const std::string& spec, const EnumerationOptions& opts, bool minimal, bool free_flag,
                bool as_json) {
    Graph g = graph_from_spec(spec);
    if (minimal || free_flag) {
        FloodSummary summary = flood_summary(g, opts);
        if (as_json) {
            json out{{"graph", graph_to_json(g)},
                     {"polynomial", poly_to_json(summary.polynomial)},
                     {"flood_count", summary.flood_set_size.to_string()}};
            if (minimal) {
                json sets = json::array();
                for (const VertexSet& s : summary.minimal_sets) sets.push_back(vertex_set_to_json(s));
                out["minimal_sets"] = std::move(sets);
            }
            if (free_flag) out["free_vertices"] = vertex_set_to_json(summary.free_vertices);
            std::cout << out.dump(2) << "\n";
            return kExitOk;
        }
        std::cout << "graph: " << spec << " (n = " << g.vertex_count() << ", m = " << g.edge_count() << ")\n";
        std::cout << "F(x) = " << summary.polynomial.to_string() << "\n";
        std::cout << "|F(G)| = " << summary.flood_set_size.to_string() << "\n";
        if (minimal) {
            std::cout << "minimal flooding cascade sets (" << summary.minimal_sets.size() << "):\n";
            for (const VertexSet& s : summary.minimal_sets) std::cout << "  " << s.to_display_string() << "\n";
        }
        if (free_flag) std::cout << "free vertices: " << summary.free_vertices.to_display_string() << "\n";
        return kExitOk;
    }
    IntPolynomial p = flood_polynomial(g, opts);
    if (as_json) {
        json out{{"graph", graph_to_json(g)},
                 {"polynomial", poly_to_json(p)},
                 {"flood_count", p.eval(BigInt(1)).to_string()}};
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "graph: " << spec << " (n = " << g.vertex_count() << ", m = " << g.edge_count() << ")\n";
    std::cout << "F(x) = " << p.to_string() << "\n";
    std::cout << "|F(G)| = " << p.eval(BigInt(1)).to_string() << "\n";
    return kExitOk;
}

int run_formula(const std::string& spec_text, bool as_json) {
    FamilySpec spec = FamilySpec::parse(spec_text);
    std::optional<IntPolynomial> p = formula_for_family(spec);
    if (!p) {
        std::cerr << "no closed formula for '" << spec_text
                  << "'; use `floodpoly compute` for the brute-force value\n";
        return kExitUsage;
    }
    if (as_json) {
        std::cout << json{{"polynomial", poly_to_json(*p)}}.dump(2) << "\n";
    } else {
        std::cout << "F(x) = " << p->to_string() << "\n";
    }
    return kExitOk;
}

int run_verify(const std::string& spec_text, const EnumerationOptions& opts, bool as_json) {
    FamilySpec spec = FamilySpec::parse(spec_text);
    std::optional<IntPolynomial> formula = formula_for_family(spec);
    if (!formula) {
        std::cerr << "no closed formula for '" << spec_text
                  << "'; use `floodpoly compute` for the brute-force value\n";
        return kExitUsage;
    }
    Graph g = build_graph(spec);
    IntPolynomial brute = flood_polynomial(g, opts);
    bool pass = *formula == brute;
    if (as_json) {
        json out{{"formula", poly_to_json(*formula)},
                 {"brute_force", poly_to_json(brute)},
                 {"verdict", pass ? "PASS" : "FAIL"}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "formula:     " << formula->to_string() << "\n";
        std::cout << "brute force: " << brute.to_string() << "\n";
        std::cout << "formula == brute force: " << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? kExitOk : kExitFail;
}

int run_cascade(const std::string& spec, const std::string& seed, bool as_json) {
    Graph g = graph_from_spec(spec);
    VertexSet c = parse_seed(g, seed);
    CascadeTrace t = trace(g, c);
    const VertexSet& last = t.steps.back();
    bool flooded = last == VertexSet::full(g.vertex_count());
    if (as_json) {
        json steps = json::array();
        for (const VertexSet& s : t.steps) steps.push_back(vertex_set_to_json(s));
        json out{{"graph", graph_to_json(g)},
                 {"steps", std::move(steps)},
                 {"converged_at", t.converged_at},
                 {"verdict", flooded ? "FLOODS" : "STUCK"}};
        if (!flooded) out["unflooded"] = vertex_set_to_json(last.complement());
        std::cout << out.dump(2) << "\n";
    } else {
        for (std::size_t i = 0; i < t.steps.size(); ++i)
            std::cout << "C_" << i << " = " << t.steps[i].to_display_string() << "\n";
        std::cout << "converged after " << t.converged_at << " step" << (t.converged_at == 1 ? "" : "s") << "\n";
        if (flooded) {
            std::cout << "verdict: FLOODS\n";
        } else {
            std::cout << "verdict: STUCK (unflooded: " << last.complement().to_display_string() << ")\n";
        }
    }
    return kExitOk;
}

int run_facts(const std::string& poly_text, bool as_json) {
    IntPolynomial p = IntPolynomial::parse(poly_text);
    PolyFacts facts = facts_from_polynomial(p);
    if (as_json) {
        json out{{"polynomial", poly_to_json(p)},
                 {"facts",
                  json{{"n", facts.n},
                       {"flood_count", facts.flood_count.to_string()},
                       {"leaves_plus_isolated", facts.leaves_plus_isolated},
                       {"trigger_count", facts.trigger_count},
                       {"free_vertex_upper_bound", facts.free_vertex_upper_bound}}}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "polynomial: " << p.to_string() << "\n";
        std::cout << "n = " << facts.n << "\n";
        std::cout << "|F(G)| = " << facts.flood_count.to_string() << "\n";
        std::cout << "leaves + isolated = " << facts.leaves_plus_isolated << "\n";
        std::cout << "triggers = " << facts.trigger_count << "\n";
        std::cout << "free vertices <= " << facts.free_vertex_upper_bound << "\n";
    }
    return kExitOk;
}

int run_search(std::size_t all_graphs_n, const std::string& corpus, const EnumerationOptions& opts,
               bool as_json) {
    EquivalenceSearch search(opts);
    if (all_graphs_n > 0) {
        for (const Graph& g : all_graphs(all_graphs_n)) {
            std::string display = "n=" + std::to_string(g.vertex_count()) +
                                  " m=" + std::to_string(g.edge_count()) + " " + to_graph6(g);
            search.add(g, display);
        }
    } else {
        std::vector<Graph> graphs = read_graph6_file(corpus);
        for (const Graph& g : graphs) search.add(g, to_graph6(g));
    }
    EquivalenceReport report = search.finish();
    if (as_json) {
        json classes = json::array();
        for (const EquivalenceClass& cls : report.classes) {
            json members = json::array();
            for (const EquivalenceMember& m : cls.members)
                members.push_back(json{{"index", m.input_index}, {"display", m.display}});
            classes.push_back(json{{"polynomial", poly_to_json(cls.polynomial)},
                                   {"members", std::move(members)}});
        }
        json out{{"classes", std::move(classes)},
                 {"graphs_seen", report.graphs_seen},
                 {"skipped_too_large", report.skipped_too_large}};
        std::cout << out.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "searched " << report.graphs_seen << " graphs";
    if (report.skipped_too_large) std::cout << " (skipped " << report.skipped_too_large << " too large)";
    std::cout << "\n";
    for (std::size_t i = 0; i < report.classes.size(); ++i) {
        const EquivalenceClass& cls = report.classes[i];
        std::cout << "class " << i + 1 << ": F(x) = " << cls.polynomial.to_string() << "\n";
        for (const EquivalenceMember& m : cls.members) std::cout << "  - " << m.display << "\n";
    }
    std::cout << report.classes.size() << " class" << (report.classes.size() == 1 ? "" : "es")
              << " with >= 2 non-isomorphic members\n";
    return kExitOk;
}

int run_families(const std::string& spec, bool as_json) {
    Graph g = graph_from_spec(spec);
    if (as_json) {
        json edges = json::array();
        for (const auto& [u, v] : g.edges()) edges.push_back(json::array({u + 1, v + 1}));
        json labels = json::array();
        for (std::size_t v = 0; v < g.vertex_count(); ++v) labels.push_back(g.label(v));
        std::cout << json{{"graph", graph_to_json(g)}, {"edges", std::move(edges)},
                          {"labels", std::move(labels)}}
                         .dump(2)
                  << "\n";
        return kExitOk;
    }
    std::cout << "# " << spec << "\n";
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        std::cout << "# " << v + 1 << " = " << g.label(v) << "\n";
    write_edge_list(std::cout, g);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"floodpoly: exact flood polynomials of finite simple graphs"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may sit before or after the subcommand

    EnumerationOptions opts;
    bool as_json = false;
    app.add_option("--threads", opts.threads, "enumeration worker count (0 = all cores)");
    app.add_option("--cap", opts.cap, "enumeration vertex cap")->default_val(kDefaultEnumerationCap);
    app.add_flag("--json", as_json, "machine-readable JSON output");

    std::string graph_arg, seed_arg, poly_arg, corpus_arg;
    bool minimal = false, free_flag = false;
    std::size_t all_graphs_n = 0;

    CLI::App* compute = app.add_subcommand("compute", "brute-force flood polynomial of a graph");
    compute->add_option("graph", graph_arg, "family spec or @edge-list-file")->required();
    compute->add_flag("--minimal", minimal, "list minimal flooding cascade sets");
    compute->add_flag("--free", free_flag, "list free vertices");

    CLI::App* formula = app.add_subcommand("formula", "closed-form/recursive flood polynomial");
    formula->add_option("family", graph_arg, "family spec")->required();

    CLI::App* verify = app.add_subcommand("verify", "formula vs brute force");
    verify->add_option("family", graph_arg, "family spec")->required();

    CLI::App* cascade = app.add_subcommand("cascade", "run one cascade to its fixed point");
    cascade->add_option("graph", graph_arg, "family spec or @edge-list-file")->required();
    cascade->add_option("--seed", seed_arg, "1-indexed seed vertices, comma-separated")->required();

    CLI::App* facts = app.add_subcommand("facts", "graph facts recoverable from a flood polynomial");
    facts->add_option("polynomial", poly_arg, "e.g. \"x^4 + 4x^3 + 2x^2\"")->required();

    CLI::App* search = app.add_subcommand("search", "find non-isomorphic graphs sharing a flood polynomial");
    CLI::Option* all_opt = search->add_option("--all-graphs", all_graphs_n,
                                              "search every isomorphism class on N vertices");
    search->add_option("--corpus", corpus_arg, "graph6 file, one graph per line")->excludes(all_opt);

    CLI::App* families = app.add_subcommand("families", "print a generated family graph as an edge list");
    families->add_option("family", graph_arg, "family spec or @edge-list-file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (compute->parsed()) return run_compute(graph_arg, opts, minimal, free_flag, as_json);
        if (formula->parsed()) return run_formula(graph_arg, as_json);
        if (verify->parsed()) return run_verify(graph_arg, opts, as_json);
        if (cascade->parsed()) return run_cascade(graph_arg, seed_arg, as_json);
        if (facts->parsed()) return run_facts(poly_arg, as_json);
        if (search->parsed()) {
            if (all_graphs_n == 0 && corpus_arg.empty()) {
                std::cerr << "search needs --all-graphs N or --corpus file.g6\n";
                return kExitUsage;
            }
            return run_search(all_graphs_n, corpus_arg, opts, as_json);
        }
        if (families->parsed()) return run_families(graph_arg, as_json);
    } catch (const TooLargeError& e) {
        std::cerr << "too large: " << e.what() << "\n";
        return kExitTooLarge;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "out of range: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
