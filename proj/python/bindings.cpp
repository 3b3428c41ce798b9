#include "floodpoly/analysis.hpp"
#include "floodpoly/cascade.hpp"
#include "floodpoly/enumeration.hpp"
#include "floodpoly/families.hpp"
#include "floodpoly/formulas.hpp"
#include "floodpoly/graph_io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace floodpoly;

namespace {

// polynomials cross the boundary as python ints, lowest degree first
py::list poly_to_list(const IntPolynomial& p) {
    py::list out;
    for (const BigInt& c : p.coeffs()) out.append(py::int_(py::str(c.to_string())));
    return out;
}

VertexSet set_from_indices(const Graph& g, const std::vector<std::size_t>& vertices) {
    VertexSet out(g.vertex_count());
    for (std::size_t v : vertices) out.insert(v);
    return out;
}

Composition comp(const std::vector<unsigned>& parts) { return Composition(parts); }

} // namespace

PYBIND11_MODULE(_floodpoly, m) {
    m.doc() = "Exact flood polynomials of finite simple graphs";

    py::class_<Graph>(m, "Graph")
        .def_static("from_edges",
                    [](std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
                        return Graph::from_edge_list(n, edges);
                    },
                    py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("m", &Graph::edge_count)
        .def("degree", &Graph::degree)
        .def("edges", &Graph::edges)
        .def("triggers", &Graph::triggers)
        .def("leaves_and_isolated", [](const Graph& g) { return g.leaves_and_isolated().to_indices(); })
        .def("disjoint_union", &Graph::disjoint_union)
        .def("diameter", [](const Graph& g) { return g.diameter(); })
        .def("components",
             [](const Graph& g) {
                 std::vector<std::vector<std::size_t>> out;
                 for (const VertexSet& c : g.components()) out.push_back(c.to_indices());
                 return out;
             })
        .def("canonical_form", &Graph::canonical_form)
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.vertex_count()) +
                   " m=" + std::to_string(g.edge_count()) + ">";
        });

    m.def("from_spec", [](const std::string& text) { return graph_from_spec(text); },
          "Build a graph from a family spec like 'path:4 + cycle:4'");
    m.def("from_graph6", [](const std::string& line) { return from_graph6(line); });
    m.def("to_graph6", &to_graph6);

    m.def("closure",
          [](const Graph& g, const std::vector<std::size_t>& seed) {
              return closure(g, set_from_indices(g, seed)).to_indices();
          },
          py::arg("graph"), py::arg("seed"));
    m.def("floods",
          [](const Graph& g, const std::vector<std::size_t>& seed) {
              return floods(g, set_from_indices(g, seed));
          },
          py::arg("graph"), py::arg("seed"));

    m.def("flood_polynomial",
          [](const Graph& g, unsigned threads, std::size_t cap) {
              return poly_to_list(flood_polynomial(g, {threads, cap}));
          },
          py::arg("graph"), py::arg("threads") = 0, py::arg("cap") = kDefaultEnumerationCap,
          "Coefficients of the flood polynomial, lowest degree first, as ints");
    m.def("minimal_flooding_sets", [](const Graph& g) {
        std::vector<std::vector<std::size_t>> out;
        for (const VertexSet& s : minimal_flooding_sets(g)) out.push_back(s.to_indices());
        return out;
    });
    m.def("free_vertices", [](const Graph& g) { return free_vertices(g).to_indices(); });

    m.def("fibonacci_poly", [](unsigned n) { return poly_to_list(fibonacci_poly(n)); });
    m.def("lucas_poly", [](unsigned n) { return poly_to_list(lucas_poly(n)); });
    m.def("path_flood_poly", [](unsigned n) { return poly_to_list(path_flood_poly(n)); });
    m.def("cycle_flood_poly", [](unsigned n) { return poly_to_list(cycle_flood_poly(n)); });
    m.def("parallel_path_2n_poly", [](unsigned n) { return poly_to_list(parallel_path_2n_poly(n)); });
    m.def("triangle_mosaic_poly",
          [](unsigned n, unsigned cap) { return poly_to_list(triangle_mosaic_poly(n, cap)); },
          py::arg("n"), py::arg("cap") = kDefaultCompositionCap);
    m.def("centipede_poly",
          [](const std::vector<unsigned>& parts) { return poly_to_list(centipede_poly(comp(parts))); });
    m.def("tick_poly",
          [](const std::vector<unsigned>& parts) { return poly_to_list(tick_poly(comp(parts))); });

    m.def("facts", [](const std::string& poly_text) {
        PolyFacts f = facts_from_polynomial(IntPolynomial::parse(poly_text));
        py::dict out;
        out["n"] = f.n;
        out["flood_count"] = py::int_(py::str(f.flood_count.to_string()));
        out["leaves_plus_isolated"] = f.leaves_plus_isolated;
        out["trigger_count"] = f.trigger_count;
        out["free_vertex_upper_bound"] = f.free_vertex_upper_bound;
        return out;
    });

    m.def("verify", [](const Graph& g) {
        VerifyReport report = verify_graph(g);
        py::list laws;
        for (const LawCheck& law : report.laws) {
            laws.append(py::make_tuple(law.law, law.pass, law.detail));
        }
        return py::make_tuple(report.all_pass(), laws);
    });

    m.attr("__version__") = "0.1.0";
}
