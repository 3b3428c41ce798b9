#include "floodpoly/graph_io.hpp"
#include "floodpoly/errors.hpp"
#include "floodpoly/families.hpp"

#include <doctest.h>

#include "testutil.hpp"

#include <fstream>
#include <random>
#include <sstream>

using namespace floodpoly;

TEST_CASE("edge list reading") {
    std::istringstream in(
        "# a square with a tail\n"
        "\n"
        "5 5\n"
        "1 2\n"
        "2 3\n"
        "3 4\n"
        "4 1\n"
        "  2 5\n");
    Graph g = read_edge_list(in);
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 5);
    CHECK(g.has_edge(1, 4));
    CHECK(g.triggers() == testutil::square_with_pendant().triggers());
}

TEST_CASE("edge list writing round trips") {
    std::mt19937 rng(101);
    for (int i = 0; i < 20; ++i) {
        Graph g = testutil::random_graph(rng, 9, 0.4);
        std::ostringstream out;
        write_edge_list(out, g);
        std::istringstream in(out.str());
        Graph back = read_edge_list(in);
        CHECK(back.vertex_count() == g.vertex_count());
        CHECK(back.edges() == g.edges());
    }
}

TEST_CASE("edge list errors") {
    std::istringstream missing("3 2\n1 2\n");
    CHECK_THROWS_AS(read_edge_list(missing), ParseError);
    std::istringstream zero_indexed("2 1\n0 1\n");
    CHECK_THROWS_AS(read_edge_list(zero_indexed), ParseError);
    std::istringstream junk("nope\n");
    CHECK_THROWS_AS(read_edge_list(junk), ParseError);
    CHECK_THROWS_AS(read_edge_list_file("/nonexistent/file.txt"), ParseError);
}

TEST_CASE("graph6 known encodings") {
    // n=1: header byte only
    CHECK(to_graph6(path(1)) == "@");
    // n=2, no edges: single all-zero data byte
    CHECK(to_graph6(Graph::from_edge_list(2, {})) == "A?");
    // reference strings produced by an independent encoder
    CHECK(to_graph6(path(3)) == "Bg");
    CHECK(to_graph6(path(4)) == "Ch");
    CHECK(to_graph6(cycle(5)) == "Dhc");
    CHECK(to_graph6(complete(4)) == "C~");
    CHECK(to_graph6(complete(7)) == "F~~~w");
    Graph k4 = from_graph6("C~");
    CHECK(k4.vertex_count() == 4);
    CHECK(k4.edge_count() == 6);
    CHECK(from_graph6(">>graph6<<C~").edge_count() == 6);
    // the Petersen graph: 3-regular on 10 vertices
    Graph petersen = from_graph6("IheA@GUAo");
    CHECK(petersen.vertex_count() == 10);
    CHECK(petersen.edge_count() == 15);
    for (std::size_t v = 0; v < 10; ++v) CHECK(petersen.degree(v) == 3);
    CHECK(to_graph6(petersen) == "IheA@GUAo");
}

TEST_CASE("graph6 round trips") {
    std::mt19937 rng(103);
    for (int i = 0; i < 60; ++i) {
        std::uniform_int_distribution<std::size_t> nd(1, 14);
        Graph g = testutil::random_graph(rng, nd(rng), 0.4);
        Graph back = from_graph6(to_graph6(g));
        CHECK(back.vertex_count() == g.vertex_count());
        CHECK(back.edges() == g.edges());
    }
}

TEST_CASE("graph6 errors") {
    CHECK_THROWS_AS(from_graph6(""), ParseError);
    CHECK_THROWS_AS(from_graph6("C"), ParseError);   // truncated
    CHECK_THROWS_AS(from_graph6("~~~"), TooLargeError);
    CHECK_THROWS_AS(from_graph6(std::string(1, static_cast<char>(30))), ParseError);
    CHECK_THROWS_AS(read_graph6_file("/nonexistent/file.g6"), ParseError);
}

TEST_CASE("graph6 file with header and several graphs") {
    std::string dir = "/tmp/floodpoly_io_test";
    std::string file = dir + "_corpus.g6";
    {
        std::ofstream out(file);
        out << ">>graph6<<\n";
        out << to_graph6(path(4)) << "\n";
        out << to_graph6(cycle(5)) << "\n\n";
        out << to_graph6(complete(3)) << "\n";
    }
    auto graphs = read_graph6_file(file);
    REQUIRE(graphs.size() == 3);
    CHECK(graphs[0].edges() == path(4).edges());
    CHECK(graphs[1].edges() == cycle(5).edges());
    CHECK(graphs[2].edges() == complete(3).edges());
}
