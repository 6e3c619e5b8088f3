#include "cyclemax/errors.hpp"
#include "cyclemax/graph.hpp"
#include "cyclemax/graph_io.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace cyclemax;

TEST_CASE("graph6 encoding is bit exact")
{
    CHECK(write_graph6(make_complete_bipartite(2, 3)) == "D]o");
    CHECK(write_graph6(make_complete(4)) == "C~");
    CHECK(write_graph6(Graph(0)) == "?");
    CHECK(write_graph6(Graph(1)) == "@");
    // Petersen in the standard outer-cycle, spokes, pentagram labelling.
    CHECK(read_graph6("IheA@GUAo").order() == 10);
    CHECK(girth(read_graph6("IheA@GUAo")) == 5);
}

TEST_CASE("graph6 long form for n >= 63")
{
    const Graph t = make_turan(70);
    const std::string s = write_graph6(t);
    CHECK(s[0] == '~');
    CHECK(read_graph6(s) == t);
}

TEST_CASE("graph6 and edge-list round trips")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = std::uniform_int_distribution<int>(0, 20)(rng);
        const Graph g = oracle::random_graph(n, 0.4, rng);
        CHECK(read_graph6(write_graph6(g)) == g);
        CHECK(read_edge_list(write_edge_list(g)) == g);
        CHECK(read_graph(write_graph6(g)) == g);
        CHECK(read_graph(write_edge_list(g)) == g);
    }
    CHECK(read_graph6(">>graph6<<D]o") == make_complete_bipartite(2, 3));
}

TEST_CASE("edge-list parsing")
{
    const Graph g = read_edge_list("3 2\n0 1\n1 2\n");
    CHECK(g.order() == 3);
    CHECK(g.size() == 2);
    CHECK(detect_format("3 2\n0 1\n1 2\n") == GraphFormat::edge_list);
    CHECK(detect_format("D]o\n") == GraphFormat::graph6);
}

TEST_CASE("malformed input is rejected")
{
    CHECK_THROWS_AS(read_edge_list("3 2\n0 1\n"), DomainError);
    CHECK_THROWS_AS(read_edge_list("3 1\n0 3\n"), DomainError);
    CHECK_THROWS_AS(read_edge_list("3 1\n1 1\n"), DomainError);
    CHECK_THROWS_AS(read_edge_list("3 2\n0 1\n1 0\n"), DomainError);
    CHECK_THROWS_AS(read_edge_list("3 1\n0 1\n1 2\n"), DomainError);
    CHECK_THROWS_AS(read_edge_list("x"), DomainError);
    CHECK_THROWS_AS(read_graph6(""), DomainError);
    CHECK_THROWS_AS(read_graph6("D]"), DomainError);
    CHECK_THROWS_AS(read_graph6("D]p"), DomainError);
    CHECK_THROWS_AS(read_graph6("D] "), DomainError);
}
