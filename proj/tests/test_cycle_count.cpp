#include "cyclemax/cycle_count.hpp"
#include "cyclemax/graph.hpp"
#include "cyclemax/parallel.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace cyclemax;

namespace {

std::map<int, BigCount> to_big(const std::map<int, long long>& m)
{
    std::map<int, BigCount> out;
    for (auto [k, v] : m)
        out[k] = static_cast<long>(v);
    return out;
}

}

TEST_CASE("small closed forms")
{
    CHECK(count_cycles(make_complete(4)) == 7);
    CHECK(count_cycles(make_complete(5)) == 37);
    CHECK(count_cycles(make_cycle(5)) == 1);
    CHECK(count_cycles(make_path(6)) == 0);
    CHECK(count_cycles(Graph(0)) == 0);
    CHECK(count_cycles(make_complete_bipartite(2, 3)) == 3);
    CHECK(count_cycles(make_petersen()) == 57);
    CHECK(count_cycles(make_blowup(gamma_blowup_uniform(2, 2))) == 593);
}

TEST_CASE("cycles by length in T(8,2)")
{
    const auto by_len = count_cycles_by_length(make_turan(8));
    const std::map<int, BigCount> expected{{4, 36}, {6, 96}, {8, 72}};
    CHECK(by_len == expected);
}

TEST_CASE("closed forms agree with enumeration")
{
    for (int n = 3; n <= 12; ++n) {
        CHECK(turan_cycle_count(n) == count_cycles(make_turan(n)));
        CHECK(turan_cycle_count(n) == oracle::turan_by_falling_factorials(n));
    }
    for (int n = 13; n <= 60; ++n)
        CHECK(turan_cycle_count(n) == oracle::turan_by_falling_factorials(n));
    for (int a = 1; a <= 5; ++a)
        for (int b = a; b <= 5; ++b)
            CHECK(complete_bipartite_cycle_count(a, b) == count_cycles(make_complete_bipartite(a, b)));
    for (int n = 1; n <= 8; ++n)
        CHECK(complete_graph_cycle_count(n) == count_cycles(make_complete(n)));
    CHECK(to_decimal(turan_cycle_count(56)) == to_decimal(complete_bipartite_cycle_count(28, 28)));
}

TEST_CASE("enumeration agrees with the edge-subset oracle")
{
    std::mt19937_64 rng(101);
    int checked = 0;
    while (checked < 120) {
        const int n = std::uniform_int_distribution<int>(3, 9)(rng);
        const Graph g = oracle::random_graph(n, 0.45, rng);
        if (g.size() > 18)
            continue;
        const auto expected = to_big(oracle::cycles_by_edge_subsets(g));
        CHECK(count_cycles_by_length(g) == expected);
        BigCount total = 0;
        for (const auto& [k, v] : expected)
            total += v;
        CHECK(count_cycles(g) == total);
        CHECK(count_cycles_serial(g) == total);
        ++checked;
    }
}

TEST_CASE("parallel and serial counts agree for every thread count")
{
    const Graph g = make_blowup(gamma_blowup(3, {2, 1, 2, 1, 2, 1, 2, 1}));
    const BigCount serial = count_cycles_serial(g);
    const int saved = thread_count();
    for (int t : {1, 2, 3, 8}) {
        set_thread_count(t);
        CHECK(count_cycles(g) == serial);
    }
    set_thread_count(saved);
}

TEST_CASE("adding an edge never lowers the cycle count")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = std::uniform_int_distribution<int>(4, 9)(rng);
        Graph g = oracle::random_graph(n, 0.35, rng);
        std::vector<std::pair<int, int>> missing;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!g.adjacent(u, v))
                    missing.emplace_back(u, v);
        if (missing.empty())
            continue;
        const auto [u, v] = missing[std::uniform_int_distribution<std::size_t>(0, missing.size() - 1)(rng)];
        const BigCount before = count_cycles(g);
        g.add_edge(u, v);
        CHECK(count_cycles(g) >= before);
    }
}

TEST_CASE("relabelling preserves the count")
{
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = std::uniform_int_distribution<int>(3, 10)(rng);
        const Graph g = oracle::random_graph(n, 0.5, rng);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(count_cycles(g.relabelled(perm)) == count_cycles(g));
    }
}

TEST_CASE("balanced complete bipartite beats the other triangle-free graphs sampled")
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = std::uniform_int_distribution<int>(4, 10)(rng);
        const Graph g = oracle::random_triangle_free(n, 0.8, rng);
        const BigCount c = count_cycles(g);
        CHECK(c <= turan_cycle_count(n));
        if (c == turan_cycle_count(n) && n >= 4)
            CHECK(is_balanced_complete_bipartite(g));
    }
}
