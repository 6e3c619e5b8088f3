#include "oracles.hpp"

#include <mpfr.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace oracle {

using namespace cyclemax;

std::map<int, long long> cycles_by_edge_subsets(const Graph& g)
{
    const auto edges = g.edges();
    const int m = static_cast<int>(edges.size());
    if (m > 24)
        throw std::invalid_argument("edge-subset oracle is limited to 24 edges");
    std::map<int, long long> out;
    std::vector<int> deg(g.order());
    std::vector<int> parent(g.order());
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << m); ++mask) {
        const int k = std::popcount(mask);
        if (k < 3)
            continue;
        std::fill(deg.begin(), deg.end(), 0);
        for (int e = 0; e < m; ++e)
            if (mask >> e & 1) {
                ++deg[edges[e].first];
                ++deg[edges[e].second];
            }
        bool two_regular = true;
        int vertices = 0;
        for (int d : deg) {
            if (d != 0 && d != 2)
                two_regular = false;
            vertices += d != 0;
        }
        if (!two_regular || vertices != k)
            continue;
        // One component: union-find over the chosen edges.
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };
        int components = vertices;
        for (int e = 0; e < m; ++e)
            if (mask >> e & 1) {
                int a = find(edges[e].first), b = find(edges[e].second);
                if (a != b) {
                    parent[a] = b;
                    --components;
                }
            }
        if (components == 1)
            ++out[k];
    }
    return out;
}

long long cycles_by_edge_subsets_total(const Graph& g)
{
    long long s = 0;
    for (auto [len, c] : cycles_by_edge_subsets(g))
        s += c;
    return s;
}

BigCount permanent_by_permutations(const DenseMatrix01& a)
{
    const int n = a.order();
    if (n > 10)
        throw std::invalid_argument("permutation oracle is limited to order 10");
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    long long total = 0;
    do {
        long long prod = 1;
        for (int i = 0; i < n && prod; ++i)
            prod *= a(i, sigma[i]);
        total += prod;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return BigCount(static_cast<long>(total));
}

long double ln_gamma_plus_one(long double x)
{
    mpfr_t v;
    mpfr_init2(v, 128);
    mpfr_set_ld(v, x, MPFR_RNDN);
    mpfr_add_ui(v, v, 1, MPFR_RNDN);
    mpfr_lngamma(v, v, MPFR_RNDN);
    const long double r = mpfr_get_ld(v, MPFR_RNDN);
    mpfr_clear(v);
    return r;
}

Graph random_triangle_free(int n, double keep, std::mt19937_64& rng)
{
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            slots.emplace_back(u, v);
    std::shuffle(slots.begin(), slots.end(), rng);
    std::bernoulli_distribution coin(keep);
    Graph g(n);
    for (auto [u, v] : slots) {
        if (!coin(rng))
            continue;
        bool closes = false;
        for (int w = 0; w < n && !closes; ++w)
            closes = g.adjacent(u, w) && g.adjacent(v, w);
        if (!closes)
            g.add_edge(u, v);
    }
    return g;
}

Graph random_graph(int n, double p, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                g.add_edge(u, v);
    return g;
}

std::vector<std::pair<int, int>> regular_pairs(int max_n)
{
    std::vector<std::pair<int, int>> out;
    for (int n = 1; n <= max_n; ++n)
        for (int d = 0; d < n; ++d)
            for (long long m = 0; m <= static_cast<long long>(n) * (n - 1) / 2; ++m)
                if (n >= 3 && d >= 2 && 2 * m == static_cast<long long>(n) * d && static_cast<double>(d) <= 10.0 * n / 29 + 1e-12)
                    out.emplace_back(n, d);
    return out;
}

BigCount turan_by_falling_factorials(int n)
{
    const int a = n / 2, b = n - n / 2;
    BigCount total = 0;
    for (int k = 2; k <= a; ++k) {
        // Ordered choices of k vertices on each side, interleaved into a
        // closed walk, divided by rotations and reflections.
        BigCount ways = 1;
        for (int j = 0; j < k; ++j)
            ways *= BigCount(a - j) * (b - j);
        total += ways / (2 * k);
    }
    return total;
}

}
