#include "cyclemax/graph.hpp"
#include "cyclemax/errors.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace cyclemax {

Graph::Graph(int n) : n_(n)
{
    if (n < 0)
        throw DomainError("vertex count must be nonnegative");
    adj_.assign(static_cast<std::size_t>(n) * n, 0);
    nbrs_.resize(n);
}

void Graph::check_vertex(int v) const
{
    if (v < 0 || v >= n_)
        throw DomainError("vertex " + std::to_string(v) + " out of range 0.." + std::to_string(n_ - 1));
}

bool Graph::add_edge(int u, int v)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw DomainError("self-loop at vertex " + std::to_string(u));
    if (adj_[index(u, v)])
        return false;
    adj_[index(u, v)] = adj_[index(v, u)] = 1;
    nbrs_[u].insert(std::upper_bound(nbrs_[u].begin(), nbrs_[u].end(), v), v);
    nbrs_[v].insert(std::upper_bound(nbrs_[v].begin(), nbrs_[v].end(), u), u);
    ++m_;
    return true;
}

bool Graph::remove_edge(int u, int v)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v || !adj_[index(u, v)])
        return false;
    adj_[index(u, v)] = adj_[index(v, u)] = 0;
    std::erase(nbrs_[u], v);
    std::erase(nbrs_[v], u);
    --m_;
    return true;
}

std::vector<std::pair<int, int>> Graph::edges() const
{
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : nbrs_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

Graph Graph::induced_without(int v) const
{
    check_vertex(v);
    Graph h(n_ - 1);
    auto shift = [v](int x) { return x < v ? x : x - 1; };
    for (auto [a, b] : edges())
        if (a != v && b != v)
            h.add_edge(shift(a), shift(b));
    return h;
}

Graph Graph::relabelled(const std::vector<int>& perm) const
{
    if (static_cast<int>(perm.size()) != n_)
        throw DomainError("permutation length differs from vertex count");
    Graph h(n_);
    for (auto [a, b] : edges())
        h.add_edge(perm[a], perm[b]);
    return h;
}

int BlowupSpec::total() const
{
    return std::accumulate(sizes.begin(), sizes.end(), 0);
}

void BlowupSpec::validate() const
{
    if (static_cast<int>(sizes.size()) != base.order())
        throw DomainError("blowup needs one part size per base vertex");
    for (int s : sizes)
        if (s < 0)
            throw DomainError("blowup part sizes must be nonnegative");
}

Graph make_complete_bipartite(int a, int b)
{
    if (a < 1 || b < 1)
        throw DomainError("complete bipartite parts must be nonempty");
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v)
            g.add_edge(u, v);
    return g;
}

Graph make_turan(int n)
{
    if (n < 2)
        throw DomainError("T(n,2) needs n >= 2");
    return make_complete_bipartite(n / 2, n - n / 2);
}

Graph make_cycle(int n)
{
    if (n < 3)
        throw DomainError("a cycle needs at least 3 vertices");
    Graph g(n);
    for (int v = 0; v < n; ++v)
        g.add_edge(v, (v + 1) % n);
    return g;
}

Graph make_path(int n)
{
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

Graph make_complete(int n)
{
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

LabeledGraph make_gamma(int i)
{
    if (i < 1)
        throw DomainError("Gamma_i needs i >= 1");
    const int n = 3 * i - 1;
    Graph g(n);
    for (int j = 0; j < n; ++j)
        for (int d = i; d < 2 * i; ++d)
            g.add_edge(j, (j + d) % n);
    return {std::move(g)};
}

Graph make_blowup(const BlowupSpec& spec)
{
    spec.validate();
    const int p = spec.base.order();
    std::vector<int> start(p + 1, 0);
    for (int j = 0; j < p; ++j)
        start[j + 1] = start[j] + spec.sizes[j];
    Graph g(start[p]);
    for (auto [a, b] : spec.base.graph.edges())
        for (int u = start[a]; u < start[a + 1]; ++u)
            for (int v = start[b]; v < start[b + 1]; ++v)
                g.add_edge(u, v);
    return g;
}

BlowupSpec gamma_blowup(int i, const std::vector<int>& sizes)
{
    BlowupSpec spec{make_gamma(i), sizes};
    spec.validate();
    return spec;
}

BlowupSpec gamma_blowup_uniform(int i, int t)
{
    return gamma_blowup(i, std::vector<int>(3 * i - 1, t));
}

int girth(const Graph& g)
{
    const int n = g.order();
    int best = infinite_girth;
    std::vector<int> dist(n), parent(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        parent[s] = -1;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            if (best != infinite_girth && 2 * dist[u] + 1 >= best)
                break;
            for (int v : g.neighbours(u)) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    q.push(v);
                }
                else if (v != parent[u]) {
                    int len = dist[u] + dist[v] + 1;
                    if (best == infinite_girth || len < best)
                        best = len;
                }
            }
        }
    }
    return best;
}

bool is_triangle_free(const Graph& g)
{
    for (auto [u, v] : g.edges())
        for (int w : g.neighbours(u))
            if (w != v && g.adjacent(v, w))
                return false;
    return true;
}

DegreeStats degree_stats(const Graph& g)
{
    if (g.order() < 1)
        throw DomainError("degree statistics of the empty graph");
    DegreeStats s{g.degree(0), g.degree(0), g.size()};
    for (int v = 1; v < g.order(); ++v) {
        s.min_degree = std::min(s.min_degree, g.degree(v));
        s.max_degree = std::max(s.max_degree, g.degree(v));
    }
    return s;
}

bool is_connected(const Graph& g)
{
    const int n = g.order();
    if (n == 0)
        return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : g.neighbours(u))
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                stack.push_back(v);
            }
    }
    return reached == n;
}

namespace {

// Tarjan's low-link on an explicit stack; true if some vertex is a cut vertex.
bool has_cut_vertex(const Graph& g)
{
    const int n = g.order();
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
    std::vector<std::size_t> next(n, 0);
    int timer = 0;
    int root_children = 0;
    std::vector<int> stack{0};
    disc[0] = low[0] = timer++;
    while (!stack.empty()) {
        int u = stack.back();
        const auto& nb = g.neighbours(u);
        if (next[u] < nb.size()) {
            int v = nb[next[u]++];
            if (disc[v] < 0) {
                parent[v] = u;
                disc[v] = low[v] = timer++;
                if (u == 0)
                    ++root_children;
                stack.push_back(v);
            }
            else if (v != parent[u])
                low[u] = std::min(low[u], disc[v]);
            continue;
        }
        stack.pop_back();
        int p = parent[u];
        if (p >= 0) {
            low[p] = std::min(low[p], low[u]);
            if (p != 0 && low[u] >= disc[p])
                return true;
        }
    }
    return root_children > 1;
}

}

bool is_biconnected(const Graph& g)
{
    if (g.order() < 3)
        throw DomainError("2-connectivity is defined here for n >= 3");
    return is_connected(g) && !has_cut_vertex(g);
}

bool is_bipartite(const Graph& g)
{
    const int n = g.order();
    std::vector<int> side(n, -1);
    for (int s = 0; s < n; ++s) {
        if (side[s] >= 0)
            continue;
        side[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : g.neighbours(u)) {
                if (side[v] < 0) {
                    side[v] = 1 - side[u];
                    stack.push_back(v);
                }
                else if (side[v] == side[u])
                    return false;
            }
        }
    }
    return true;
}

bool is_maximal_triangle_free(const Graph& g)
{
    if (!is_triangle_free(g))
        throw DomainError("graph contains a triangle");
    const int n = g.order();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (g.adjacent(u, v))
                continue;
            bool closes = false;
            for (int w : g.neighbours(u))
                if (g.adjacent(v, w)) {
                    closes = true;
                    break;
                }
            if (!closes)
                return false;
        }
    return true;
}

bool every_edge_in_4cycle(const Graph& g)
{
    // u-v lies on a 4-cycle u-v-x-y iff some neighbour x != u of v is
    // adjacent to some neighbour y != v of u, with x != y.
    for (auto [u, v] : g.edges()) {
        bool found = false;
        for (int x : g.neighbours(v)) {
            if (x == u)
                continue;
            for (int y : g.neighbours(u))
                if (y != v && y != x && g.adjacent(x, y)) {
                    found = true;
                    break;
                }
            if (found)
                break;
        }
        if (!found)
            return false;
    }
    return true;
}

bool is_balanced_complete_bipartite(const Graph& g)
{
    const int n = g.order();
    if (n < 2)
        return false;
    const auto a = static_cast<std::size_t>(n / 2), b = static_cast<std::size_t>(n - n / 2);
    if (g.size() != a * b || !is_connected(g))
        return false;
    std::vector<int> side(n, -1);
    side[0] = 0;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : g.neighbours(u)) {
            if (side[v] < 0) {
                side[v] = 1 - side[u];
                stack.push_back(v);
            }
            else if (side[v] == side[u])
                return false;
        }
    }
    const auto zeros = static_cast<std::size_t>(std::count(side.begin(), side.end(), 0));
    // Bipartite with |A||B| edges means every cross pair is an edge.
    return (zeros == a || zeros == b) && zeros * (n - zeros) == g.size();
}

bool is_homomorphism(const Graph& g, const Graph& h, const std::vector<int>& map)
{
    if (static_cast<int>(map.size()) != g.order())
        return false;
    for (int x : map)
        if (x < 0 || x >= h.order())
            return false;
    for (auto [u, v] : g.edges())
        if (!h.adjacent(map[u], map[v]))
            return false;
    return true;
}

Graph make_petersen()
{
    Graph g(10);
    for (int v = 0; v < 5; ++v) {
        g.add_edge(v, (v + 1) % 5);
        g.add_edge(v, v + 5);
        g.add_edge(5 + v, 5 + (v + 2) % 5);
    }
    return g;
}

Graph make_petersen_minus_vertex()
{
    return make_petersen().induced_without(0);
}

Graph make_petersen_with_pendant()
{
    Graph p = make_petersen();
    Graph g(11);
    for (auto [u, v] : p.edges())
        g.add_edge(u, v);
    g.add_edge(0, 10);
    return g;
}

}
