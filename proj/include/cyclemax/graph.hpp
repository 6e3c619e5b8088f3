#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace cyclemax {

// Simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int order() const { return n_; }
    std::size_t size() const { return m_; }

    bool adjacent(int u, int v) const { return adj_[index(u, v)] != 0; }
    const std::vector<int>& neighbours(int v) const { return nbrs_[v]; }
    int degree(int v) const { return static_cast<int>(nbrs_[v].size()); }

    // Returns false if the edge was already present. Loops are rejected.
    bool add_edge(int u, int v);
    bool remove_edge(int u, int v);

    // Edges (u, v) with u < v in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;

    Graph induced_without(int v) const;
    Graph relabelled(const std::vector<int>& perm) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

private:
    std::size_t index(int u, int v) const { return static_cast<std::size_t>(u) * n_ + v; }
    void check_vertex(int v) const;

    int n_ = 0;
    std::size_t m_ = 0;
    std::vector<std::uint8_t> adj_;
    std::vector<std::vector<int>> nbrs_;
};

// A graph whose vertex order matters: vertex j carries label j+1, and blowup
// part j corresponds to vertex j.
struct LabeledGraph {
    Graph graph;
    int order() const { return graph.order(); }
};

struct BlowupSpec {
    LabeledGraph base;
    std::vector<int> sizes;

    int total() const;
    void validate() const;
};

Graph make_complete_bipartite(int a, int b);
Graph make_turan(int n);
Graph make_cycle(int n);
Graph make_path(int n);
Graph make_complete(int n);

// Andrasfai graph on 3i-1 vertices: vertex j is adjacent to j+i, ..., j+2i-1
// (mod 3i-1). Note this is not the rotational pentagon order for i = 2:
// vertex 0 is adjacent to 2 and 3.
LabeledGraph make_gamma(int i);

// Parts occupy contiguous vertex ranges in base order.
Graph make_blowup(const BlowupSpec& spec);
BlowupSpec gamma_blowup(int i, const std::vector<int>& sizes);
BlowupSpec gamma_blowup_uniform(int i, int t);

constexpr int infinite_girth = -1;
int girth(const Graph& g);
bool is_triangle_free(const Graph& g);

struct DegreeStats {
    int min_degree;
    int max_degree;
    std::size_t edges;
};
DegreeStats degree_stats(const Graph& g);

bool is_connected(const Graph& g);
bool is_biconnected(const Graph& g);
bool is_bipartite(const Graph& g);
bool is_maximal_triangle_free(const Graph& g);
bool every_edge_in_4cycle(const Graph& g);

// Complete bipartite with part sizes floor(n/2) and ceil(n/2)?
bool is_balanced_complete_bipartite(const Graph& g);

std::optional<std::vector<int>> find_homomorphism(const Graph& g, const LabeledGraph& h);
bool is_homomorphism(const Graph& g, const Graph& h, const std::vector<int>& map);

// Small fixtures. The nine-vertex graph has a 6-cycle that cannot take a
// chord without closing a triangle; the pendant variant has girth 5 but a
// cut vertex.
Graph make_petersen();
Graph make_petersen_minus_vertex();
Graph make_petersen_with_pendant();

}
