#include "cyclemax/cycle_count.hpp"
#include "cyclemax/errors.hpp"
#include "cyclemax/search.hpp"

#include <omp.h>

#include <string>
#include <utility>

namespace cyclemax {

namespace {

struct Tally {
    long long graphs = 0;
    long long counted = 0;
    BigCount best = -1;
    long long maximizers = 0;
    bool all_balanced = true;

    void record(const Graph& g, const BigCount& c)
    {
        ++counted;
        if (c > best) {
            best = c;
            maximizers = 0;
            all_balanced = true;
        }
        if (c == best) {
            ++maximizers;
            all_balanced = all_balanced && is_balanced_complete_bipartite(g);
        }
    }

    void merge(const Tally& o)
    {
        graphs += o.graphs;
        counted += o.counted;
        if (o.best > best) {
            best = o.best;
            maximizers = o.maximizers;
            all_balanced = o.all_balanced;
        }
        else if (o.best == best) {
            maximizers += o.maximizers;
            all_balanced = all_balanced && o.all_balanced;
        }
    }
};

// Labelled triangle-free graphs by include/exclude decisions over the edge
// slots in lexicographic order. An edge is only added when its endpoints
// have no common neighbour so far, which is exactly triangle-freeness.
class TriangleFreeWalk {
public:
    TriangleFreeWalk(int n, bool fast) : n_(n), fast_(fast), adj_(n, 0)
    {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                slots_.emplace_back(u, v);
    }

    std::size_t slot_count() const { return slots_.size(); }

    // Applies the first `depth` decisions encoded in `bits`; false if that
    // prefix already contains a triangle.
    bool apply_prefix(unsigned long long bits, int depth)
    {
        std::fill(adj_.begin(), adj_.end(), 0);
        for (int s = 0; s < depth; ++s)
            if (bits >> s & 1) {
                auto [u, v] = slots_[s];
                if (adj_[u] & adj_[v])
                    return false;
                adj_[u] |= 1u << v;
                adj_[v] |= 1u << u;
            }
        return true;
    }

    void walk(std::size_t s, Tally& tally)
    {
        if (s == slots_.size()) {
            leaf(tally);
            return;
        }
        auto [u, v] = slots_[s];
        walk(s + 1, tally);
        if ((adj_[u] & adj_[v]) == 0) {
            adj_[u] |= 1u << v;
            adj_[v] |= 1u << u;
            walk(s + 1, tally);
            adj_[u] &= ~(1u << v);
            adj_[v] &= ~(1u << u);
        }
    }

private:
    bool maximal() const
    {
        for (auto [u, v] : slots_)
            if (!(adj_[u] >> v & 1) && (adj_[u] & adj_[v]) == 0)
                return false;
        return true;
    }

    void leaf(Tally& tally)
    {
        ++tally.graphs;
        if (fast_ && !maximal())
            return;
        Graph g(n_);
        for (auto [u, v] : slots_)
            if (adj_[u] >> v & 1)
                g.add_edge(u, v);
        tally.record(g, count_cycles_serial(g));
    }

    int n_;
    bool fast_;
    std::vector<unsigned> adj_;
    std::vector<std::pair<int, int>> slots_;
};

}

VerifyReport verify_order(int n, const VerifyOptions& opts)
{
    if (n < 4)
        throw DomainError("verification starts at n = 4");
    if (n > verify_max_n && !opts.allow_large)
        throw SizeGuardError("exhaustive verification is limited to n <= " + std::to_string(verify_max_n));
    if (n > 16)
        throw SizeGuardError("exhaustive verification uses 16-bit rows; n <= 16");

    // The first few slot decisions are fixed per task so workers share the tree.
    const int depth = std::min<int>(10, static_cast<int>(TriangleFreeWalk(n, opts.fast).slot_count()));
    const long long prefixes = 1LL << depth;
    Tally total;
#pragma omp parallel
    {
        Tally local;
        TriangleFreeWalk walk(n, opts.fast);
#pragma omp for schedule(dynamic, 1)
        for (long long bits = 0; bits < prefixes; ++bits)
            if (walk.apply_prefix(static_cast<unsigned long long>(bits), depth))
                walk.walk(static_cast<std::size_t>(depth), local);
#pragma omp critical
        total.merge(local);
    }

    VerifyReport r;
    r.n = n;
    r.graphs = total.graphs;
    r.counted = total.counted;
    r.max_cycles = total.best;
    r.turan = turan_cycle_count(n);
    r.maximizers = total.maximizers;
    r.unique = total.all_balanced && total.maximizers > 0;
    return r;
}

std::vector<VerifyReport> verify_conjecture(int max_n, const VerifyOptions& opts)
{
    if (max_n < 4)
        throw DomainError("verification needs max_n >= 4");
    if (max_n > verify_max_n && !opts.allow_large)
        throw SizeGuardError("exhaustive verification is limited to n <= " + std::to_string(verify_max_n));
    std::vector<VerifyReport> out;
    for (int n = 4; n <= max_n; ++n)
        out.push_back(verify_order(n, opts));
    return out;
}

}
