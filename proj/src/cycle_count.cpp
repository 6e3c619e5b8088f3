#include "cyclemax/cycle_count.hpp"
#include "cyclemax/errors.hpp"

#include <omp.h>

#include <cstdint>
#include <vector>

namespace cyclemax {

namespace {

using LengthCounts = std::vector<std::uint64_t>;

// Cycles whose smallest vertex is `root`, each emitted once: the walk only
// visits vertices above the root and a closing edge counts only when the
// second vertex is smaller than the last one.
class RootedCycleWalk {
public:
    RootedCycleWalk(const Graph& g, LengthCounts& counts)
        : g_(g), counts_(counts), on_path_(g.order(), 0) {}

    void run(int root)
    {
        root_ = root;
        on_path_[root] = 1;
        for (int v : g_.neighbours(root))
            if (v > root) {
                second_ = v;
                on_path_[v] = 1;
                extend(v, 2);
                on_path_[v] = 0;
            }
        on_path_[root] = 0;
    }

private:
    void extend(int v, int length)
    {
        for (int w : g_.neighbours(v)) {
            if (w == root_) {
                if (length >= 3 && second_ < v)
                    ++counts_[length];
                continue;
            }
            if (w < root_ || on_path_[w])
                continue;
            on_path_[w] = 1;
            extend(w, length + 1);
            on_path_[w] = 0;
        }
    }

    const Graph& g_;
    LengthCounts& counts_;
    std::vector<char> on_path_;
    int root_ = 0;
    int second_ = 0;
};

LengthCounts counts_parallel(const Graph& g)
{
    const int n = g.order();
    LengthCounts total(n + 1, 0);
#pragma omp parallel
    {
        LengthCounts local(n + 1, 0);
        RootedCycleWalk walk(g, local);
#pragma omp for schedule(dynamic, 1)
        for (int r = 0; r < n; ++r)
            walk.run(r);
#pragma omp critical
        for (int len = 0; len <= n; ++len)
            total[len] += local[len];
    }
    return total;
}

BigCount sum(const LengthCounts& counts)
{
    BigCount s = 0;
    for (std::uint64_t c : counts)
        s += BigCount(static_cast<unsigned long>(c));
    return s;
}

}

BigCount count_cycles(const Graph& g)
{
    return sum(counts_parallel(g));
}

BigCount count_cycles_serial(const Graph& g)
{
    LengthCounts counts(g.order() + 1, 0);
    RootedCycleWalk walk(g, counts);
    for (int r = 0; r < g.order(); ++r)
        walk.run(r);
    return sum(counts);
}

std::map<int, BigCount> count_cycles_by_length(const Graph& g)
{
    std::map<int, BigCount> out;
    const LengthCounts counts = counts_parallel(g);
    for (int len = 3; len < static_cast<int>(counts.size()); ++len)
        if (counts[len])
            out[len] = BigCount(static_cast<unsigned long>(counts[len]));
    return out;
}

BigCount complete_bipartite_cycle_count(int a, int b)
{
    if (a < 1 || b < 1)
        throw DomainError("complete bipartite parts must be nonempty");
    if (a > b)
        throw DomainError("complete_bipartite_cycle_count expects a <= b");
    // Cycles of length 2k: choose k vertices per side, arrange them
    // alternately, divide by the 2k rotations and 2 directions.
    const FactorialTable f(static_cast<unsigned>(b));
    BigCount total = 0;
    for (int k = 2; k <= a; ++k)
        total += f[a] * f[b] / (BigCount(2 * k) * f[a - k] * f[b - k]);
    return total;
}

BigCount turan_cycle_count(int n)
{
    if (n < 2)
        throw DomainError("T(n,2) needs n >= 2");
    return complete_bipartite_cycle_count(n / 2, n - n / 2);
}

BigCount complete_graph_cycle_count(int n)
{
    if (n < 1)
        throw DomainError("K_n needs n >= 1");
    const FactorialTable f(static_cast<unsigned>(n));
    BigCount total = 0;
    for (int i = 3; i <= n; ++i)
        total += f.binomial(n, i) * f[i - 1] / 2;
    return total;
}

}
