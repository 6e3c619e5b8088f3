#include "cyclemax/graph.hpp"
#include "cyclemax/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

namespace cyclemax {

namespace {

// Domains are bitsets over H's vertices, one word per 64 vertices.
class HomSearch {
public:
    HomSearch(const Graph& g, const Graph& h) : g_(g), h_(h), words_((h.order() + 63) / 64)
    {
        const int p = h.order();
        h_rows_.assign(static_cast<std::size_t>(p) * words_, 0);
        for (int a = 0; a < p; ++a)
            for (int b : h.neighbours(a))
                h_rows_[static_cast<std::size_t>(a) * words_ + b / 64] |= std::uint64_t{1} << (b % 64);

        order_.resize(g.order());
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
        map_.assign(g.order(), -1);
    }

    std::optional<std::vector<int>> run()
    {
        std::vector<std::uint64_t> domains(static_cast<std::size_t>(g_.order()) * words_, 0);
        for (int v = 0; v < g_.order(); ++v)
            for (int a = 0; a < h_.order(); ++a)
                domains[static_cast<std::size_t>(v) * words_ + a / 64] |= std::uint64_t{1} << (a % 64);
        if (search(0, domains))
            return map_;
        return std::nullopt;
    }

private:
    bool search(std::size_t depth, const std::vector<std::uint64_t>& domains)
    {
        if (depth == order_.size())
            return true;
        const int v = order_[depth];
        const std::uint64_t* dom = &domains[static_cast<std::size_t>(v) * words_];
        for (int w = 0; w < words_; ++w) {
            for (std::uint64_t bits = dom[w]; bits; bits &= bits - 1) {
                const int a = w * 64 + std::countr_zero(bits);
                std::vector<std::uint64_t> next = domains;
                // Forward check: unassigned neighbours must land next to a.
                bool wiped = false;
                for (int u : g_.neighbours(v)) {
                    if (map_[u] >= 0)
                        continue;
                    std::uint64_t any = 0;
                    for (int x = 0; x < words_; ++x) {
                        auto& d = next[static_cast<std::size_t>(u) * words_ + x];
                        d &= h_rows_[static_cast<std::size_t>(a) * words_ + x];
                        any |= d;
                    }
                    if (!any) {
                        wiped = true;
                        break;
                    }
                }
                if (wiped)
                    continue;
                map_[v] = a;
                if (search(depth + 1, next))
                    return true;
                map_[v] = -1;
            }
        }
        return false;
    }

    const Graph& g_;
    const Graph& h_;
    int words_;
    std::vector<std::uint64_t> h_rows_;
    std::vector<int> order_;
    std::vector<int> map_;
};

}

std::optional<std::vector<int>> find_homomorphism(const Graph& g, const LabeledGraph& h)
{
    if (h.order() < 1)
        throw DomainError("homomorphism target must be nonempty");
    return HomSearch(g, h.graph).run();
}

}
