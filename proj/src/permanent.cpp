#include "cyclemax/permanent.hpp"
#include "cyclemax/errors.hpp"
#include "cyclemax/parallel.hpp"

#include <omp.h>

#include <bit>
#include <cmath>
#include <numeric>
#include <string>

namespace cyclemax {

int BlockMatrixSpec::total() const
{
    return std::accumulate(sizes.begin(), sizes.end(), 0);
}

void BlockMatrixSpec::validate() const
{
    const int p = blocks();
    if (p < 1)
        throw DomainError("block spec needs at least one block");
    if (static_cast<int>(h.size()) != p)
        throw DomainError("block spec: h must be p x p");
    for (int i = 0; i < p; ++i) {
        if (sizes[i] < 0)
            throw DomainError("block spec: sizes must be nonnegative");
        if (static_cast<int>(h[i].size()) != p)
            throw DomainError("block spec: h must be p x p");
        if (h[i][i] != 0)
            throw DomainError("block spec: h must have a zero diagonal");
        for (int j = 0; j < p; ++j) {
            if (h[i][j] > 1)
                throw DomainError("block spec: h entries must be 0 or 1");
            if (h[i][j] != h[j][i])
                throw DomainError("block spec: h must be symmetric");
        }
    }
}

BlockMatrixSpec block_spec_from(const BlowupSpec& spec)
{
    spec.validate();
    const int p = spec.base.order();
    BlockMatrixSpec out{spec.sizes, std::vector<std::vector<std::uint8_t>>(p, std::vector<std::uint8_t>(p, 0))};
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            out.h[i][j] = spec.base.graph.adjacent(i, j) ? 1 : 0;
    return out;
}

DenseMatrix01 adjacency_plus_identity(const Graph& g)
{
    DenseMatrix01 a(g.order());
    for (int v = 0; v < g.order(); ++v) {
        a(v, v) = 1;
        for (int w : g.neighbours(v))
            a(v, w) = 1;
    }
    return a;
}

DenseMatrix01 expand_block_spec(const BlockMatrixSpec& spec)
{
    spec.validate();
    std::vector<int> block_of;
    for (int b = 0; b < spec.blocks(); ++b)
        block_of.insert(block_of.end(), spec.sizes[b], b);
    const int n = static_cast<int>(block_of.size());
    DenseMatrix01 a(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            a(u, v) = u == v || spec.h[block_of[u]][block_of[v]] ? 1 : 0;
    return a;
}

namespace {

void check_ryser_size(const DenseMatrix01& a)
{
    if (a.order() > ryser_max_order)
        throw SizeGuardError("dense permanent limited to order " + std::to_string(ryser_max_order));
}

// Whether every partial sum fits a signed 128-bit accumulator.
bool fits_int128(const DenseMatrix01& a)
{
    const int n = a.order();
    long double log2_bound = n;
    for (int i = 0; i < n; ++i) {
        int r = 0;
        for (int j = 0; j < n; ++j)
            r += a(i, j);
        if (r == 0)
            return true;
        log2_bound += std::log2(static_cast<long double>(r));
    }
    return log2_bound < 124;
}

// Gray-code walk over subsets with index in [begin, end). Row sums are
// rebuilt at the start of the range and then updated one column at a time.
template <typename Acc, typename Mul>
Acc ryser_range(const DenseMatrix01& a, std::uint64_t begin, std::uint64_t end, Mul&& multiply_rows)
{
    const int n = a.order();
    std::vector<int> rows(n, 0);
    const std::uint64_t start_set = begin ^ (begin >> 1);
    for (int j = 0; j < n; ++j)
        if (start_set >> j & 1)
            for (int i = 0; i < n; ++i)
                rows[i] += a(i, j);
    Acc total = 0;
    for (std::uint64_t k = begin; k < end; ++k) {
        if (k != begin) {
            const int j = std::countr_zero(k);
            const bool added = (k ^ (k >> 1)) >> j & 1;
            for (int i = 0; i < n; ++i)
                rows[i] += added ? a(i, j) : -a(i, j);
        }
        const std::uint64_t set = k ^ (k >> 1);
        const bool negative = (n - std::popcount(set)) & 1;
        multiply_rows(rows, negative, total);
    }
    return total;
}

void add_rows_int128(const std::vector<int>& rows, bool negative, __int128& total)
{
    __int128 prod = 1;
    for (int r : rows) {
        if (r == 0)
            return;
        prod *= r;
    }
    total += negative ? -prod : prod;
}

void add_rows_big(const std::vector<int>& rows, bool negative, BigCount& total)
{
    BigCount prod = 1;
    for (int r : rows) {
        if (r == 0)
            return;
        prod *= r;
    }
    if (negative)
        total -= prod;
    else
        total += prod;
}

BigCount from_int128(__int128 x)
{
    const bool neg = x < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(x) : static_cast<unsigned __int128>(x);
    BigCount hi = static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64));
    BigCount r = (hi << 64) + BigCount(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
    return neg ? BigCount(-r) : r;
}

}

BigCount ryser_permanent(const DenseMatrix01& a)
{
    check_ryser_size(a);
    const int n = a.order();
    if (n == 0)
        return 1;
    const std::uint64_t subsets = std::uint64_t{1} << n;
    const int chunks = n < 12 ? 1 : std::max(1, thread_count()) * 8;
    const std::uint64_t step = (subsets + chunks - 1) / chunks;
    std::vector<BigCount> partial(chunks);
    const bool narrow = fits_int128(a);

#pragma omp parallel for schedule(dynamic, 1) if (chunks > 1)
    for (int c = 0; c < chunks; ++c) {
        const std::uint64_t begin = std::min(subsets, step * c), end = std::min(subsets, step * (c + 1));
        if (narrow)
            partial[c] = from_int128(ryser_range<__int128>(a, begin, end, add_rows_int128));
        else
            partial[c] = ryser_range<BigCount>(a, begin, end, add_rows_big);
    }
    BigCount total = 0;
    for (const auto& x : partial)
        total += x;
    return total;
}

BigCount ryser_permanent_reference(const DenseMatrix01& a)
{
    check_ryser_size(a);
    const int n = a.order();
    BigCount total = 0;
    for (std::uint64_t set = 0; set < (std::uint64_t{1} << n); ++set) {
        BigCount prod = 1;
        for (int i = 0; i < n && prod != 0; ++i) {
            int r = 0;
            for (int j = 0; j < n; ++j)
                if (set >> j & 1)
                    r += a(i, j);
            prod *= r;
        }
        if ((n - std::popcount(set)) & 1)
            total -= prod;
        else
            total += prod;
    }
    return total;
}

BigCount cycle_bound_perm(const Graph& g)
{
    if (g.order() > ryser_max_order)
        throw SizeGuardError("permanent cycle bound uses the dense permanent; n <= " + std::to_string(ryser_max_order));
    return ryser_permanent(adjacency_plus_identity(g)) / 2;
}

BigCount cycle_bound_blowup(const BlockMatrixSpec& spec)
{
    return block_permanent(spec) / 2;
}

}
