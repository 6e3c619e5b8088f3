#include "cyclemax/permanent.hpp"
#include "cyclemax/errors.hpp"
#include "cyclemax/parallel.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>

namespace cyclemax {

namespace {

// Row factor of block r with k_r = k ones chosen on the diagonal and s ones
// available off the diagonal:
//   (-1)^(n_r - k) C(n_r, k) (s+1)^k s^(n_r - k),  with 0^0 = 1.
void row_factor(BigCount& out, int size, int k, int s, const FactorialTable& fact)
{
    BigCount a, b;
    mpz_ui_pow_ui(a.get_mpz_t(), static_cast<unsigned long>(s + 1), static_cast<unsigned long>(k));
    mpz_ui_pow_ui(b.get_mpz_t(), static_cast<unsigned long>(s), static_cast<unsigned long>(size - k));
    out = fact.binomial(size, k) * a * b;
    if ((size - k) & 1)
        out = -out;
}

class BlockKernel {
public:
    explicit BlockKernel(const BlockMatrixSpec& spec) : sizes_(spec.sizes), p_(spec.blocks())
    {
        nbrs_.resize(p_);
        span_.assign(p_, 0);
        for (int r = 0; r < p_; ++r)
            for (int c = 0; c < p_; ++c)
                if (spec.h[r][c]) {
                    nbrs_[r].push_back(c);
                    span_[r] += sizes_[c];
                }
        choose_order();
        build_tables(spec);
    }

    BigCount run()
    {
        // Leading levels are flattened into independent prefixes so the
        // work splits evenly even when every block is small.
        const int last = p_ - 1;
        const long long want = 16LL * std::max(1, thread_count());
        int split = 0;
        long long prefixes = 1;
        while (split < last && prefixes < want)
            prefixes *= sizes_[order_[split++]] + 1;

        std::vector<BigCount> partial(prefixes);
#pragma omp parallel
        {
            Worker w(*this);
#pragma omp for schedule(dynamic, 1)
            for (long long idx = 0; idx < prefixes; ++idx)
                partial[idx] = w.run_prefix(idx, split);
        }
        BigCount total = 0;
        for (const auto& x : partial)
            total += x;
        return total;
    }

private:
    // The innermost variable is the block touching the fewest rows, so the
    // tight loop multiplies as few factors as possible.
    void choose_order()
    {
        int inner = 0;
        for (int r = 1; r < p_; ++r) {
            const auto dr = nbrs_[r].size(), di = nbrs_[inner].size();
            if (dr < di || (dr == di && sizes_[r] > sizes_[inner]))
                inner = r;
        }
        for (int r = 0; r < p_; ++r)
            if (r != inner)
                order_.push_back(r);
        order_.push_back(inner);

        std::vector<int> pos(p_);
        for (int l = 0; l < p_; ++l)
            pos[order_[l]] = l;
        completes_.assign(p_, {});
        for (int r = 0; r < p_; ++r) {
            int level = pos[r];
            for (int c : nbrs_[r])
                level = std::max(level, pos[c]);
            completes_[level].push_back(r);
        }
    }

    void build_tables(const BlockMatrixSpec&)
    {
        const int biggest = *std::max_element(sizes_.begin(), sizes_.end());
        fact_ = std::make_unique<FactorialTable>(static_cast<unsigned>(std::max(biggest, 1)));
        long double bytes = 0;
        for (int r = 0; r < p_; ++r)
            bytes += (sizes_[r] + 1.0L) * (span_[r] + 1.0L)
                * (32 + sizes_[r] * std::log2(span_[r] + 2.0L) / 8 + std::log2(sizes_[r] + 2.0L) * sizes_[r] / 8);
        tabulated_ = bytes < 256.0L * 1024 * 1024;
        if (!tabulated_)
            return;
        table_.resize(p_);
        for (int r = 0; r < p_; ++r) {
            table_[r].resize(static_cast<std::size_t>(sizes_[r] + 1) * (span_[r] + 1));
            for (int k = 0; k <= sizes_[r]; ++k)
                for (int s = 0; s <= span_[r]; ++s)
                    row_factor(table_[r][static_cast<std::size_t>(k) * (span_[r] + 1) + s], sizes_[r], k, s, *fact_);
        }
    }

    const BigCount& factor(int r, int k, int s, BigCount& scratch) const
    {
        if (tabulated_)
            return table_[r][static_cast<std::size_t>(k) * (span_[r] + 1) + s];
        row_factor(scratch, sizes_[r], k, s, *fact_);
        return scratch;
    }

    class Worker {
    public:
        explicit Worker(const BlockKernel& kern) : kern_(kern), k_(kern.p_, 0), prefix_(kern.p_ + 1) {}

        BigCount run_prefix(long long idx, int split)
        {
            total_ = 0;
            prefix_[0] = 1;
            for (int level = split - 1; level >= 0; --level) {
                const int b = kern_.order_[level];
                k_[b] = static_cast<int>(idx % (kern_.sizes_[b] + 1));
                idx /= kern_.sizes_[b] + 1;
            }
            for (int level = 0; level < split; ++level)
                if (!close_level(level))
                    return 0;
            descend(split);
            return total_;
        }

    private:
        int rsum(int r) const
        {
            int s = 0;
            for (int c : kern_.nbrs_[r])
                s += k_[c];
            return s;
        }

        // prefix_[level+1] = prefix_[level] times the rows this level completes.
        bool close_level(int level)
        {
            BigCount& out = prefix_[level + 1];
            out = prefix_[level];
            for (int r : kern_.completes_[level])
                out *= kern_.factor(r, k_[r], rsum(r), scratch_);
            return sgn(out) != 0;
        }

        void descend(int level)
        {
            const int last = kern_.p_ - 1;
            if (level == last) {
                innermost();
                return;
            }
            const int b = kern_.order_[level];
            for (int v = 0; v <= kern_.sizes_[b]; ++v) {
                k_[b] = v;
                if (close_level(level))
                    descend(level + 1);
            }
        }

        // Sum over k_x of the rows that involve x, then one multiply-add
        // against the product of everything fixed further out.
        void innermost()
        {
            const int last = kern_.p_ - 1;
            const int x = kern_.order_[last];
            const auto& rows = kern_.completes_[last];
            base_.resize(rows.size());
            for (std::size_t i = 0; i < rows.size(); ++i) {
                k_[x] = 0;
                base_[i] = rsum(rows[i]);
            }
            inner_ = 0;
            const std::size_t tail = rows.size() - 1;
            auto row_value = [&](std::size_t i, int v) -> const BigCount& {
                const int r = rows[i];
                return kern_.factor(r, k_[r], r == x ? base_[i] : base_[i] + v, scratch_);
            };
            for (int v = 0; v <= kern_.sizes_[x]; ++v) {
                k_[x] = v;
                if (tail == 0) {
                    inner_ += row_value(0, v);
                    continue;
                }
                term_ = row_value(0, v);
                for (std::size_t i = 1; i < tail; ++i)
                    term_ *= row_value(i, v);
                mpz_addmul(inner_.get_mpz_t(), term_.get_mpz_t(), row_value(tail, v).get_mpz_t());
            }
            mpz_addmul(total_.get_mpz_t(), prefix_[last].get_mpz_t(), inner_.get_mpz_t());
        }

        const BlockKernel& kern_;
        std::vector<int> k_;
        std::vector<BigCount> prefix_;
        std::vector<int> base_;
        BigCount inner_, term_, total_, scratch_;
    };

    std::vector<int> sizes_;
    int p_;
    std::vector<std::vector<int>> nbrs_;
    std::vector<int> span_;
    std::vector<int> order_;
    std::vector<std::vector<int>> completes_;
    std::unique_ptr<FactorialTable> fact_;
    bool tabulated_ = false;
    std::vector<std::vector<BigCount>> table_;
};

}

BigCount block_permanent(const BlockMatrixSpec& spec)
{
    spec.validate();
    BigCount result = BlockKernel(spec).run();
    if (sgn(result) < 0)
        throw std::logic_error("block permanent came out negative");
    return result;
}

BigCount block_permanent_reference(const BlockMatrixSpec& spec)
{
    spec.validate();
    const int p = spec.blocks();
    const int biggest = *std::max_element(spec.sizes.begin(), spec.sizes.end());
    const FactorialTable fact(static_cast<unsigned>(std::max(biggest, 1)));
    std::vector<int> k(p, 0);
    BigCount result = 0, cprod, coeff, a, b;
    while (true) {
        cprod = 1;
        for (int row = 0; row < p; ++row) {
            int rsum = 0;
            for (int col = 0; col < p; ++col)
                if (col != row && spec.h[row][col])
                    rsum += k[col];
            mpz_ui_pow_ui(a.get_mpz_t(), static_cast<unsigned long>(rsum + 1), static_cast<unsigned long>(k[row]));
            mpz_ui_pow_ui(b.get_mpz_t(), static_cast<unsigned long>(rsum), static_cast<unsigned long>(spec.sizes[row] - k[row]));
            cprod *= a * b;
        }
        coeff = 1;
        int sign = 0;
        for (int i = 0; i < p; ++i) {
            coeff *= fact.binomial(spec.sizes[i], k[i]);
            sign += spec.sizes[i] - k[i];
        }
        if (sign & 1)
            result -= cprod * coeff;
        else
            result += cprod * coeff;

        int i = 0;
        while (i < p && k[i] == spec.sizes[i])
            k[i++] = 0;
        if (i == p)
            break;
        ++k[i];
    }
    if (sgn(result) < 0)
        throw std::logic_error("block permanent came out negative");
    return result;
}

}
