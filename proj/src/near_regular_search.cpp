#include "cyclemax/cycle_count.hpp"
#include "cyclemax/errors.hpp"
#include "cyclemax/permanent.hpp"
#include "cyclemax/search.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <set>

namespace cyclemax {

namespace {

constexpr int girth_floor = 4;

class TuranCache {
public:
    const BigCount& operator()(int n)
    {
        if (n >= static_cast<int>(values_.size()))
            values_.resize(n + 1);
        if (values_[n] == 0 && n >= 4)
            values_[n] = turan_cycle_count(n);
        return values_[n];
    }

private:
    std::vector<BigCount> values_;
};

}

int near_regular_bound(std::optional<Fraction> cap, EdgeBoundForm form, int max_n)
{
    TuranCache turan;
    int best = 0;
    for (int n = 4; n <= max_n; ++n) {
        int top = 2 * n / 5;
        if (cap)
            top = std::min<long long>(top, cap->num * n / cap->den);
        // Larger delta and more high-degree vertices only raise m, and the
        // bound is nondecreasing in m, so the first combination tried per
        // delta decides it and a failure there rules out every smaller delta.
        for (int d = top; d >= 2; --d) {
            long long m = -1;
            for (int high = n - 1; high >= 1; --high)
                if ((static_cast<long long>(n) * d + high) % 2 == 0) {
                    m = (static_cast<long long>(n) * d + high) / 2;
                    break;
                }
            if (m < 0)
                continue;
            if (edge_bound(n, m, girth_floor, form) >= turan(n))
                best = n;
            break;
        }
    }
    return best;
}

int near_regular_precursor(TuranConstant c)
{
    // Near-regular graphs that are not bipartite have delta <= 2n/5, so
    // m <= n^2/5 + (n-1)/2.
    int last = 0;
    for (int n = 4; n <= 3000; ++n) {
        const long double m = n * static_cast<long double>(n) / 5 + (n - 1) / 2.0L;
        bool excluded = false;
        if (m > 3.0L * n - 7 && m < n * (n - 1) / 2.0L)
            excluded = compare(edge_bound_log_real(n, m, girth_floor), turan_log_lower(n, c)).excludes();
        if (!excluded)
            last = n;
    }
    return last;
}

int gtwo_cap(TuranConstant c)
{
    // A near-regular Gamma_2 blowup on n vertices sits inside the uniform
    // blowup on N = 5 floor((n+6)/5) vertices, whose homomorphism bound
    // caps its cycle count.
    int last = 0;
    for (int n = 5; n <= 2000; ++n) {
        const int big = 5 * ((n + 6) / 5);
        const LogBound upper{ln_big(hmorph_bound(big, 5, 2, girth_floor)), Sense::upper};
        if (!compare(upper, turan_log_lower(n, c)).excludes())
            last = n;
    }
    return last;
}

std::vector<std::vector<int>> gamma2_orbit(const std::vector<int>& sizes)
{
    if (sizes.size() != 5)
        throw DomainError("Gamma_2 blowups have five parts");
    // Automorphisms of Gamma_2 (j ~ j+2, j+3 mod 5): j -> +-j + b.
    std::vector<std::vector<int>> out;
    for (int sign : {1, -1})
        for (int b = 0; b < 5; ++b) {
            std::vector<int> image(5);
            for (int j = 0; j < 5; ++j)
                image[((sign * j + b) % 5 + 5) % 5] = sizes[j];
            out.push_back(image);
        }
    return out;
}

std::vector<int> gamma2_canonical(const std::vector<int>& sizes)
{
    auto orbit = gamma2_orbit(sizes);
    return *std::min_element(orbit.begin(), orbit.end());
}

std::vector<std::vector<int>> gamma2_shapes(int n)
{
    // Adjacent parts differ by at most one, and adjacency in Gamma_2 is a
    // 5-cycle, so every shape is a base value plus offsets in {0,1,2}.
    static constexpr std::array<std::pair<int, int>, 5> close{{{2, 4}, {3, 0}, {4, 1}, {0, 2}, {1, 3}}};
    std::vector<std::vector<int>> out;
    for (int base = 1; 5 * base <= n; ++base)
        for (int code = 0; code < 243; ++code) {
            std::vector<int> s(5);
            int c = code, lowest = 2;
            for (int j = 0; j < 5; ++j) {
                s[j] = base + c % 3;
                lowest = std::min(lowest, c % 3);
                c /= 3;
            }
            if (lowest != 0)
                continue;
            int total = 0;
            for (int x : s)
                total += x;
            if (total != n)
                continue;
            bool ok = std::all_of(close.begin(), close.end(), [&](auto pr) { return std::abs(s[pr.first] - s[pr.second]) <= 1; });
            if (ok && std::any_of(s.begin(), s.end(), [&](int x) { return x != s[0]; }))
                out.push_back(s);
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CandidateRecord> gtwo_blowup_screen(const GtwoOptions& opts)
{
    const int cap = opts.max_n > 0 ? opts.max_n : gtwo_cap(opts.cutoff_constant);
    TuranCache turan;
    std::vector<CandidateRecord> out;
    for (int n = 5; n <= cap; ++n) {
        std::set<std::vector<int>> reps;
        for (const auto& s : gamma2_shapes(n))
            reps.insert(gamma2_canonical(s));
        const std::string turan_text = to_decimal(turan(n));
        for (const auto& s : reps) {
            CandidateRecord r;
            r.family = Family::near_regular_shape;
            r.sizes = s;
            r.turan = turan_text;
            const Graph g = make_blowup(gamma_blowup(2, s));
            const DegreeStats st = degree_stats(g);
            std::set<std::vector<int>> orbit;
            for (auto& img : gamma2_orbit(s))
                orbit.insert(img);
            r.params = {{"n", n},
                        {"m", static_cast<long long>(st.edges)},
                        {"delta", st.min_degree},
                        {"Delta", st.max_degree},
                        {"orbit", static_cast<long long>(orbit.size())},
                        {"g", girth_floor}};
            if (st.max_degree - st.min_degree != 1) {
                r.stage = "shape";
                r.verdict = "excluded-not-near-regular";
            }
            out.push_back(std::move(r));
        }
    }

    // Independent candidates; each slot is written by exactly one iteration.
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t idx = 0; idx < out.size(); ++idx) {
        CandidateRecord& r = out[idx];
        if (!r.verdict.empty())
            continue;
        const int n = static_cast<int>(r.param("n"));
        const BigCount t(r.turan);
        const BigCount edge = edge_bound(n, r.param("m"), girth_floor, opts.edge_form);
        r.bounds.push_back({"edge", to_decimal(edge), false});
        if (edge < t) {
            r.stage = "edge";
            r.verdict = "eliminated-by-edge";
            r.eliminated_by = "edge";
            continue;
        }
        const BigCount perm = cycle_bound_blowup(block_spec_from(gamma_blowup(2, r.sizes)));
        r.bounds.push_back({"block-permanent", to_decimal(perm), false});
        if (perm < t) {
            r.stage = "block-permanent";
            r.verdict = "eliminated-by-block-permanent";
            r.eliminated_by = "block-permanent";
            continue;
        }
        const BigCount exact = count_cycles_serial(make_blowup(gamma_blowup(2, r.sizes)));
        r.bounds.push_back({"exact-count", to_decimal(exact), false});
        r.stage = "exact";
        if (exact < t) {
            r.verdict = "eliminated-by-exact-count";
            r.eliminated_by = "exact-count";
        }
        else
            r.verdict = "survivor";
    }
    return out;
}

}
