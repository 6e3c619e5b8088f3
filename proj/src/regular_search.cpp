#include "cyclemax/cycle_count.hpp"
#include "cyclemax/errors.hpp"
#include "cyclemax/permanent.hpp"
#include "cyclemax/search.hpp"

#include <cstdio>
#include <string>

namespace cyclemax {

namespace {

// Girth lower bound used throughout: the graphs are triangle-free.
constexpr int girth_floor = 4;

std::string log_text(long double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9Lf", x);
    return buf;
}

void eliminate(CandidateRecord& r, const std::string& stage, const std::string& bound)
{
    r.stage = stage;
    r.verdict = "eliminated-by-" + bound;
    r.eliminated_by = bound;
}

struct StageAResult {
    bool excluded = false;
    std::string bound;
};

// Log-space closed forms against the Turan lower bound. A margin inside the
// guard band is re-decided with the exact homomorphism bound.
StageAResult stage_a(CandidateRecord& r, int i, int t, const ScreenOptions& opts)
{
    const int p = 3 * i - 1, n = p * t;
    const long long m = static_cast<long long>(n) * i * t / 2;
    const LogBound lower = turan_log_lower(n, opts.cutoff_constant);
    r.bounds.push_back({"turan-log", log_text(lower.ln_value), true});

    StageAResult out;
    bool flagged = false;
    auto consider = [&](const std::string& name, const LogBound& b) {
        r.bounds.push_back({name, log_text(b.ln_value), true});
        const LogComparison c = compare(b, lower);
        if (c.flagged)
            flagged = true;
        else if (c.excludes() && !out.excluded)
            out = {true, name};
    };
    if (m > 3LL * n - 7 && m < choose2(n))
        consider("edge-log", edge_bound_log(n, m, girth_floor));
    consider("hmorph-log", hmorph_bound_log(n, p, i, girth_floor));

    if (!out.excluded && flagged) {
        const BigCount exact = hmorph_bound(n, p, i, girth_floor);
        r.bounds.push_back({"hmorph", to_decimal(exact), false});
        if (exact < BigCount(r.turan))
            out = {true, "hmorph"};
    }
    return out;
}

}

std::vector<CandidateRecord> regular_gamma_screen(const RegularGammaOptions& opts)
{
    std::vector<CandidateRecord> out;
    for (int i = 2; i <= 9; ++i) {
        const int p = 3 * i - 1;
        for (int t = 1; p * t <= opts.max_n; ++t) {
            const int n = p * t;
            const long long m = static_cast<long long>(n) * i * t / 2;
            CandidateRecord r;
            r.family = Family::gamma_blowup;
            r.params = {{"i", i}, {"t", t}, {"n", n}, {"m", m}, {"g", girth_floor}};
            r.turan = to_decimal(turan_cycle_count(n));

            if (auto a = stage_a(r, i, t, opts); a.excluded) {
                eliminate(r, "A", a.bound);
                out.push_back(std::move(r));
                continue;
            }

            const BigCount turan(r.turan);
            const BigCount edge = edge_bound(n, m, girth_floor, opts.edge_form);
            r.bounds.push_back({"edge", to_decimal(edge), false});
            if (edge < turan) {
                eliminate(r, "B", "edge");
                out.push_back(std::move(r));
                continue;
            }

            const BigCount perm = cycle_bound_blowup(block_spec_from(gamma_blowup_uniform(i, t)));
            r.bounds.push_back({"block-permanent", to_decimal(perm), false});
            if (perm < turan) {
                eliminate(r, "C", "block-permanent");
                out.push_back(std::move(r));
                continue;
            }

            const BigCount exact = count_cycles(make_blowup(gamma_blowup_uniform(i, t)));
            r.bounds.push_back({"exact-count", to_decimal(exact), false});
            if (exact < turan)
                eliminate(r, "D", "exact-count");
            else {
                r.stage = "D";
                r.verdict = "survivor";
            }
            out.push_back(std::move(r));
        }
    }
    return out;
}

int regular_log_cutoff(TuranConstant c)
{
    // Regular graphs past the 3-colourable threshold have delta <= 10n/29,
    // so m <= 5n^2/29; the log edge bound increases with m.
    int last = 0;
    for (int n = 4; n <= 3000; ++n) {
        const long double m = 5.0L * n * n / 29;
        bool excluded = false;
        if (m > 3.0L * n - 7 && m < n * (n - 1) / 2.0L)
            excluded = compare(edge_bound_log_real(n, m, girth_floor), turan_log_lower(n, c)).excludes();
        if (!excluded)
            last = n;
    }
    return last;
}

namespace {

// Backtracking over edge slots (u, v), u < v, in lexicographic order with
// the first two rows fixed: N(0) = {1..d}, N(1) = {0, d+1..2d-1}.
class RegularEnumerator {
public:
    RegularEnumerator(int n, int d) : n_(n), d_(d), adj_(n, 0), deg_(n, 0), turan_(turan_cycle_count(n)) {}

    RegularEnumeration run()
    {
        if (n_ * d_ % 2 != 0 || 2 * d_ > n_ || d_ < 1)
            return result_;
        for (int v = 1; v <= d_; ++v)
            join(0, v);
        for (int v = d_ + 1; v <= 2 * d_ - 1; ++v)
            join(1, v);
        if (n_ > 2)
            row(2);
        else
            leaf();
        return result_;
    }

private:
    void join(int u, int v)
    {
        adj_[u] |= 1u << v;
        adj_[v] |= 1u << u;
        ++deg_[u];
        ++deg_[v];
    }

    void split(int u, int v)
    {
        adj_[u] &= ~(1u << v);
        adj_[v] &= ~(1u << u);
        --deg_[u];
        --deg_[v];
    }

    void row(int u)
    {
        if (u == n_) {
            leaf();
            return;
        }
        slot(u, u + 1);
    }

    void slot(int u, int v)
    {
        if (deg_[u] == d_) {
            row(u + 1);
            return;
        }
        if (v == n_ || d_ - deg_[u] > n_ - v)
            return;
        if (deg_[v] < d_ && (adj_[u] & adj_[v]) == 0) {
            join(u, v);
            slot(u, v + 1);
            split(u, v);
        }
        slot(u, v + 1);
    }

    void leaf()
    {
        Graph g(n_);
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (adj_[u] >> v & 1)
                    g.add_edge(u, v);
        ++result_.graphs;
        BigCount certified = cycle_bound_perm(g);
        if (certified >= turan_) {
            certified = count_cycles_serial(g);
            if (certified > result_.max_cycles)
                result_.max_cycles = certified;
        }
        if (certified > result_.max_bound)
            result_.max_bound = certified;
    }

    int n_, d_;
    std::vector<unsigned> adj_;
    std::vector<int> deg_;
    BigCount turan_;
    RegularEnumeration result_;
};

}

RegularEnumeration enumerate_regular_triangle_free(int n, int delta)
{
    if (n > 16)
        throw SizeGuardError("regular enumeration is exhaustive; n <= 16");
    if (n < 1 || delta < 1)
        throw DomainError("regular enumeration needs n, delta >= 1");
    return RegularEnumerator(n, delta).run();
}

std::vector<CandidateRecord> regular_degree_screen(const RegularDegreeOptions& opts)
{
    std::vector<CandidateRecord> out;
    for (int n = 3; n <= opts.max_n; ++n)
        for (int d = 2; 29 * d <= 10 * n; ++d) {
            if (n * d % 2 != 0)
                continue;
            const long long m = static_cast<long long>(n) * d / 2;
            CandidateRecord r;
            r.family = Family::regular_pair;
            r.params = {{"n", n}, {"delta", d}, {"m", m}, {"g", girth_floor}};
            const BigCount turan = turan_cycle_count(n);
            r.turan = to_decimal(turan);
            const BigCount edge = edge_bound(n, m, girth_floor, opts.edge_form);
            r.bounds.push_back({"edge", to_decimal(edge), false});
            if (edge < turan)
                eliminate(r, "edge", "edge");
            else if (opts.exhaustive_finish && n <= 16) {
                const RegularEnumeration e = enumerate_regular_triangle_free(n, d);
                r.params["graphs"] = e.graphs;
                r.bounds.push_back({"exhaustive", to_decimal(e.max_bound), false});
                if (e.max_bound < turan)
                    eliminate(r, "exhaustive", "exhaustive");
                else {
                    r.stage = "exhaustive";
                    r.verdict = "survivor";
                }
            }
            else {
                r.stage = "edge";
                r.verdict = "survivor";
            }
            out.push_back(std::move(r));
        }
    return out;
}

}
