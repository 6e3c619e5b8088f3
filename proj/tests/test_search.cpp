#include "cyclemax/cycle_count.hpp"
#include "cyclemax/graph.hpp"
#include "cyclemax/permanent.hpp"
#include "cyclemax/records.hpp"
#include "cyclemax/search.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace cyclemax;

namespace {

const CandidateRecord* find_gamma(const std::vector<CandidateRecord>& rs, int i, int t)
{
    for (const auto& r : rs)
        if (r.param("i") == i && r.param("t") == t)
            return &r;
    return nullptr;
}

std::string bound_value(const CandidateRecord& r, const std::string& name)
{
    for (const auto& b : r.bounds)
        if (b.name == name)
            return b.value;
    return {};
}

}

TEST_CASE("degree thresholds decrease toward n/3")
{
    const DegreeThresholds t = thresholds();
    REQUIRE(t.gamma.size() == 9);
    CHECK(t.gamma.front().num == 2);
    CHECK(t.gamma.front().den == 5);
    for (std::size_t k = 0; k + 1 < t.gamma.size(); ++k)
        CHECK(t.gamma[k].num * t.gamma[k + 1].den > t.gamma[k + 1].num * t.gamma[k].den);
    for (const auto& g : t.gamma)
        CHECK(3 * g.num > g.den);
    CHECK(t.bipartite.num * 5 == t.bipartite.den * 2);
    CHECK(t.three_colourable.num == 10);
    CHECK(t.three_colourable.den == 29);
    CHECK(t.four_colourable.num == 1);
    CHECK(t.four_colourable.den == 3);
}

TEST_CASE("regular Gamma blowups: stage survivors")
{
    const auto rs = regular_gamma_screen();
    // After the closed-form stage: Gamma_i(t) for t up to these limits.
    const std::map<int, int> stage_a_limit{{2, 9}, {3, 6}, {4, 5}, {5, 5}, {6, 4}, {7, 3}, {8, 2}, {9, 2}};
    int past_a = 0, past_b = 0, past_c = 0;
    for (const auto& r : rs) {
        const int i = static_cast<int>(r.param("i")), t = static_cast<int>(r.param("t"));
        const bool a = r.stage != "A";
        CHECK(a == (t <= stage_a_limit.at(i)));
        past_a += a;
        past_b += a && r.stage != "B";
        past_c += a && r.stage != "B" && r.stage != "C";
        CHECK(record_consistent(r));
    }
    CHECK(past_a == 36);
    CHECK(past_b == 20);
    CHECK(past_c == 1);
    const CandidateRecord* c5 = find_gamma(rs, 2, 1);
    REQUIRE(c5);
    CHECK(c5->stage == "D");
    CHECK(c5->verdict == "eliminated-by-exact-count");
    CHECK(bound_value(*c5, "exact-count") == "1");
    CHECK(c5->turan == "3");
    const CandidateRecord* g5 = find_gamma(rs, 5, 1);
    REQUIRE(g5);
    CHECK(g5->stage == "C");
    CHECK(bound_value(*g5, "block-permanent") == "602261");
    CHECK(g5->turan == "4662231");
    for (int i : {4, 5, 6, 7, 8, 9})
        for (int t = 1; t <= stage_a_limit.at(i); ++t) {
            if ((i == 4 && t <= 3) || (i <= 6 && t == 1))
                continue;
            CHECK(find_gamma(rs, i, t)->stage == "B");
        }
    CHECK(std::none_of(rs.begin(), rs.end(), [](const CandidateRecord& r) { return r.survivor(); }));
}

TEST_CASE("screens are deterministic")
{
    CHECK(regular_gamma_screen() == regular_gamma_screen());
    GtwoOptions o;
    o.max_n = 30;
    CHECK(gtwo_blowup_screen(o) == gtwo_blowup_screen(o));
    RegularDegreeOptions d;
    d.max_n = 30;
    d.exhaustive_finish = false;
    CHECK(regular_degree_screen(d) == regular_degree_screen(d));
}

TEST_CASE("regular degree pairs match an independent triple loop")
{
    RegularDegreeOptions o;
    o.exhaustive_finish = false;
    const auto rs = regular_degree_screen(o);
    std::vector<std::pair<int, int>> got;
    for (const auto& r : rs)
        got.emplace_back(static_cast<int>(r.param("n")), static_cast<int>(r.param("delta")));
    CHECK(got == oracle::regular_pairs(61));
    CHECK(got.size() == 428);
    CHECK(std::find(got.begin(), got.end(), std::pair<int, int>{6, 2}) != got.end());
    CHECK(std::find(got.begin(), got.end(), std::pair<int, int>{5, 2}) == got.end());
}

TEST_CASE("regular degree screen eliminates every pair")
{
    const auto rs = regular_degree_screen();
    CHECK(rs.size() == 428);
    std::size_t exhaustive = 0;
    for (const auto& r : rs) {
        CHECK(r.eliminated());
        CHECK(record_consistent(r));
        exhaustive += r.stage == "exhaustive";
    }
    CHECK(exhaustive == 3);
    CHECK(summary_line(summarize(rs)) == "428 candidates, 428 eliminated, 0 survivors; 3 settled by exhaustive search");
}

TEST_CASE("exhaustive regular enumeration")
{
    const auto e62 = enumerate_regular_triangle_free(6, 2);
    CHECK(e62.graphs == 2);
    // C6 is settled by its permanent bound and never needs counting.
    CHECK(e62.max_bound == 10);
    CHECK(e62.max_cycles == 0);
    const auto e82 = enumerate_regular_triangle_free(8, 3);
    CHECK(e82.graphs >= 1);
    CHECK(e82.max_cycles < turan_cycle_count(8));
    // K_{3,3} is the only 3-regular triangle-free graph on 6 vertices.
    const auto e63 = enumerate_regular_triangle_free(6, 3);
    CHECK(e63.max_cycles == complete_bipartite_cycle_count(3, 3));
}

TEST_CASE("log cutoffs")
{
    CHECK(regular_log_cutoff() == 61);
    CHECK(near_regular_precursor() == 804);
    CHECK(gtwo_cap() == 184);
}

TEST_CASE("near-regular program maxima")
{
    CHECK(near_regular_bound() == 435);
    const std::vector<std::pair<Fraction, int>> capped{
        {{3, 8}, 91}, {{4, 11}, 61}, {{5, 14}, 51}, {{6, 17}, 51},
        {{7, 20}, 43}, {{8, 23}, 35}, {{10, 29}, 35}, {{1, 3}, 33}};
    for (const auto& [cap, expected] : capped)
        CHECK(near_regular_bound(cap) == expected);
}

TEST_CASE("Gamma_2 automorphisms and shapes")
{
    const auto orbit = gamma2_orbit({1, 2, 3, 4, 5});
    CHECK(orbit.size() == 10);
    CHECK(std::set<std::vector<int>>(orbit.begin(), orbit.end()).size() == 10);
    // Every image is again a blowup isomorphic to the original.
    const Graph base = make_blowup(gamma_blowup(2, {1, 2, 1, 1, 2}));
    for (const auto& img : gamma2_orbit({1, 2, 1, 1, 2}))
        CHECK(count_cycles(make_blowup(gamma_blowup(2, img))) == count_cycles(base));
    CHECK(gamma2_canonical({1, 2, 1, 1, 2}) == std::vector<int>{1, 1, 2, 1, 2});

    // The shape constraints leave nine classes of offset patterns.
    std::set<std::vector<int>> classes;
    std::set<std::vector<int>> spread_two;
    for (int n = 5; n <= 80; ++n)
        for (const auto& s : gamma2_shapes(n)) {
            const int lo = *std::min_element(s.begin(), s.end());
            std::vector<int> off(5);
            for (int k = 0; k < 5; ++k)
                off[k] = s[k] - lo;
            const auto c = gamma2_canonical(off);
            classes.insert(c);
            const auto st = degree_stats(make_blowup(gamma_blowup(2, s)));
            if (st.max_degree - st.min_degree == 2)
                spread_two.insert(c);
        }
    CHECK(classes.size() == 9);
    CHECK(spread_two.size() == 3);
}

TEST_CASE("both index orders of the 7-vertex survivor give 15 cycles")
{
    const Graph a = make_blowup(gamma_blowup(2, {1, 2, 1, 1, 2}));
    const Graph b = make_blowup(gamma_blowup(2, {1, 1, 2, 1, 2}));
    CHECK(count_cycles(a) == 15);
    CHECK(count_cycles(b) == 15);
    CHECK(oracle::cycles_by_edge_subsets_total(a) == 15);
    CHECK(oracle::cycles_by_edge_subsets_total(b) == 15);
}

TEST_CASE("Gamma_2 screen on small orders")
{
    GtwoOptions o;
    o.max_n = 40;
    const auto rs = gtwo_blowup_screen(o);
    std::vector<std::vector<int>> reached_exact;
    for (const auto& r : rs) {
        CHECK(record_consistent(r));
        CHECK_FALSE(r.survivor());
        if (r.stage == "exact") {
            reached_exact.push_back(r.sizes);
            CHECK(BigCount(bound_value(r, "exact-count")) < BigCount(bound_value(r, "block-permanent")));
            CHECK(count_cycles(make_blowup(gamma_blowup(2, r.sizes))) == BigCount(bound_value(r, "exact-count")));
        }
    }
    const std::vector<std::vector<int>> expected{{1, 1, 2, 1, 2}, {1, 2, 2, 1, 3}, {1, 3, 2, 2, 3}};
    CHECK(reached_exact == expected);
    const std::map<std::vector<int>, std::pair<std::string, std::string>> counts{
        {{1, 1, 2, 1, 2}, {"15", "42"}}, {{1, 2, 2, 1, 3}, {"216", "660"}}, {{1, 3, 2, 2, 3}, {"3051", "15390"}}};
    for (const auto& r : rs)
        if (auto it = counts.find(r.sizes); it != counts.end()) {
            CHECK(bound_value(r, "exact-count") == it->second.first);
            CHECK(r.turan == it->second.second);
        }
}

TEST_CASE("conjecture verification at small orders")
{
    const auto reports = verify_conjecture(7);
    REQUIRE(reports.size() == 4);
    const std::vector<long long> maximizers{3, 10, 10, 35};
    for (std::size_t k = 0; k < reports.size(); ++k) {
        const auto& r = reports[k];
        CHECK(r.n == static_cast<int>(k) + 4);
        CHECK(r.passed());
        CHECK(r.max_cycles == turan_cycle_count(r.n));
        CHECK(r.maximizers == maximizers[k]);
    }
    CHECK(reports[0].max_cycles == 1);
    CHECK(reports[1].max_cycles == 3);
    VerifyOptions fast;
    fast.fast = true;
    const auto r6 = verify_order(6, fast);
    CHECK(r6.passed());
    CHECK(r6.counted < r6.graphs);
    CHECK_THROWS(verify_conjecture(9));
    CHECK_THROWS(verify_conjecture(3));
}
