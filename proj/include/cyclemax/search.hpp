#pragma once

#include "cyclemax/bigcount.hpp"
#include "cyclemax/bounds.hpp"
#include "cyclemax/graph.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cyclemax {

enum class Family { regular_pair, gamma_blowup, near_regular_shape, explicit_graph };
const char* family_name(Family f);
Family family_from_name(const std::string& s);

struct NamedBound {
    std::string name;
    std::string value;  // decimal integer, or a log value when is_log
    bool is_log = false;

    friend bool operator==(const NamedBound&, const NamedBound&) = default;
};

// One candidate family in an elimination pipeline. Every number that
// decided the verdict travels with the record so it can be re-checked.
struct CandidateRecord {
    Family family = Family::explicit_graph;
    std::map<std::string, long long> params;
    std::vector<int> sizes;
    std::vector<NamedBound> bounds;
    std::string stage;
    std::string verdict;       // "survivor", "eliminated-by-<bound>", "excluded-<reason>"
    std::string eliminated_by; // name of the bound in `bounds`, empty otherwise
    std::string turan;         // c(T(n,2)), decimal

    long long param(const std::string& key) const;
    bool eliminated() const;
    bool survivor() const { return verdict == "survivor"; }

    friend bool operator==(const CandidateRecord&, const CandidateRecord&) = default;
};

// The invariant every eliminated record must satisfy: the named bound is
// strictly below the Turan count it is stored next to.
bool record_consistent(const CandidateRecord& r);

struct DegreeThreshold {
    long long num;
    long long den;
    std::string implication;
};

struct DegreeThresholds {
    // delta > i n/(3i-1) forces a homomorphism to Gamma_{i-1}, i = 2..10.
    std::vector<DegreeThreshold> gamma;
    DegreeThreshold bipartite;
    DegreeThreshold three_colourable;
    DegreeThreshold four_colourable;
};
DegreeThresholds thresholds();

struct ScreenOptions {
    TuranConstant cutoff_constant = TuranConstant::published;
    EdgeBoundForm edge_form = EdgeBoundForm::full;
};

// Gamma_i(t) for 2 <= i <= 9 through four stages: A log-space closed forms,
// B exact edge bound, C block permanent, D exact count.
struct RegularGammaOptions : ScreenOptions {
    int max_n = 1000;
};
std::vector<CandidateRecord> regular_gamma_screen(const RegularGammaOptions& opts = {});

// Largest n for which the dense edge bound at density 10/29 does not beat
// the Turan lower bound.
int regular_log_cutoff(TuranConstant c = TuranConstant::published);

struct RegularDegreeOptions {
    int max_n = 61;
    EdgeBoundForm edge_form = EdgeBoundForm::reduced;
    // Pairs the edge bound leaves open are settled by enumerating every
    // regular triangle-free graph with those parameters.
    bool exhaustive_finish = true;
};
std::vector<CandidateRecord> regular_degree_screen(const RegularDegreeOptions& opts = {});

struct RegularEnumeration {
    long long graphs = 0;
    BigCount max_cycles = 0;  // over graphs the permanent bound left open
    BigCount max_bound = 0;   // the smaller of permanent bound and exact count, maximised
};
// Every delta-regular triangle-free graph on n vertices up to the choice of
// N(0) and N(1); n <= 16.
RegularEnumeration enumerate_regular_triangle_free(int n, int delta);

// Largest feasible n of the near-regular integer program, optionally with
// delta <= cap * n. Returns 0 when nothing is feasible.
struct Fraction {
    long long num;
    long long den;
};
int near_regular_bound(std::optional<Fraction> cap = std::nullopt,
                       EdgeBoundForm form = EdgeBoundForm::full, int max_n = 804);
int near_regular_precursor(TuranConstant c = TuranConstant::published);

// Gamma_2 blowups of near-regular shape, up to Gamma_2's automorphisms.
struct GtwoOptions : ScreenOptions {
    int max_n = 0;  // 0: use gtwo_cap()
};
int gtwo_cap(TuranConstant c = TuranConstant::published);
std::vector<CandidateRecord> gtwo_blowup_screen(const GtwoOptions& opts = {});

// Images of a Gamma_2 part-size vector under the ten automorphisms.
std::vector<std::vector<int>> gamma2_orbit(const std::vector<int>& sizes);
std::vector<int> gamma2_canonical(const std::vector<int>& sizes);
// All vectors of positive sizes with |n3-n5|, |n4-n1|, |n5-n2|, |n1-n3|,
// |n2-n4| <= 1, not all equal, summing to n.
std::vector<std::vector<int>> gamma2_shapes(int n);

struct VerifyReport {
    int n = 0;
    long long graphs = 0;       // labelled triangle-free graphs enumerated
    long long counted = 0;      // graphs whose cycles were counted
    BigCount max_cycles = 0;
    BigCount turan = 0;
    long long maximizers = 0;
    bool unique = false;        // every maximizer balanced complete bipartite
    bool passed() const { return max_cycles == turan && unique; }
};
struct VerifyOptions {
    // Count cycles only in maximal triangle-free graphs. Used at n = 8.
    bool fast = false;
    bool allow_large = false;
};
inline constexpr int verify_max_n = 8;
std::vector<VerifyReport> verify_conjecture(int max_n, const VerifyOptions& opts = {});
VerifyReport verify_order(int n, const VerifyOptions& opts = {});

}
