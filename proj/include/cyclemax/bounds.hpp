#pragma once

#include "cyclemax/bigcount.hpp"

#include <utility>
#include <vector>

namespace cyclemax {

enum class Sense { lower, upper };

// Natural log of a count together with which side of it the value bounds.
struct LogBound {
    long double ln_value;
    Sense sense;
};

// Comparisons closer than this in log space are flagged rather than trusted.
inline constexpr long double log_guard = 1e-6L;

struct LogComparison {
    long double margin;  // upper minus lower
    bool flagged;
    // upper < lower: the family cannot reach the lower bound.
    bool excludes() const { return margin < 0; }
};

// Upper against lower only; two bounds of the same sense throw DomainError.
LogComparison compare(const LogBound& a, const LogBound& b);

struct StirlingBracket {
    long double lo;
    long double hi;
};
StirlingBracket ln_factorial_bounds(long double x);

struct PiValue {
    int n;
    long long m;
    BigCount value;
    // A maximising sequence, nonincreasing, c_i <= n-i, summing to m.
    std::vector<int> sequence;
};

long long choose2(long long n);

// Largest product of positive integers c_1 >= ... >= c_k with c_i <= n-i,
// k < n, summing to m. Closed form in each density regime.
PiValue pi_max_product(int n, long long m);
// Exhaustive search; n <= 14.
BigCount pi_brute_force(int n, long long m);
// As pi_max_product but allows m past C(n,2), where the cap is (n-1)!.
BigCount pi_saturated(int n, long long m);

// Which Pi the edge bound is taken with: Pi(n-1, m) is the tight form,
// Pi(n, m) the looser one used by the near-regular feasibility program.
enum class EdgeBoundForm { reduced, full };

BigCount edge_bound(int n, long long m, int g, EdgeBoundForm form = EdgeBoundForm::reduced);

long double alpha(long double n, long double m);
// Root of a - ln a = 1 + ln 2 below 1, and the edge density 1-(1-a)^2 it forces.
long double alpha_threshold();
long double alpha_density_threshold();

LogBound edge_bound_log(int n, long long m, int g);
// Real-valued m for cutoff scans; same regime rule.
LogBound edge_bound_log_real(long double n, long double m, int g);

BigCount hmorph_bound(int n, int p, int q, int g);
LogBound hmorph_bound_log(long double n, int p, int q, int g);

// The constant term of the Turan lower bound. ln(pi) is what the derivation
// gives; the decimal 1.44730 is the printed value the published cutoffs
// were computed with.
enum class TuranConstant { ln_pi, published };
inline constexpr long double published_turan_constant = 1.44730L;

LogBound turan_log_lower(long double n, TuranConstant c = TuranConstant::ln_pi);

}
