#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace cyclemax {

// Exact counts, permanents and products. Never rounded.
using BigCount = mpz_class;

inline std::string to_decimal(const BigCount& x) { return x.get_str(10); }

BigCount factorial(unsigned n);
BigCount binomial(unsigned n, unsigned k);

// Natural log of a positive big integer, good to long double precision.
long double ln_big(const BigCount& x);

// k! for k = 0..n, for callers that need many binomials of small arguments.
class FactorialTable {
public:
    explicit FactorialTable(unsigned n);
    const BigCount& operator[](unsigned k) const { return table_[k]; }
    BigCount binomial(unsigned n, unsigned k) const;
    unsigned size() const { return static_cast<unsigned>(table_.size()); }

private:
    std::vector<BigCount> table_;
};

}
