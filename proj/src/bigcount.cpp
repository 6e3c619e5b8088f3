#include "cyclemax/bigcount.hpp"

#include <cmath>

namespace cyclemax {

BigCount factorial(unsigned n)
{
    BigCount r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigCount binomial(unsigned n, unsigned k)
{
    BigCount r;
    if (k > n)
        return r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

long double ln_big(const BigCount& x)
{
    if (sgn(x) <= 0)
        return -INFINITY;
    // Keep the leading 64 bits rather than the 53 a double carries.
    const auto bits = static_cast<long>(mpz_sizeinbase(x.get_mpz_t(), 2));
    const long shift = bits > 64 ? bits - 64 : 0;
    const BigCount top = x >> static_cast<mp_bitcnt_t>(shift);
    const auto lead = static_cast<long double>(mpz_get_ui(top.get_mpz_t()));
    return std::log(lead) + static_cast<long double>(shift) * std::log(2.0L);
}

FactorialTable::FactorialTable(unsigned n) : table_(n + 1)
{
    table_[0] = 1;
    for (unsigned k = 1; k <= n; ++k)
        table_[k] = table_[k - 1] * k;
}

BigCount FactorialTable::binomial(unsigned n, unsigned k) const
{
    if (k > n)
        return 0;
    return table_[n] / (table_[k] * table_[n - k]);
}

}
