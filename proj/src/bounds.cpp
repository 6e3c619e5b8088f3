#include "cyclemax/bounds.hpp"
#include "cyclemax/errors.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>

namespace cyclemax {

namespace {

constexpr long double pi_ld = std::numbers::pi_v<long double>;
const long double ln2 = std::log(2.0L);

BigCount power(unsigned long base, unsigned long exp)
{
    BigCount r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

BigCount product(const std::vector<int>& seq)
{
    BigCount r = 1;
    for (int c : seq)
        r *= c;
    return r;
}

}

LogComparison compare(const LogBound& a, const LogBound& b)
{
    if (a.sense == b.sense)
        throw DomainError("log bounds of the same sense cannot be compared");
    const LogBound& upper = a.sense == Sense::upper ? a : b;
    const LogBound& lower = a.sense == Sense::upper ? b : a;
    const long double margin = upper.ln_value - lower.ln_value;
    return {margin, std::fabs(margin) < log_guard};
}

StirlingBracket ln_factorial_bounds(long double x)
{
    if (!(x >= 1))
        throw DomainError("Stirling bracket needs x >= 1");
    const long double lo = x * std::log(x) - x + 0.5L * std::log(x) + 0.5L * std::log(2 * pi_ld);
    return {lo, lo + 1 / (12 * x)};
}

long long choose2(long long n)
{
    return n * (n - 1) / 2;
}

PiValue pi_max_product(int n, long long m)
{
    if (n < 3)
        throw DomainError("Pi(n,m) needs n >= 3");
    if (m < 2 || m > choose2(n))
        throw DomainError("Pi(n,m) needs 2 <= m <= C(n,2), got m=" + std::to_string(m));

    std::vector<int> seq;
    if (m == choose2(n)) {
        for (int c = n - 1; c >= 1; --c)
            seq.push_back(c);
    }
    else if (m <= 3LL * n - 7) {
        // Threes, with the remainder absorbed as 2+2 or a single 2.
        const long long r = m % 3;
        const long long threes = r == 0 ? m / 3 : r == 1 ? (m - 4) / 3 : (m - 2) / 3;
        seq.assign(threes, 3);
        if (r == 1)
            seq.insert(seq.end(), {2, 2});
        else if (r == 2)
            seq.push_back(2);
    }
    else {
        // Dense: t copies of s+1, the rest of the first n-s slots at s, then
        // the forced tail s-1, ..., 2. The slack of one is the dropped 1.
        for (int s = 3; s < n; ++s) {
            const long long base = static_cast<long long>(n - s) * s + static_cast<long long>(s) * (s - 1) / 2 - 1;
            const long long t = m - base;
            if (t < 0 || t >= n - s)
                continue;
            seq.assign(t, s + 1);
            seq.insert(seq.end(), n - s - t, s);
            for (int c = s - 1; c >= 2; --c)
                seq.push_back(c);
            break;
        }
        if (seq.empty())
            throw DomainError("Pi(n,m): no dense-regime split for n=" + std::to_string(n) + ", m=" + std::to_string(m));
    }

    long long sum = 0;
    for (int c : seq)
        sum += c;
    if (sum != m)
        throw std::logic_error("Pi(n,m) sequence does not sum to m");
    return {n, m, product(seq), std::move(seq)};
}

BigCount pi_brute_force(int n, long long m)
{
    if (n > 14)
        throw SizeGuardError("pi_brute_force is exhaustive; n <= 14");
    if (n < 3 || m < 2 || m > choose2(n))
        throw DomainError("Pi(n,m) needs n >= 3 and 2 <= m <= C(n,2)");
    std::uint64_t best = 0;
    // Position i (1-based) holds c_i <= min(n-i, c_{i-1}).
    auto rec = [&](auto&& self, int i, long long rest, int prev, std::uint64_t prod) -> void {
        if (rest == 0) {
            if (prod > best)
                best = prod;
            return;
        }
        if (i >= n)
            return;
        const long long top = std::min<long long>({n - i, prev, rest});
        for (long long c = top; c >= 1; --c)
            self(self, i + 1, rest - c, static_cast<int>(c), prod * static_cast<std::uint64_t>(c));
    };
    rec(rec, 1, m, n, 1);
    return BigCount(static_cast<unsigned long>(best));
}

BigCount pi_saturated(int n, long long m)
{
    if (n < 1 || m < 0)
        throw DomainError("Pi(n,m) needs n >= 1 and m >= 0");
    if (m >= choose2(n))
        return factorial(static_cast<unsigned>(n - 1));
    if (m < 2)
        return 1;
    return pi_max_product(n, m).value;
}

BigCount edge_bound(int n, long long m, int g, EdgeBoundForm form)
{
    if (n < 3)
        throw DomainError("edge bound needs n >= 3");
    if (g < 3)
        throw DomainError("edge bound needs girth g >= 3");
    if (m < 2 || m > choose2(n))
        throw DomainError("edge bound needs 2 <= m <= C(n,2)");
    const int rows = form == EdgeBoundForm::reduced ? n - 1 : n;
    BigCount num = pi_saturated(rows, m) * n * n;
    BigCount q;
    mpz_fdiv_q_ui(q.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(2 * g));
    return q;
}

long double alpha(long double n, long double m)
{
    const long double disc = 1 - 1 / n - 2 * (m + 1) / (n * n);
    if (disc < 0)
        throw DomainError("alpha: 1 - 1/n - 2(m+1)/n^2 is negative");
    return 1 - std::sqrt(disc);
}

long double alpha_threshold()
{
    // a - ln a decreases on (0,1); bisect for the value 1 + ln 2.
    long double lo = 1e-6L, hi = 1;
    const long double target = 1 + ln2;
    for (int it = 0; it < 200; ++it) {
        const long double mid = (lo + hi) / 2;
        if (mid - std::log(mid) > target)
            lo = mid;
        else
            hi = mid;
    }
    return (lo + hi) / 2;
}

long double alpha_density_threshold()
{
    const long double a = alpha_threshold();
    return 1 - (1 - a) * (1 - a);
}

LogBound edge_bound_log_real(long double n, long double m, int g)
{
    if (g < 3)
        throw DomainError("edge bound needs girth g >= 3");
    if (!(m > 3 * n - 7 && m < n * (n - 1) / 2))
        throw RegimeError("log edge bound holds only for 3n-7 < m < C(n,2)");
    const long double a = alpha(n, m);
    const long double v = n * std::log(n) - (a - std::log(a)) * n + 2.5L * std::log(n) + 0.5L * std::log(a)
        + 0.5L * std::log(pi_ld / 2) - std::log(static_cast<long double>(g)) + 1 / (12 * a * n);
    return {v, Sense::upper};
}

LogBound edge_bound_log(int n, long long m, int g)
{
    return edge_bound_log_real(n, static_cast<long double>(m), g);
}

BigCount hmorph_bound(int n, int p, int q, int g)
{
    if (n < 1 || p < 1 || q < 1)
        throw DomainError("homomorphism bound needs n, p, q >= 1");
    if (g < 3)
        throw DomainError("homomorphism bound needs girth g >= 3");
    if (n % p != 0)
        throw DomainError("homomorphism bound needs p to divide n");
    BigCount part = factorial(static_cast<unsigned>(n / p));
    BigCount parts;
    mpz_pow_ui(parts.get_mpz_t(), part.get_mpz_t(), static_cast<unsigned long>(p));
    BigCount num = power(static_cast<unsigned long>(q), static_cast<unsigned long>(n)) * parts * n;
    BigCount r;
    mpz_fdiv_q_ui(r.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(2 * g));
    return r;
}

LogBound hmorph_bound_log(long double n, int p, int q, int g)
{
    if (!(n > 0) || p < 1 || q < 1 || g < 3)
        throw DomainError("homomorphism log bound needs n > 0, p, q >= 1, g >= 3");
    const long double pl = p;
    const long double v = n * std::log(n) - (1 + std::log(pl / q)) * n + (1 + pl / 2) * std::log(n)
        + pl / 2 * std::log(2 * pi_ld / pl) - std::log(2.0L * g) + pl * pl / (12 * n);
    return {v, Sense::upper};
}

LogBound turan_log_lower(long double n, TuranConstant c)
{
    if (n < 4)
        throw DomainError("Turan log bound needs n >= 4");
    const long double k = c == TuranConstant::ln_pi ? std::log(pi_ld) : published_turan_constant;
    return {n * std::log(n) - (1 + ln2) * n + k, Sense::lower};
}

}
