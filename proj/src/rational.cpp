#include "ramf/rational.hpp"

#include <mutex>
#include <vector>

namespace ramf {

Rat rat(long num, long den) {
    if (den == 0) throw error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat rat(const Int& num, const Int& den) {
    if (den == 0) throw error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Int binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Int factorial(long n) {
    if (n < 0) throw error("factorial of negative integer");
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Int int_pow(long base, long exp) {
    if (exp < 0) throw error("int_pow with negative exponent");
    Int r, b(base);
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exp));
    return r;
}

Rat rat_pow(const Rat& base, long exp) {
    if (exp == 0) return rat(1);
    if (exp < 0) {
        if (base == 0) throw error("rat_pow: zero to a negative power");
        return rat(1) / rat_pow(base, -exp);
    }
    Rat acc = rat(1), b = base;
    long e = exp;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

Rat bernoulli(long n) {
    if (n < 0) throw error("bernoulli index negative");
    static std::mutex lock;
    static std::vector<Rat> cache;  // cache[m] = B_m
    std::lock_guard<std::mutex> guard(lock);
    if (cache.empty()) cache.push_back(rat(1));
    // B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j
    while (static_cast<long>(cache.size()) <= n) {
        long m = static_cast<long>(cache.size());
        Rat s = 0;
        for (long j = 0; j < m; ++j) s += Rat(binomial(m + 1, j)) * cache[j];
        cache.push_back(-s / Rat(m + 1));
    }
    return cache[n];
}

Int divisor_sigma(long k, long n) {
    if (n < 1) throw error("divisor_sigma requires n >= 1");
    Int s = 0;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) s += int_pow(d, k);
    return s;
}

long floor_div(long num, long den) {
    if (den <= 0) throw error("floor_div requires positive denominator");
    long q = num / den, r = num % den;
    return (r != 0 && num < 0) ? q - 1 : q;
}

std::string rat_str(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat rat_parse(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw error("malformed rational: " + s);
    q.canonicalize();
    return q;
}

} // namespace ramf
