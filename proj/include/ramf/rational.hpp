#ifndef RAMF_RATIONAL_HPP
#define RAMF_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace ramf {

using Int = mpz_class;
using Rat = mpq_class;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// mpq_class(n, d) does not canonicalize; route all fraction literals here.
Rat rat(long num, long den = 1);
Rat rat(const Int& num, const Int& den);

Int binomial(long n, long k);
Int factorial(long n);
Int int_pow(long base, long exp);          // exp >= 0
Rat rat_pow(const Rat& base, long exp);    // exp may be negative
Rat bernoulli(long n);                     // B_1 = -1/2 convention; cached
Int divisor_sigma(long k, long n);         // sum of d^k over d | n, for n >= 1

// floor division for possibly negative numerators, den > 0
long floor_div(long num, long den);

std::string rat_str(const Rat& q);         // "num" or "num/den"
Rat rat_parse(const std::string& s);

} // namespace ramf

#endif
