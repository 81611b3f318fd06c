#ifndef RAMF_MOCK_HPP
#define RAMF_MOCK_HPP

#include "ramf/numeric.hpp"
#include "ramf/qlaurent.hpp"

#include <map>

namespace ramf {
namespace mock {

/// The rescaled integral-weight mock modular form
///   M' = 11! ( q^{-1} - 65520/691 + sum_{n>=1} (a_n + b_n rho) q^n )
/// with exact pairs a_n + b_n rho; for n != 0 the coefficient is
/// -(a'_n + rho a_n(Delta)) / n^11.
struct MockSeries {
    std::map<long, std::pair<Rat, Rat>> terms;  // n -> (a_n, b_n), meaning a_n + b_n rho
    Int scale;                                  // the overall 11! factor
    long truncation = 0;
};

MockSeries mock_series(long N);

/// Kloosterman sum K(m,n,c) = sum_{d mod c, (d,c)=1} e^{2 pi i (m d + n dbar)/c}.
/// The sum is real (d <-> -d); the imaginary part is checked and discarded.
Real kloosterman(long m, long n, long c);

/// Modified Bessel function of the first kind by the ascending series.
Real bessel_i(int nu, const Real& x);

struct CorollaryCheck {
    Real lhs, rhs, rel_err;
};

/// 2 pi n^{11/2} sum_{c<=c_max} K(-1,n,c)/c I_11(4 pi sqrt(n)/c) against
/// a'_n + rho a_n.  Errors if the c-tail bound cannot meet rel_tol.
CorollaryCheck verify_corollary(long n, long c_max, const Real& rho,
                                const QLaurent& delta, const QLaurent& delta_prime,
                                const Real& rel_tol);

} // namespace mock
} // namespace ramf

#endif
