#include "ramf/mock.hpp"

#include "ramf/forms.hpp"
#include "ramf/hecke.hpp"

#include <numeric>

namespace ramf {
namespace mock {

MockSeries mock_series(long N) {
    if (N < 1) throw error("mock_series: truncation must be >= 1");
    long M = std::max(N, 4L);
    QLaurent d = qexact::delta(2 * M);
    QLaurent dp = qexact::delta_prime(2 * M);

    // constant term -11 2^11 alpha / 11! with alpha = a_0(psi_2)/(sigma_11(2) - lambda_2) sigma
    auto eig = hecke::eigen_data_from_form(d, 12, 4, "weight-12 cusp form");
    auto defect = hecke::eigen_defect(dp, eig, 2, 10);
    auto alpha = hecke::alpha_constant(eig, 2, defect.psi.at(0));
    Rat c0 = Rat(-11) * Rat(int_pow(2, 11)) * alpha.rational_part / Rat(factorial(11));

    MockSeries out;
    out.scale = factorial(11);
    out.truncation = N;
    out.terms[0] = {c0, Rat(0)};
    for (long n = -1; n <= N; ++n) {
        if (n == 0) continue;
        Rat inv = rat(-1) / rat_pow(rat(n), 11);
        Rat an = inv * dp.at(n);
        Rat bn = inv * d.at(n);
        if (an == 0 && bn == 0) continue;
        out.terms[n] = {an, bn};
    }
    return out;
}

static long inverse_mod(long d, long c) {
    long t = 0, newt = 1, r = c, newr = d % c;
    if (newr < 0) newr += c;
    while (newr != 0) {
        long q = r / newr;
        t -= q * newt;
        std::swap(t, newt);
        r -= q * newr;
        std::swap(r, newr);
    }
    if (r != 1) throw error("inverse_mod: not a unit");
    return ((t % c) + c) % c;
}

Real kloosterman(long m, long n, long c) {
    if (c < 1) throw error("kloosterman: modulus must be >= 1");
    if (c == 1) return Real(1);  // empty phase at the single residue
    Real re = 0, im = 0;
    Real two_pi = 2 * pi_real();
    for (long d = 0; d < c; ++d) {
        if (std::gcd(d, c) != 1) continue;
        long dbar = inverse_mod(d, c);
        long phase = ((m % c) * d + (n % c) * dbar) % c;
        if (phase < 0) phase += c;
        Real arg = two_pi * Real(phase) / Real(c);
        re += cos(arg);
        im += sin(arg);
    }
    Real tol = real_pow_int(Real(10), -static_cast<long>(precision()) + 10);
    if (abs(im) > tol * (abs(re) + 1))
        throw error("kloosterman: sum failed the reality check");
    return re;
}

Real bessel_i(int nu, const Real& x) {
    if (nu < 0) throw error("bessel_i: order must be >= 0");
    if (x < 0) throw error("bessel_i: argument must be >= 0");
    if (x == 0) return nu == 0 ? Real(1) : Real(0);
    Real half = x / 2;
    Real term = real_pow_int(half, nu) / real_from(factorial(nu));
    Real sum = term;
    Real x2 = half * half;
    Real eps = real_pow_int(Real(10), -static_cast<long>(precision()) - 5);
    for (long k = 1; k < 10000; ++k) {
        term *= x2 / (Real(k) * Real(k + nu));
        sum += term;
        if (term < eps * sum) return sum;
    }
    throw error("bessel_i: series did not converge");
}

CorollaryCheck verify_corollary(long n, long c_max, const Real& rho,
                                const QLaurent& delta, const QLaurent& delta_prime,
                                const Real& rel_tol) {
    if (n < 1) throw error("verify_corollary: n must be >= 1");
    if (!delta.known(n) || !delta_prime.known(n))
        throw error("verify_corollary: series truncation below n");

    Real rhs = real_from(delta_prime.at(n)) + rho * real_from(delta.at(n));

    // tail bound from |K| <= c and I_11(x) <= (x/2)^11/11! e^{x^2/4}
    Real xs = 2 * pi_real() * sqrt(Real(n));  // = (4 pi sqrt n)/c at c = 2, halved once more below
    Real xmax = 2 * xs / Real(c_max);
    Real tail = 2 * pi_real() * real_pow_int(sqrt(Real(n)), 11) * exp(xmax * xmax / 4) *
                real_pow_int(xs, 11) / real_from(factorial(11)) /
                (10 * real_pow_int(Real(c_max), 10));
    if (!(tail <= rel_tol * abs(rhs) / 10))
        throw error("verify_corollary: tail bound not satisfiable at the configured c_max");

    Real sum = 0;
    Real fourpi_sqrtn = 4 * pi_real() * sqrt(Real(n));
    for (long c = 1; c <= c_max; ++c) {
        Real K = kloosterman(-1, n, c);
        Real phi_bound = Real(c);
        if (abs(K) > phi_bound + real_pow_int(Real(10), -20))
            throw error("verify_corollary: Kloosterman sum exceeds the trivial bound");
        if (K == 0) continue;
        sum += K / Real(c) * bessel_i(11, fourpi_sqrtn / Real(c));
    }
    Real lhs = 2 * pi_real() * real_pow_int(sqrt(Real(n)), 11) * sum;
    Real rel = abs(lhs - rhs) / abs(rhs);
    return {lhs, rhs, rel};
}

} // namespace mock
} // namespace ramf
