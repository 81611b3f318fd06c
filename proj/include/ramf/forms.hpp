#ifndef RAMF_FORMS_HPP
#define RAMF_FORMS_HPP

#include "ramf/qlaurent.hpp"

namespace ramf {
namespace qexact {

/// Hecke-normalised Eisenstein series of weight 2k:
/// G_{2k} = -B_{2k}/4k + sum_{n>=1} sigma_{2k-1}(n) q^n, truncated at q^N.
QLaurent eisenstein(long k, long N);

/// Classical normalisations E_4 = 1 + 240 sum sigma_3 q^n, E_6 = 1 - 504 sum sigma_5 q^n.
QLaurent e4(long N);
QLaurent e6(long N);

/// Ramanujan Delta = q prod (1-q^n)^24, built from the eta product.
QLaurent delta(long N);
/// Independent construction (E_4^3 - E_6^2)/1728, kept as an internal oracle.
QLaurent delta_from_e4e6(long N);

/// j = E_4^3 / Delta, valuation -1 with leading coefficient 1.
QLaurent j_invariant(long N);

/// The unique weight-12 form q^{-1} + O(q^2) with a_0 = a_1 = 0,
/// constructed as Delta (j^2 + c_1 j + c_0) by an exact 2x2 solve.
QLaurent delta_prime(long N);

/// f^{(k)}: coefficient a_n goes to a_n/(2n)^k, constant term dropped.
QLaurent iterated_primitive(const QLaurent& f, long k);

/// Bol operator D^{n+1} on q-expansions: a_m -> m^{n+1} a_m.
/// f must be declared weight -n; the image has weight n+2.
QLaurent bol(const QLaurent& f, long n);

/// Inverse of bol: a_m -> a_m / m^{n+1}; requires a_0 = 0.
QLaurent bol_inverse(const QLaurent& g, long n);

/// Serre-duality pairing {f,g} = sum_k a_k(f) a_{-k}(g) / k^{n+1} for two
/// weight-(n+2) series.  Errors if the truncations do not cover the support.
Rat pairing(const QLaurent& f, const QLaurent& g, long n);

} // namespace qexact
} // namespace ramf

#endif
