#ifndef RAMF_SVPERIODS_HPP
#define RAMF_SVPERIODS_HPP

#include "ramf/cocycle.hpp"

namespace ramf {
namespace sv {

using cocycle::PeriodMatrix;

/// conj(P)^{-1} P in the de Rham basis (f', f):
///   (i / det P) [[ eta+ omega- + omega+ eta-,  2 omega+ omega- ],
///                [ -2 eta+ eta-,             -(eta+ omega- + omega+ eta-) ]]
/// sigma = entry (1,2) and tau = entry (2,2) are the coefficients of f' and f
/// in s(f).  Entries are checked real and cross-checked against the numeric
/// 2x2 inverse route.
struct SvMatrix {
    Real m[2][2];
    PeriodMatrix provenance;
};

SvMatrix sv_matrix(const PeriodMatrix& P);

Real sigma_of(const SvMatrix& M);
Real tau_of(const SvMatrix& M);

/// rho = tau/sigma = -(eta+/omega+ + eta-/omega-)/2.
Real rho(const PeriodMatrix& P);

struct PeriodInvariants {
    Cplx det;        // eta+ . i omega- - omega+ . i eta-
    Real det_ratio;  // det / (10! (2 pi i)^11), checked real
    Cplx perm;       // i (eta+ omega- + omega+ eta-)
    Real petersson;  // -2 omega+ omega- / (2^11 (2 pi i)^22)
};

PeriodInvariants invariants_of_P(const PeriodMatrix& P);

} // namespace sv
} // namespace ramf

#endif
