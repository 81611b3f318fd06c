#include "ramf/svperiods.hpp"

namespace ramf {
namespace sv {

static const Real& real_tol() {
    static Real tol = pow(Real(10), -10);  // |Im|/|Re| bound for "real to tolerance"
    return tol;
}

static Real demand_real(const Cplx& z, const char* what) {
    if (abs(z.im) > real_tol() * abs(z.re))
        throw error(std::string("sv: nonreal value for ") + what);
    return z.re;
}

static Cplx det_P(const PeriodMatrix& P) {
    // det [[eta+, omega+], [i eta-, i omega-]]
    return Cplx(Real(0), P.eta_plus * P.omega_minus - P.omega_plus * P.eta_minus);
}

SvMatrix sv_matrix(const PeriodMatrix& P) {
    Cplx det = det_P(P);
    if (det.norm2() == 0) throw error("sv_matrix: singular period matrix");
    Cplx pref = Cplx(Real(0), Real(1)) / det;  // i / det
    Real A = P.eta_plus * P.omega_minus + P.omega_plus * P.eta_minus;

    SvMatrix M;
    M.provenance = P;
    M.m[0][0] = demand_real(A * pref, "entry (1,1)");
    M.m[0][1] = demand_real(2 * P.omega_plus * P.omega_minus * pref, "entry (1,2)");
    M.m[1][0] = demand_real(-2 * P.eta_plus * P.eta_minus * pref, "entry (2,1)");
    M.m[1][1] = demand_real(-A * pref, "entry (2,2)");

    // cross-check against the direct conj(P)^{-1} P route
    Cplx p11{P.eta_plus}, p12{P.omega_plus};
    Cplx p21{Real(0), P.eta_minus}, p22{Real(0), P.omega_minus};
    Cplx dbar = (p11.conj() * p22.conj()) - (p12.conj() * p21.conj());
    Cplx q11 = (p22.conj() * p11 - p12.conj() * p21) / dbar;
    Cplx q12 = (p22.conj() * p12 - p12.conj() * p22) / dbar;
    Cplx q21 = (p11.conj() * p21 - p21.conj() * p11) / dbar;
    Cplx q22 = (p11.conj() * p22 - p21.conj() * p12) / dbar;
    Real scale = abs(M.m[0][0]) + abs(M.m[1][0]) + 1;
    if ((q11 - Cplx(M.m[0][0])).abs() + (q12 - Cplx(M.m[0][1])).abs() +
            (q21 - Cplx(M.m[1][0])).abs() + (q22 - Cplx(M.m[1][1])).abs() >
        real_tol() * scale)
        throw error("sv_matrix: closed formula disagrees with the matrix route");
    return M;
}

Real sigma_of(const SvMatrix& M) { return M.m[0][1]; }
Real tau_of(const SvMatrix& M) { return M.m[1][1]; }

Real rho(const PeriodMatrix& P) {
    if (P.omega_plus == 0 || P.omega_minus == 0)
        throw error("rho: vanishing period omega+ or omega-");
    return -(P.eta_plus / P.omega_plus + P.eta_minus / P.omega_minus) / 2;
}

PeriodInvariants invariants_of_P(const PeriodMatrix& P) {
    PeriodInvariants I;
    I.det = det_P(P);
    Cplx two_pi_i{Real(0), 2 * pi_real()};
    Cplx ref = real_from(factorial(10)) * cpow(two_pi_i, 11);
    I.det_ratio = demand_real(I.det / ref, "det ratio");
    I.perm = Cplx(Real(0), P.eta_plus * P.omega_minus + P.omega_plus * P.eta_minus);
    Cplx pet = Cplx(Real(-2) * P.omega_plus * P.omega_minus) /
               (real_from(int_pow(2, 11)) * cpow(two_pi_i, 22));
    I.petersson = demand_real(pet, "petersson");
    return I;
}

} // namespace sv
} // namespace ramf
