#ifndef RAMF_COCYCLE_HPP
#define RAMF_COCYCLE_HPP

#include "ramf/qlaurent.hpp"
#include "ramf/vnpoly.hpp"

namespace ramf {
namespace cocycle {

struct QuadOptions {
    int initial_order = 16;
    int max_order = 1024;
    Real rel_tol;        // agreement between successive orders
    Real y_min;          // straight paths must stay above this height
    Real tail_tol;       // bound on the truncated-series tail along the path

    QuadOptions();       // defaults tied to the current precision
};

/// F contribution of a straight segment:
///   int_{from}^{to} (2 pi i)^{n+1} f(tau) (X - tau Y)^n dtau
/// by Gauss-Legendre quadrature of the truncated series at a fixed order.
VnPoly eichler_segment(const QLaurent& f, int n, const Cplx& from, const Cplx& to, int order);

/// Same with order doubling until two successive orders agree to rel_tol.
/// Errors: path below y_min, series tail too large, no convergence at max_order.
VnPoly eichler_integral(const QLaurent& f, int n, const Cplx& from, const Cplx& to,
                        const QuadOptions& opt, Real* err_estimate = nullptr);

struct Cocycle {
    int n = 0;
    VnPoly C_S, C_T;
    Cplx tau0;
    std::string form_id;
};

/// Cocycle of a weakly holomorphic form from the Eichler integrals
/// C_gamma = F_f(gamma z)|_gamma - F_f(z) with basepoint tau0.
/// Validates independence of z (recomputation at z + 1/2) and the cocycle
/// relations for S and ST.
Cocycle cocycle_of_form(const QLaurent& f, int n, const Cplx& tau0, const Cplx& z_eval,
                        const QuadOptions& opt, const std::string& form_id);

struct PeriodMatrix {
    Real omega_plus, omega_minus, eta_plus, eta_minus;
    int n = 10;
    Real residual;  // worst least-squares residual of the two solves
};

/// Solve C_gamma = c+ P+_gamma + c- P-_gamma + Q|_{gamma - id} for gamma in
/// {S, T} (22 equations, 13 unknowns) for the Delta and Delta' cocycles, and
/// read off (omega+, omega-), (eta+, eta-) with c- = i omega- etc.
PeriodMatrix extract_periods(const Cocycle& C_f, const Cocycle& C_fprime, const Real& tol);

/// Coefficients of one cocycle on the Betti basis; exposed for tests.
struct CocycleSolve {
    Cplx c_plus, c_minus;
    std::vector<Cplx> Q;
    Real residual;
};
CocycleSolve solve_on_betti_basis(const Cocycle& C);

} // namespace cocycle
} // namespace ramf

#endif
