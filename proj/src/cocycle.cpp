#include "ramf/cocycle.hpp"

#include <algorithm>

namespace ramf {
namespace cocycle {

QuadOptions::QuadOptions() {
    rel_tol = pow(Real(10), -static_cast<long>(precision()) + 8);
    y_min = Real(1) / 2;
    // absolute bound; q-series values along admissible paths are O(1)..O(10^3)
    tail_tol = pow(Real(10), -25);
}

// crude geometric tail bound |a_T| |q|^T / (1 - |q|) at the lowest point of the path
static Real series_tail_bound(const QLaurent& f, const Real& y_low) {
    if (f.is_zero()) return Real(0);
    Real qa = exp(-2 * pi_real() * y_low);
    Int num = abs(f.at(f.truncation()).get_num());
    Int den = f.at(f.truncation()).get_den();
    Real aT = real_from(num) / real_from(den);
    if (aT < 1) aT = 1;
    return aT * real_pow_int(qa, f.truncation()) / (1 - qa);
}

// f(tau) for the truncated series, Horner in q from the top exponent down
static Cplx eval_qseries(const QLaurent& f, const std::vector<Real>& num_coeffs,
                         const Cplx& tau) {
    Cplx q = cexp(Cplx(Real(0), 2 * pi_real()) * tau);
    Cplx acc;
    for (long e = f.truncation(); e >= f.valuation(); --e) {
        acc *= q;
        acc += Cplx(num_coeffs[static_cast<size_t>(e - f.valuation())]);
    }
    return acc * cpow(q, f.valuation());
}

VnPoly eichler_segment(const QLaurent& f, int n, const Cplx& from, const Cplx& to, int order) {
    std::vector<Real> coeffs;
    coeffs.reserve(static_cast<size_t>(f.truncation() - f.valuation() + 1));
    for (long e = f.valuation(); e <= f.truncation(); ++e) coeffs.push_back(real_from(f.at(e)));

    const auto& rule = gl_rule(order);
    Cplx half = Real(1) / 2 * (to - from);
    Cplx mid = Real(1) / 2 * (to + from);
    std::vector<Cplx> moments(static_cast<size_t>(n + 1));  // int f(tau) tau^j dtau
    for (const auto& [node, w] : rule) {
        Cplx tau = mid + node * half;
        Cplx fv = eval_qseries(f, coeffs, tau);
        Cplx tp{Real(1)};
        for (int j = 0; j <= n; ++j) {
            moments[static_cast<size_t>(j)] += w * fv * tp;
            tp *= tau;
        }
    }
    // (X - tau Y)^n = sum_j C(n,j) (-tau)^j X^{n-j} Y^j
    Cplx scale = cpow(Cplx(Real(0), 2 * pi_real()), n + 1) * half;
    VnPoly out(n);
    for (int j = 0; j <= n; ++j) {
        Real sign = (j % 2 == 0) ? 1 : -1;
        out.c[static_cast<size_t>(j)] =
            sign * real_from(binomial(n, j)) * scale * moments[static_cast<size_t>(j)];
    }
    return out;
}

VnPoly eichler_integral(const QLaurent& f, int n, const Cplx& from, const Cplx& to,
                        const QuadOptions& opt, Real* err_estimate) {
    Real y_low = from.im < to.im ? from.im : to.im;
    if (y_low < opt.y_min) throw error("eichler_integral: path below the configured height");
    Real tail = series_tail_bound(f, y_low);
    if (tail > opt.tail_tol)
        throw error("eichler_integral: series tail exceeds tolerance along this path");

    VnPoly prev = eichler_segment(f, n, from, to, opt.initial_order);
    for (int order = 2 * opt.initial_order; order <= opt.max_order; order *= 2) {
        VnPoly cur = eichler_segment(f, n, from, to, order);
        Real diff = (cur - prev).sup_norm();
        Real scale = cur.sup_norm();
        if (scale < 1) scale = 1;
        if (diff <= opt.rel_tol * scale) {
            if (err_estimate) *err_estimate = diff;
            return cur;
        }
        prev = cur;
    }
    throw error("eichler_integral: quadrature did not converge at the order cap");
}

// F is accumulated from the basepoint: F(tau) = int_{tau0}^{tau}; this
// orientation reproduces the reference period values for Delta.
static VnPoly cocycle_entry(const QLaurent& f, int n, const Cplx& tau0, const Cplx& z,
                            const Mat2& g, const QuadOptions& opt) {
    Cplx gz = moebius(g, z);
    VnPoly Fgz = eichler_integral(f, n, tau0, gz, opt);
    VnPoly Fz = eichler_integral(f, n, tau0, z, opt);
    return vn_act(Fgz, g) - Fz;
}

Cocycle cocycle_of_form(const QLaurent& f, int n, const Cplx& tau0, const Cplx& z_eval,
                        const QuadOptions& opt, const std::string& form_id) {
    if (n % 2 != 0) throw error("cocycle_of_form: degree must be even");
    Cocycle C;
    C.n = n;
    C.tau0 = tau0;
    C.form_id = form_id;
    C.C_S = cocycle_entry(f, n, tau0, z_eval, mat_S(), opt);
    C.C_T = cocycle_entry(f, n, tau0, z_eval, mat_T(), opt);

    // shift the probe upward so its S-image stays clear of the height floor
    Cplx z2 = z_eval + Cplx(Real(0), Real(1) / 4);
    VnPoly S2 = cocycle_entry(f, n, tau0, z2, mat_S(), opt);
    VnPoly T2 = cocycle_entry(f, n, tau0, z2, mat_T(), opt);

    Real scale = C.C_S.sup_norm() + C.C_T.sup_norm();
    if (scale < 1) scale = 1;
    // the consistency checks cannot resolve below the series truncation: floor
    // the tolerance by the tail propagated through the integral weights
    Real min_h = tau0.im;
    for (const Cplx& p : {z_eval, moebius(mat_S(), z_eval), z2, moebius(mat_S(), z2)})
        if (p.im < min_h) min_h = p.im;
    Real tail_floor = series_tail_bound(f, min_h) *
                      real_pow_int(2 * pi_real(), n + 1) * real_pow_int(Real(2), n + 2);
    Real check_tol = pow(Real(10), -static_cast<long>(precision()) + 15) * scale + tail_floor;

    // the value must not depend on the evaluation point
    if ((S2 - C.C_S).sup_norm() > check_tol || (T2 - C.C_T).sup_norm() > check_tol)
        throw error("cocycle_of_form: cocycle depends on the evaluation point "
                    "(raise precision or truncation)");

    // S^2 = -id acts trivially in even degree
    if ((vn_act(C.C_S, mat_S()) + C.C_S).sup_norm() > check_tol)
        throw error("cocycle_of_form: S-cocycle relation violated");
    // (ST)^3 = -id: assemble C_{ST} = C_S|_T + C_T
    Mat2 ST = mat_S() * mat_T();
    VnPoly CST = vn_act(C.C_S, mat_T()) + C.C_T;
    VnPoly rel = vn_act(CST, ST * ST) + vn_act(CST, ST) + CST;
    if (rel.sup_norm() > check_tol)
        throw error("cocycle_of_form: ST-cocycle relation violated");
    return C;
}

CocycleSolve solve_on_betti_basis(const Cocycle& C) {
    int n = C.n;
    auto [pp, pm] = period_polynomials_wt12();
    if (n != 10) throw error("solve_on_betti_basis: weight-12 period polynomials only");
    auto MS = vn_action_matrix(n, mat_S());
    auto MT = vn_action_matrix(n, mat_T());

    size_t rows = 2 * static_cast<size_t>(n + 1), cols = 2 + static_cast<size_t>(n + 1);
    std::vector<std::vector<Cplx>> A(rows, std::vector<Cplx>(cols));
    std::vector<Cplx> b(rows);
    for (int i = 0; i <= n; ++i) {
        size_t r1 = static_cast<size_t>(i), r2 = static_cast<size_t>(n + 1 + i);
        A[r1][0] = Cplx(real_from(pp[static_cast<size_t>(i)]));
        A[r1][1] = Cplx(real_from(pm[static_cast<size_t>(i)]));
        for (int j = 0; j <= n; ++j) {
            Rat dS = MS[i][j] - ((i == j) ? Rat(1) : Rat(0));
            Rat dT = MT[i][j] - ((i == j) ? Rat(1) : Rat(0));
            A[r1][2 + static_cast<size_t>(j)] = Cplx(real_from(dS));
            A[r2][2 + static_cast<size_t>(j)] = Cplx(real_from(dT));
        }
        b[r1] = C.C_S.c[static_cast<size_t>(i)];
        b[r2] = C.C_T.c[static_cast<size_t>(i)];
    }
    auto sol = least_squares(A, b);
    CocycleSolve out;
    out.c_plus = sol.x[0];
    out.c_minus = sol.x[1];
    out.Q.assign(sol.x.begin() + 2, sol.x.end());
    out.residual = sol.residual;
    return out;
}

static Real take_real(const Cplx& z, const Real& tol, const char* what) {
    Real mag = z.abs();
    if (mag > 0 && abs(z.im) > tol * mag)
        throw error(std::string("extract_periods: imaginary contamination in ") + what);
    return z.re;
}

PeriodMatrix extract_periods(const Cocycle& C_f, const Cocycle& C_fprime, const Real& tol) {
    CocycleSolve sf = solve_on_betti_basis(C_f);
    CocycleSolve sfp = solve_on_betti_basis(C_fprime);
    if (sf.residual > tol || sfp.residual > tol)
        throw error("extract_periods: least-squares residual above tolerance");

    Cplx mi{Real(0), Real(-1)};  // -i
    PeriodMatrix P;
    P.n = C_f.n;
    P.omega_plus = take_real(sf.c_plus, tol, "omega+");
    P.omega_minus = take_real(mi * sf.c_minus, tol, "omega-");
    P.eta_plus = take_real(sfp.c_plus, tol, "eta+");
    P.eta_minus = take_real(mi * sfp.c_minus, tol, "eta-");
    P.residual = sf.residual > sfp.residual ? sf.residual : sfp.residual;

    // det [[eta+, omega+],[i eta-, i omega-]] = 10! (2 pi i)^11
    Real det_im = P.eta_plus * P.omega_minus - P.omega_plus * P.eta_minus;
    Real ref = -real_from(factorial(10)) * real_pow_int(2 * pi_real(), 11);
    if (abs(det_im - ref) > real_pow_int(Real(10), -8) * abs(ref))
        throw error("extract_periods: determinant is not 10! (2 pi i)^11");
    return P;
}

} // namespace cocycle
} // namespace ramf
