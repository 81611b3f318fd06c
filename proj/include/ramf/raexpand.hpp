#ifndef RAMF_RAEXPAND_HPP
#define RAMF_RAEXPAND_HPP

#include "ramf/numeric.hpp"
#include "ramf/qlaurent.hpp"
#include "ramf/vnpoly.hpp"

#include <map>

namespace ramf {
namespace ra {

/// Exact Q-linear combination over the period symbol basis {1, sigma, tau,
/// alpha^, zeta^}.  The pipeline is linear in the symbols: a product of two
/// non-rational scalars is an error.
struct PeriodScalar {
    Rat one, sigma, tau, alpha, zeta;

    PeriodScalar() = default;
    explicit PeriodScalar(Rat c) : one(std::move(c)) {}

    static PeriodScalar sym_sigma(Rat c = Rat(1));
    static PeriodScalar sym_tau(Rat c = Rat(1));
    static PeriodScalar sym_alpha(Rat c = Rat(1));
    static PeriodScalar sym_zeta(Rat c = Rat(1));

    bool is_zero() const;
    bool is_rational() const;  // only the unit coordinate may be nonzero

    PeriodScalar& operator+=(const PeriodScalar& o);
    PeriodScalar& operator-=(const PeriodScalar& o);
    PeriodScalar& operator*=(const Rat& c);
    PeriodScalar operator*(const PeriodScalar& o) const;  // one side must be rational
    PeriodScalar operator-() const;
    friend PeriodScalar operator+(PeriodScalar a, const PeriodScalar& b) { return a += b; }
    friend PeriodScalar operator-(PeriodScalar a, const PeriodScalar& b) { return a -= b; }
    friend PeriodScalar operator*(const Rat& c, PeriodScalar a) { return a *= c; }
    friend bool operator==(const PeriodScalar&, const PeriodScalar&) = default;

    /// Substitute alpha^ -> c sigma (the exact value computed by the Hecke
    /// pipeline); all other coordinates unchanged.
    PeriodScalar resolve_alpha(const Rat& sigma_multiple) const;
};

struct SymbolValues {
    Real sigma, tau, alpha, zeta;
};

Real numeric_value(const PeriodScalar& c, const SymbolValues& v);

struct TermKey {
    long k, m, n;  // L^k q^m qbar^n
    auto operator<=>(const TermKey&) const = default;
};

/// Finite sum over k of L^k times a truncated bivariate Laurent polynomial in
/// q, qbar with PeriodScalar coefficients, modular of declared weights (r,s).
/// Exponents m,n are known through the truncation; poles are stored in full.
class BiExpansion {
public:
    BiExpansion(int r, int s, long trunc) : r_(r), s_(s), trunc_(trunc) {}

    int r() const { return r_; }
    int s() const { return s_; }
    long trunc() const { return trunc_; }

    void add_term(long k, long m, long n, const PeriodScalar& c);
    const std::map<TermKey, PeriodScalar>& terms() const { return t_; }

    bool is_zero() const;
    void prune();

    BiExpansion operator-() const;
    friend BiExpansion operator+(const BiExpansion& a, const BiExpansion& b);
    friend BiExpansion operator-(const BiExpansion& a, const BiExpansion& b);
    friend BiExpansion operator*(const PeriodScalar& c, const BiExpansion& a);
    friend BiExpansion operator*(const Rat& c, const BiExpansion& a);

    /// Multiplication by L^j (weights drop by (j,j)).
    BiExpansion mul_L(long j) const;

    /// Equality of all stored data through the common truncation.
    friend bool operator==(const BiExpansion& a, const BiExpansion& b);

private:
    int r_, s_;
    long trunc_;
    std::map<TermKey, PeriodScalar> t_;
};

// --- differential operators -------------------------------------------------

BiExpansion d_holo(const BiExpansion& F);   // del:    (r,s) -> (r+1, s-1)
BiExpansion d_anti(const BiExpansion& F);   // delbar: (r,s) -> (r-1, s+1)
BiExpansion laplacian(const BiExpansion& F);  // asserts both defining routes agree
BiExpansion op_h(const BiExpansion& F);     // (r-s) F
BiExpansion op_w(const BiExpansion& F);     // (r+s) F
BiExpansion op_D(const BiExpansion& F);     // q d/dq on expansions (D L = 1/2)

// --- Hecke ------------------------------------------------------------------

/// T_N by the coefficient formula
/// alpha^{(k)}_{mu,nu} = sum_{a|(N,mu,nu)} a^{w-1} (a^2/N)^k a^{(k)}_{mu N/a^2, nu N/a^2};
/// requires the support condition a^{(k)}_{m,n} = 0 whenever m = n != 0 mod d
/// for divisors d | N, d > 1 (checked).
BiExpansion hecke_ra(const BiExpansion& F, long N);

// --- constructions ----------------------------------------------------------

/// Embed a q-expansion at L^0 with weights (r,s).
BiExpansion from_qlaurent(const QLaurent& f, int r, int s);

BiExpansion conj_expansion(const BiExpansion& F);  // q <-> qbar, (r,s) <-> (s,r)

/// R_{r,s}(f) = (-1)^r C(n,r) sum_{k=s}^{n} C(r,k-s) (-1)^k k! L^{-k} f^{(k+1)},
/// with n = r+s and f of weight n+2.
BiExpansion build_R(const QLaurent& f, int r, int s, long N);

/// H(Delta)_{r,s} = a_0 L/(n+1) + alpha (-1)^r C(n,r) L^{-n} + R_{r,s}(Delta)
///                + conj(sigma R_{s,r}(Delta') + tau R_{s,r}(Delta)).
BiExpansion build_H(int r, int s, long N, const QLaurent& delta, const QLaurent& delta_prime,
                    const PeriodScalar& alpha);

/// E_{r,s} = -B_{w+2}/(2(w+1)(w+2)) L + (-1)^r C(w,r) (w!/2^{w+1}) zeta^ L^{-w}
///         + R_{r,s}(G_{w+2}) + conj R_{s,r}(G_{w+2}).
BiExpansion build_E(int r, int s, long N);

// --- numerics ---------------------------------------------------------------

struct EvalResult {
    Cplx value;
    Real tail_estimate;
};

EvalResult evaluate(const BiExpansion& F, const Cplx& z, const SymbolValues& v);

/// |F(gamma z) - (cz+d)^r (c zbar + d)^s F(z)|.
Real modularity_residual(const BiExpansion& F, const cocycle::Mat2& g, const Cplx& z,
                         const SymbolValues& v);

// --- verification -----------------------------------------------------------

/// (T_m - lambda_m/m) H_{r,s} = (1/m) L^{-n} (del^r/r! psi_m + delbar^s/s! conj phi_m)
/// for the Delta pipeline (psi_m = 0, phi_m = sigma (10!/2^11) p_m), exact
/// through q^depth for one (r,s).
bool hecke_inhomogeneous_holds(int r, int s, long m, long depth, const Rat& lambda_m,
                               const QLaurent& delta, const QLaurent& delta_prime,
                               const Rat& alpha_sigma_multiple, const QLaurent& p_m);

} // namespace ra
} // namespace ramf

#endif
