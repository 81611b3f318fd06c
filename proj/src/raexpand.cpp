#include "ramf/raexpand.hpp"

#include "ramf/forms.hpp"

#include <algorithm>

namespace ramf {
namespace ra {

PeriodScalar PeriodScalar::sym_sigma(Rat c) { PeriodScalar p; p.sigma = std::move(c); return p; }
PeriodScalar PeriodScalar::sym_tau(Rat c) { PeriodScalar p; p.tau = std::move(c); return p; }
PeriodScalar PeriodScalar::sym_alpha(Rat c) { PeriodScalar p; p.alpha = std::move(c); return p; }
PeriodScalar PeriodScalar::sym_zeta(Rat c) { PeriodScalar p; p.zeta = std::move(c); return p; }

bool PeriodScalar::is_zero() const {
    return one == 0 && sigma == 0 && tau == 0 && alpha == 0 && zeta == 0;
}

bool PeriodScalar::is_rational() const {
    return sigma == 0 && tau == 0 && alpha == 0 && zeta == 0;
}

PeriodScalar& PeriodScalar::operator+=(const PeriodScalar& o) {
    one += o.one; sigma += o.sigma; tau += o.tau; alpha += o.alpha; zeta += o.zeta;
    return *this;
}

PeriodScalar& PeriodScalar::operator-=(const PeriodScalar& o) {
    one -= o.one; sigma -= o.sigma; tau -= o.tau; alpha -= o.alpha; zeta -= o.zeta;
    return *this;
}

PeriodScalar& PeriodScalar::operator*=(const Rat& c) {
    one *= c; sigma *= c; tau *= c; alpha *= c; zeta *= c;
    return *this;
}

PeriodScalar PeriodScalar::operator*(const PeriodScalar& o) const {
    if (is_rational()) { PeriodScalar r = o; r *= one; return r; }
    if (o.is_rational()) { PeriodScalar r = *this; r *= o.one; return r; }
    throw error("PeriodScalar: product of two period symbols is not defined");
}

PeriodScalar PeriodScalar::operator-() const {
    PeriodScalar r = *this;
    r *= Rat(-1);
    return r;
}

PeriodScalar PeriodScalar::resolve_alpha(const Rat& sigma_multiple) const {
    PeriodScalar r = *this;
    r.sigma += r.alpha * sigma_multiple;
    r.alpha = 0;
    return r;
}

Real numeric_value(const PeriodScalar& c, const SymbolValues& v) {
    return real_from(c.one) + real_from(c.sigma) * v.sigma + real_from(c.tau) * v.tau +
           real_from(c.alpha) * v.alpha + real_from(c.zeta) * v.zeta;
}

void BiExpansion::add_term(long k, long m, long n, const PeriodScalar& c) {
    if (c.is_zero()) return;
    if (m > trunc_ || n > trunc_) throw error("BiExpansion: term beyond truncation");
    t_[TermKey{k, m, n}] += c;
}

bool BiExpansion::is_zero() const {
    for (const auto& [key, c] : t_)
        if (!c.is_zero()) return false;
    return true;
}

void BiExpansion::prune() {
    for (auto it = t_.begin(); it != t_.end();)
        it = it->second.is_zero() ? t_.erase(it) : std::next(it);
}

BiExpansion BiExpansion::operator-() const {
    BiExpansion r(r_, s_, trunc_);
    for (const auto& [key, c] : t_) r.t_[key] = -c;
    return r;
}

BiExpansion operator+(const BiExpansion& a, const BiExpansion& b) {
    if (a.r_ != b.r_ || a.s_ != b.s_) throw error("BiExpansion: weight mismatch in addition");
    BiExpansion r(a.r_, a.s_, std::min(a.trunc_, b.trunc_));
    for (const auto& [key, c] : a.t_)
        if (key.m <= r.trunc_ && key.n <= r.trunc_) r.t_[key] += c;
    for (const auto& [key, c] : b.t_)
        if (key.m <= r.trunc_ && key.n <= r.trunc_) r.t_[key] += c;
    r.prune();
    return r;
}

BiExpansion operator-(const BiExpansion& a, const BiExpansion& b) { return a + (-b); }

BiExpansion operator*(const PeriodScalar& c, const BiExpansion& a) {
    BiExpansion r(a.r_, a.s_, a.trunc_);
    for (const auto& [key, x] : a.t_) {
        PeriodScalar p = c * x;
        if (!p.is_zero()) r.t_[key] = p;
    }
    return r;
}

BiExpansion operator*(const Rat& c, const BiExpansion& a) {
    return PeriodScalar(c) * a;
}

BiExpansion BiExpansion::mul_L(long j) const {
    BiExpansion r(r_ - static_cast<int>(j), s_ - static_cast<int>(j), trunc_);
    for (const auto& [key, c] : t_) r.t_[TermKey{key.k + j, key.m, key.n}] = c;
    return r;
}

bool operator==(const BiExpansion& a, const BiExpansion& b) {
    if (a.r_ != b.r_ || a.s_ != b.s_) return false;
    BiExpansion d = a - b;
    return d.is_zero();
}

// --- differential operators -------------------------------------------------

BiExpansion d_holo(const BiExpansion& F) {
    BiExpansion G(F.r() + 1, F.s() - 1, F.trunc());
    for (const auto& [key, c] : F.terms()) {
        // del_r L^k q^m qbar^n = (2m L + r + k) L^k q^m qbar^n
        if (key.m != 0) G.add_term(key.k + 1, key.m, key.n, Rat(2 * key.m) * c);
        Rat lin(F.r() + key.k);
        if (lin != 0) G.add_term(key.k, key.m, key.n, lin * c);
    }
    G.prune();
    return G;
}

BiExpansion d_anti(const BiExpansion& F) {
    BiExpansion G(F.r() - 1, F.s() + 1, F.trunc());
    for (const auto& [key, c] : F.terms()) {
        if (key.n != 0) G.add_term(key.k + 1, key.m, key.n, Rat(2 * key.n) * c);
        Rat lin(F.s() + key.k);
        if (lin != 0) G.add_term(key.k, key.m, key.n, lin * c);
    }
    G.prune();
    return G;
}

BiExpansion laplacian(const BiExpansion& F) {
    Rat c1(F.r() * (F.s() - 1)), c2(F.s() * (F.r() - 1));
    BiExpansion route1 = -d_anti(d_holo(F)) + c1 * F;
    BiExpansion route2 = -d_holo(d_anti(F)) + c2 * F;
    if (!(route1 == route2)) throw error("laplacian: the two defining routes disagree");
    return route1;
}

BiExpansion op_h(const BiExpansion& F) { return Rat(F.r() - F.s()) * F; }
BiExpansion op_w(const BiExpansion& F) { return Rat(F.r() + F.s()) * F; }

// q d/dq on expansions: q^m -> m q^m and D L = 1/2.  Carries bidegree (2,0),
// the grading under which D^{n+1} maps weights (-n,s) to (n+2,s).
BiExpansion op_D(const BiExpansion& F) {
    BiExpansion G(F.r() + 2, F.s(), F.trunc());
    for (const auto& [key, c] : F.terms()) {
        if (key.m != 0) G.add_term(key.k, key.m, key.n, Rat(key.m) * c);
        if (key.k != 0) G.add_term(key.k - 1, key.m, key.n, rat(key.k, 2) * c);
    }
    G.prune();
    return G;
}

// --- Hecke ------------------------------------------------------------------

static long mod_pos(long x, long d) {
    long r = x % d;
    return r < 0 ? r + d : r;
}

BiExpansion hecke_ra(const BiExpansion& F, long N) {
    if (N < 1) throw error("hecke_ra: N must be >= 1");
    long w = F.r() + F.s();
    // support condition (no q^m qbar^n with m = n != 0 mod d surviving)
    for (const auto& [key, c] : F.terms()) {
        if (c.is_zero()) continue;
        for (long d = 2; d <= N; ++d) {
            if (N % d != 0) continue;
            long mm = mod_pos(key.m, d), nn = mod_pos(key.n, d);
            if (mm == nn && mm != 0)
                throw error("hecke_ra: expansion violates the Hecke support condition");
        }
    }
    long tout = floor_div(F.trunc(), N);
    BiExpansion G(F.r(), F.s(), tout);
    for (const auto& [key, c] : F.terms()) {
        for (long a = 1; a <= N; ++a) {
            if (N % a != 0) continue;
            long d = N / a;
            if (mod_pos(key.m, d) != 0 || mod_pos(key.n, d) != 0) continue;
            long mu = (key.m / d) * a, nu = (key.n / d) * a;
            if (mu > tout || nu > tout) continue;
            Rat factor = Rat(int_pow(a, w - 1)) * rat_pow(rat(a * a, N), key.k);
            G.add_term(key.k, mu, nu, factor * c);
        }
    }
    G.prune();
    return G;
}

// --- constructions ----------------------------------------------------------

BiExpansion from_qlaurent(const QLaurent& f, int r, int s) {
    BiExpansion F(r, s, f.truncation());
    for (long e = f.valuation(); e <= f.truncation(); ++e)
        if (f.at(e) != 0) F.add_term(0, e, 0, PeriodScalar(f.at(e)));
    return F;
}

BiExpansion conj_expansion(const BiExpansion& F) {
    BiExpansion G(F.s(), F.r(), F.trunc());
    for (const auto& [key, c] : F.terms()) G.add_term(key.k, key.n, key.m, c);
    return G;
}

BiExpansion build_R(const QLaurent& f, int r, int s, long N) {
    int n = r + s;
    if (f.weight() != n + 2) throw error("build_R: form weight must be r+s+2");
    if (!f.known(N)) throw error("build_R: series truncation below N");
    BiExpansion R(r, s, N);
    Rat outer = Rat(int_pow(-1, r)) * Rat(binomial(n, r));
    for (int k = s; k <= n; ++k) {
        Rat factor = outer * Rat(binomial(r, k - s)) * Rat(int_pow(-1, k)) * Rat(factorial(k));
        for (long e = f.valuation(); e <= N; ++e) {
            if (e == 0 || f.at(e) == 0) continue;
            // k! L^{-k} f^{(k+1)}: coefficient a_e / (2e)^{k+1}
            R.add_term(-k, e, 0, PeriodScalar(factor * f.at(e) / rat_pow(rat(2 * e), k + 1)));
        }
    }
    R.prune();
    return R;
}

BiExpansion build_H(int r, int s, long N, const QLaurent& delta, const QLaurent& delta_prime,
                    const PeriodScalar& alpha) {
    int n = r + s;
    if (n != 10) throw error("build_H: only the weight-12 eigenspace is built here");
    BiExpansion H(r, s, N);
    Rat a0 = delta.at(0);
    if (a0 != 0) H.add_term(1, 0, 0, PeriodScalar(a0 / Rat(n + 1)));
    H.add_term(-n, 0, 0, Rat(int_pow(-1, r) * binomial(n, r)) * alpha);
    H = H + build_R(delta, r, s, N);
    BiExpansion anti = PeriodScalar::sym_sigma() * build_R(delta_prime, s, r, N) +
                       PeriodScalar::sym_tau() * build_R(delta, s, r, N);
    H = H + conj_expansion(anti);
    H.prune();
    return H;
}

BiExpansion build_E(int r, int s, long N) {
    int w = r + s;
    if (w < 2 || w % 2 != 0) throw error("build_E: total weight must be even and >= 2");
    QLaurent G = qexact::eisenstein((w + 2) / 2, N);
    BiExpansion E(r, s, N);
    E.add_term(1, 0, 0, PeriodScalar(-bernoulli(w + 2) / Rat(2 * (w + 1) * (w + 2))));
    Rat zc = Rat(int_pow(-1, r) * binomial(w, r)) * Rat(factorial(w)) / Rat(int_pow(2, w + 1));
    E.add_term(-w, 0, 0, PeriodScalar::sym_zeta(zc));
    E = E + build_R(G, r, s, N);
    E = E + conj_expansion(build_R(G, s, r, N));
    E.prune();
    return E;
}

// --- numerics ---------------------------------------------------------------

EvalResult evaluate(const BiExpansion& F, const Cplx& z, const SymbolValues& v) {
    if (!(z.im > 0)) throw error("evaluate: point must lie in the upper half plane");
    Cplx q = cexp(Cplx(Real(0), 2 * pi_real()) * z);
    Real L = -2 * pi_real() * z.im;
    Cplx acc;
    Real maxc = 0;
    long kmin = 0, kmax = 0;
    for (const auto& [key, c] : F.terms()) {
        Real cv = numeric_value(c, v);
        if (abs(cv) > maxc) maxc = abs(cv);
        kmin = std::min(kmin, key.k);
        kmax = std::max(kmax, key.k);
        Cplx term = cpow(q, key.m) * cpow(q.conj(), key.n);
        acc += (cv * real_pow_int(L, key.k)) * term;
    }
    Real qa = q.abs();
    Real lmax = 1;
    for (long k = kmin; k <= kmax; ++k) {
        Real lp = abs(real_pow_int(L, k));
        if (lp > lmax) lmax = lp;
    }
    Real tail = maxc * lmax * real_pow_int(qa, F.trunc() + 1) / (1 - qa) * 2;
    return {acc, tail};
}

Real modularity_residual(const BiExpansion& F, const cocycle::Mat2& g, const Cplx& z,
                         const SymbolValues& v) {
    Cplx gz = cocycle::moebius(g, z);
    Cplx j1 = cpow(Real(g.c) * z + Cplx(Real(g.d)), F.r());
    Cplx j2 = cpow(Real(g.c) * z.conj() + Cplx(Real(g.d)), F.s());
    Cplx lhs = evaluate(F, gz, v).value;
    Cplx rhs = j1 * j2 * evaluate(F, z, v).value;
    return (lhs - rhs).abs();
}

// --- verification -----------------------------------------------------------

bool hecke_inhomogeneous_holds(int r, int s, long m, long depth, const Rat& lambda_m,
                               const QLaurent& delta, const QLaurent& delta_prime,
                               const Rat& alpha_sigma_multiple, const QLaurent& p_m) {
    int n = r + s;
    PeriodScalar alpha = PeriodScalar::sym_sigma(alpha_sigma_multiple);

    BiExpansion H_wide = build_H(r, s, m * depth, delta, delta_prime, alpha);
    BiExpansion lhs = hecke_ra(H_wide, m) - rat(1) / Rat(m) * lambda_m *
                      build_H(r, s, depth, delta, delta_prime, alpha);

    // psi_m = 0 for Delta; phi_m = sigma (10!/2^11) p_m, holomorphic of weight -n
    Rat norm = Rat(factorial(n)) / Rat(int_pow(2, n + 1));
    BiExpansion phi = PeriodScalar::sym_sigma(norm) * from_qlaurent(p_m.truncated(depth), -n, 0);
    BiExpansion rhs = conj_expansion(phi);
    for (int i = 0; i < s; ++i) rhs = d_anti(rhs);
    rhs = (rat(1, m) / Rat(factorial(s))) * rhs.mul_L(-n);

    return lhs == rhs;
}

} // namespace ra
} // namespace ramf
