#include <doctest.h>

#include "ramf/forms.hpp"
#include "ramf/hecke.hpp"
#include "ramf/raexpand.hpp"

#include <random>

using namespace ramf;
using namespace ramf::ra;

namespace {

Real tiny(int e) { return real_pow_int(Real(10), e); }

BiExpansion random_expansion(std::mt19937& rng, int r, int s, long trunc, int nterms) {
    std::uniform_int_distribution<long> kd(-4, 4), ed(-2, 6), num(-9, 9), den(1, 4);
    std::uniform_int_distribution<int> sym(0, 5);
    BiExpansion F(r, s, trunc);
    for (int i = 0; i < nterms; ++i) {
        Rat c = rat(num(rng), den(rng));
        if (c == 0) continue;
        PeriodScalar p;
        switch (sym(rng)) {
            case 0: p = PeriodScalar::sym_sigma(c); break;
            case 1: p = PeriodScalar::sym_tau(c); break;
            case 2: p = PeriodScalar::sym_zeta(c); break;
            default: p = PeriodScalar(c); break;
        }
        F.add_term(kd(rng), ed(rng), ed(rng), p);
    }
    return F;
}

} // namespace

TEST_CASE("period scalars") {
    PeriodScalar a = PeriodScalar::sym_sigma(rat(2)) + PeriodScalar(rat(1, 3));
    PeriodScalar b = PeriodScalar(rat(6));
    PeriodScalar ab = a * b;
    CHECK(ab.sigma == 12);
    CHECK(ab.one == 2);
    CHECK_THROWS_AS(a * PeriodScalar::sym_tau(), error);

    PeriodScalar r = PeriodScalar::sym_alpha(rat(5)).resolve_alpha(rat(3, 7));
    CHECK(r.alpha == 0);
    CHECK(r.sigma == rat(15, 7));

    SymbolValues v{Real(2), Real(3), Real(5), Real(7)};
    CHECK(abs(numeric_value(a, v) - (Real(4) + Real(1) / 3)) < tiny(-40));
}

TEST_CASE("derivation action on monomials") {
    for (int r : {0, 3, 10})
        for (int s : {0, 2}) {
            BiExpansion L(r, s, 5);
            L.add_term(1, 0, 0, PeriodScalar(rat(1)));
            BiExpansion dL = d_holo(L);
            BiExpansion expect(r + 1, s - 1, 5);
            expect.add_term(1, 0, 0, PeriodScalar(rat(r + 1)));
            CHECK(dL == expect);

            BiExpansion aL = d_anti(L);
            BiExpansion aexpect(r - 1, s + 1, 5);
            aexpect.add_term(1, 0, 0, PeriodScalar(rat(s + 1)));
            CHECK(aL == aexpect);
        }

    // Laplacian of a bare L^k at weights (r,s): -k(r+s+k-1) L^k
    BiExpansion F(3, 4, 5);
    F.add_term(-2, 0, 0, PeriodScalar(rat(1)));
    BiExpansion lap = laplacian(F);
    BiExpansion expect(3, 4, 5);
    expect.add_term(-2, 0, 0, PeriodScalar(rat(2 * (3 + 4 - 2 - 1))));
    CHECK(lap == expect);
}

TEST_CASE("sl2 relations on random expansions") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> wd(-6, 8);
    for (int i = 0; i < 12; ++i) {
        BiExpansion F = random_expansion(rng, wd(rng), wd(rng), 8, 12);
        Rat h(F.r() - F.s());
        CHECK(d_holo(d_anti(F)) - d_anti(d_holo(F)) == h * F);
        CHECK(op_h(d_holo(F)) - d_holo(op_h(F)) == Rat(2) * d_holo(F));
        CHECK(op_h(d_anti(F)) - d_anti(op_h(F)) == Rat(-2) * d_anti(F));
        CHECK(d_holo(F.mul_L(1)) == d_holo(F).mul_L(1));
        CHECK(d_anti(F.mul_L(1)) == d_anti(F).mul_L(1));
        CHECK(d_holo(laplacian(F)) == laplacian(d_holo(F)));
        CHECK(d_anti(laplacian(F)) == laplacian(d_anti(F)));
        CHECK(laplacian(F).mul_L(1) - laplacian(F.mul_L(1)) == op_w(F.mul_L(1)));
    }
}

TEST_CASE("Bol identity and kernels") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> wd(-6, 8);
    for (int i = 0; i < 6; ++i) {
        BiExpansion F = random_expansion(rng, -10, wd(rng), 8, 10);
        BiExpansion lhs = F;
        for (int j = 0; j < 11; ++j) lhs = rat(1, 2) * d_holo(lhs).mul_L(-1);
        BiExpansion rhs = F;
        for (int j = 0; j < 11; ++j) rhs = op_D(rhs);
        CHECK(lhs == rhs);
    }

    // ker del at weights (r,s) contains L^{-r} (antiholomorphic series)
    for (int r : {-3, 0, 5}) {
        BiExpansion F(r, 4, 6);
        for (long n = -1; n <= 6; ++n) F.add_term(-r, 0, n, PeriodScalar(rat(n + 2)));
        CHECK(d_holo(F).is_zero());
    }
}

TEST_CASE("the R ansatz") {
    long N = 20;
    QLaurent d = qexact::delta(N);
    // R_{0,n} = (-1)^n n! L^{-n} f^{(n+1)}
    BiExpansion R0 = build_R(d, 0, 10, N);
    BiExpansion expect(0, 10, N);
    QLaurent f11 = qexact::iterated_primitive(d, 11);
    for (long e = 1; e <= N; ++e)
        expect.add_term(-10, e, 0, PeriodScalar(Rat(factorial(10)) * f11.at(e)));
    CHECK(R0 == expect);

    // del R_{n,0} = (-1)^n L f^{(0)}
    BiExpansion Rn = build_R(d, 10, 0, N);
    BiExpansion boundary = from_qlaurent(qexact::iterated_primitive(d, 0), 12, 0).mul_L(1);
    CHECK(d_holo(Rn) == boundary);

    // delbar R_{0,n} = 0
    CHECK(d_anti(R0).is_zero());
}

TEST_CASE("the real analytic cusp forms") {
    long N = 20;
    QLaurent d = qexact::delta(N), dp = qexact::delta_prime(N);
    PeriodScalar alpha = PeriodScalar::sym_alpha();
    BiExpansion H = build_H(10, 0, N, d, dp, alpha);

    CHECK(d_holo(H) == from_qlaurent(d, 12, 0).mul_L(1));

    BiExpansion H0 = build_H(0, 10, N, d, dp, alpha);
    BiExpansion sf = PeriodScalar::sym_sigma() * from_qlaurent(dp, 12, 0) +
                     PeriodScalar::sym_tau() * from_qlaurent(d, 12, 0);
    CHECK(d_anti(H0) == conj_expansion(sf).mul_L(1));

    // constant part: alpha (-1)^r C(10,r) L^{-10} and nothing else
    for (int r : {0, 3, 10}) {
        BiExpansion Hr = build_H(r, 10 - r, N, d, dp, alpha);
        Rat want = Rat(int_pow(-1, r) * binomial(10, r));
        int constants = 0;
        for (const auto& [key, c] : Hr.terms()) {
            if (key.m != 0 || key.n != 0) {
                // harmonic shape: holomorphic L-exponents in [-10,-s],
                // antiholomorphic in [-10,-r]
                if (key.n == 0) CHECK((-10 <= key.k && key.k <= -(10 - r)));
                if (key.m == 0) CHECK((-10 <= key.k && key.k <= -r));
                continue;
            }
            ++constants;
            CHECK(key.k == -10);
            CHECK(c.alpha == want);
            CHECK(c.one == 0);
        }
        CHECK(constants == 1);
    }
}

TEST_CASE("real analytic Eisenstein series") {
    long N = 16;
    for (int w : {2, 4, 6}) {
        BiExpansion E = build_E(w, 0, N);
        QLaurent g = qexact::eisenstein((w + 2) / 2, N);
        CHECK(d_holo(E) == from_qlaurent(g, w + 2, 0).mul_L(1));
        CHECK(d_holo(E.mul_L(-1)) == from_qlaurent(g, w + 2, 0));
    }
    // L-coefficient of E^0_{1,1} and its zeta slot
    BiExpansion E11 = build_E(1, 1, N);
    const PeriodScalar& lterm = E11.terms().at(TermKey{1, 0, 0});
    CHECK(lterm.one == -bernoulli(4) / Rat(24));
    const PeriodScalar& zterm = E11.terms().at(TermKey{-2, 0, 0});
    CHECK(zterm.zeta == rat(-1, 2));  // (-1)^1 C(2,1) 2!/2^3

    BiExpansion E13 = build_E(1, 3, N);
    CHECK(laplacian(E13) == Rat(-4) * E13);
}

TEST_CASE("conjugation") {
    long N = 12;
    QLaurent d = qexact::delta(N);
    BiExpansion R = build_R(d, 3, 7, N);
    BiExpansion cR = conj_expansion(R);
    for (const auto& [key, c] : cR.terms()) CHECK(key.m == 0);
    CHECK(conj_expansion(cR) == R);

    // conj E_{r,s} = E_{s,r}; the Eisenstein line carries the single-valued
    // eigenvalue -1, so both slots of E hold the same form G_{w+2}
    for (int w : {2, 4}) {
        BiExpansion E = build_E(w - 1, 1, N);
        CHECK(conj_expansion(E) == build_E(1, w - 1, N));
    }
}

TEST_CASE("Hecke operator on expansions") {
    // T_n L^{-1} = sigma_1(n) L^{-1} at weights (1,1)
    for (long n : {1L, 2L, 3L, 4L, 6L}) {
        BiExpansion L1(1, 1, 8 * n);
        L1.add_term(-1, 0, 0, PeriodScalar(rat(1)));
        BiExpansion lhs = hecke_ra(L1, n);
        BiExpansion rhs(1, 1, 8);
        rhs.add_term(-1, 0, 0, PeriodScalar(Rat(divisor_sigma(1, n))));
        CHECK(lhs == rhs);
    }

    // m T_m L^{-n} = sigma_{n+1}(m) L^{-n} inside weights (r,s), r+s = n
    for (long m : {2L, 3L}) {
        BiExpansion Ln(4, 6, 4 * m);
        Ln.add_term(-10, 0, 0, PeriodScalar(rat(1)));
        BiExpansion lhs = Rat(m) * hecke_ra(Ln, m);
        BiExpansion rhs(4, 6, 4);
        rhs.add_term(-10, 0, 0, PeriodScalar(Rat(divisor_sigma(11, m))));
        CHECK(lhs == rhs);
    }

    // G2* = G2 - 1/(4L) is an eigenform with eigenvalue sigma_1(n)
    long depth = 6;
    QLaurent g2 = qexact::eisenstein(1, 6 * depth);
    BiExpansion G2s = from_qlaurent(g2, 2, 0);
    G2s.add_term(-1, 0, 0, PeriodScalar(rat(-1, 4)));
    for (long n = 1; n <= 6; ++n) CHECK(hecke_ra(G2s, n) == Rat(divisor_sigma(1, n)) * G2s);

    // support condition: a mixed term with m = n != 0 mod d is rejected
    BiExpansion bad(1, 1, 4);
    bad.add_term(0, 1, 1, PeriodScalar(rat(1)));
    CHECK_THROWS_AS(hecke_ra(bad, 2), error);

    // T_m commutes with the Laplacian
    BiExpansion F = Rat(1) * G2s;
    CHECK(hecke_ra(laplacian(F), 2) == laplacian(hecke_ra(F, 2)));
}

TEST_CASE("inhomogeneous Hecke equation") {
    QLaurent d = qexact::delta(60), dp = qexact::delta_prime(60);
    auto eig = hecke::eigen_data_from_form(d, 12, 4, "weight-12 cusp form");
    auto defect = hecke::eigen_defect(dp, eig, 2, 10);
    Rat alpha_rat = hecke::alpha_constant(eig, 2, defect.psi.at(0)).rational_part;

    for (int r : {0, 4, 10})
        CHECK(hecke_inhomogeneous_holds(r, 10 - r, 2, 10, eig.at(2), d, dp, alpha_rat,
                                        defect.p));

    // m = 1 is trivial on both sides
    auto d1 = hecke::eigen_defect(dp, eig, 1, 10);
    CHECK(d1.p.is_zero());
    CHECK(hecke_inhomogeneous_holds(3, 7, 1, 10, eig.at(1), d, dp, alpha_rat, d1.p));
}

TEST_CASE("numeric evaluation") {
    SymbolValues vals{Real(3) / 10, Real(17) / 10, Real(1) / 5, Real(3) / 2};

    BiExpansion L(1, 1, 5);
    L.add_term(1, 0, 0, PeriodScalar(rat(1)));
    auto r = evaluate(L, Cplx{Real(0), Real(1)}, vals);
    CHECK((r.value - Cplx(-2 * pi_real())).abs() < tiny(-40));

    BiExpansion Z(0, 0, 5);
    CHECK(evaluate(Z, Cplx{Real(0), Real(2)}, vals).value.abs() == 0);

    // independent summation oracle for R_{10,0}(Delta) at 2i
    long N = 30;
    QLaurent d = qexact::delta(N);
    BiExpansion R = build_R(d, 10, 0, N);
    Cplx z{Real(0), Real(2)};
    auto got = evaluate(R, z, vals);
    Cplx q = cexp(Cplx(Real(0), 2 * pi_real()) * z);
    Real Lv = -2 * pi_real() * z.im;
    Cplx want;
    for (long k = 10; k >= 0; --k) {
        Cplx inner;
        for (long e = N; e >= 1; --e) {
            Rat coeff = Rat(binomial(10, k)) * Rat(int_pow(-1, k)) * Rat(factorial(k)) *
                        d.at(e) / rat_pow(rat(2 * e), k + 1);
            if (coeff != 0) inner += real_from(coeff) * cpow(q, e);
        }
        want += real_pow_int(Lv, -k) * inner;
    }
    CHECK((got.value - want).abs() <= tiny(-25) * (1 + want.abs()));
    CHECK(got.tail_estimate < tiny(-25));
}

TEST_CASE("T-periodicity holds for any symbol values") {
    long N = 20;
    QLaurent d = qexact::delta(N), dp = qexact::delta_prime(N);
    BiExpansion H = build_H(10, 0, N, d, dp, PeriodScalar::sym_alpha());
    SymbolValues vals{Real(3) / 10, Real(17) / 10, Real(1) / 5, Real(3) / 2};
    Real res = modularity_residual(H, cocycle::mat_T(), Cplx{Real(1) / 3, Real(1)}, vals);
    CHECK(res < tiny(-40));
}

TEST_CASE("S-modularity of the Eisenstein family") {
    long N = 30;
    BiExpansion E22 = build_E(2, 2, N);
    SymbolValues vals{Real(0), Real(0), Real(0), zeta_int(5)};
    for (const Cplx& z : {Cplx{Real(0), Real(2)}, Cplx{Real(1) / 3, Real(1)}}) {
        Real res = modularity_residual(E22, cocycle::mat_S(), z, vals);
        CHECK(res < tiny(-15));
    }
}
