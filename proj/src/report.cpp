#include "ramf/report.hpp"

#include "ramf/forms.hpp"
#include "ramf/mock.hpp"

#include <random>
#include <sstream>

namespace ramf {
namespace report {

using namespace qexact;

void PipelineConfig::validate() const {
    if (truncation < 10) throw error("config: truncation must be >= 10");
    if (precision_digits < 25) throw error("config: precision must be >= 25 digits");
    if (!(basepoint.im >= 1)) throw error("config: basepoint must have Im >= 1");
    if (cmax < 1) throw error("config: cmax must be >= 1");
}

QLaurent make_form(const std::string& name, long N) {
    if (name == "delta") return delta(N);
    if (name == "delta-prime") return delta_prime(N);
    if (name == "j") return j_invariant(N);
    if (name.rfind("eisenstein", 0) == 0) {
        long k = 0;
        try {
            k = std::stol(name.substr(10));
        } catch (const std::exception&) {
            throw error("malformed form name: " + name + " (expected eisenstein<k>, weight 2k)");
        }
        return eisenstein(k, N);
    }
    throw error("unknown form: " + name + " (expected delta|delta-prime|j|eisenstein<k>)");
}

cocycle::PeriodMatrix compute_periods(const PipelineConfig& cfg) {
    cfg.validate();
    QLaurent d = delta(cfg.truncation);
    QLaurent dp = delta_prime(cfg.truncation);
    cocycle::QuadOptions opt;
    Cplx z{Real(0), Real(1)};
    auto Cd = cocycle::cocycle_of_form(d, 10, cfg.basepoint, z, opt, "weight-12 cusp form");
    auto Cdp = cocycle::cocycle_of_form(dp, 10, cfg.basepoint, z, opt, "weight-12 weak eigenform");
    return cocycle::extract_periods(Cd, Cdp, real_pow_int(Real(10), -12));
}

ra::SymbolValues h_symbol_values(const sv::SvMatrix& M, const Rat& alpha_rational,
                                 unsigned long zeta_arg) {
    Real s = -sv::sigma_of(M), t = -sv::tau_of(M);
    Real z = zeta_arg >= 2 ? zeta_int(zeta_arg) : Real(0);
    return {s, t, real_from(alpha_rational) * s, z};
}

// ---------------------------------------------------------------------------

namespace {

struct Suite {
    std::vector<CheckResult> out;
    void add(const std::string& id, const std::string& name, bool pass,
             const std::string& detail) {
        out.push_back({id, name, detail, pass});
    }
};

bool rel_close(const Real& value, const std::string& reference, const Real& tol) {
    Real ref = real_parse(reference);
    return abs(value - ref) <= tol * abs(ref);
}

std::string rel_str(const Real& value, const std::string& reference) {
    Real ref = real_parse(reference);
    return real_str(abs(value - ref) / abs(ref), 3);
}

ra::BiExpansion random_expansion(std::mt19937& rng, int r, int s, long trunc, int nterms) {
    std::uniform_int_distribution<long> kd(-4, 4), ed(-2, 6), num(-9, 9), den(1, 4);
    std::uniform_int_distribution<int> sym(0, 5);
    ra::BiExpansion F(r, s, trunc);
    for (int i = 0; i < nterms; ++i) {
        Rat c = rat(num(rng), den(rng));
        if (c == 0) continue;
        ra::PeriodScalar p;
        switch (sym(rng)) {
            case 0: p = ra::PeriodScalar::sym_sigma(c); break;
            case 1: p = ra::PeriodScalar::sym_tau(c); break;
            case 2: p = ra::PeriodScalar::sym_zeta(c); break;
            default: p = ra::PeriodScalar(c); break;
        }
        F.add_term(kd(rng), ed(rng), ed(rng), p);
    }
    return F;
}

} // namespace

std::vector<CheckResult> run_acceptance(const PipelineConfig& cfg, ReportSummary* summary) {
    cfg.validate();
    set_precision(cfg.precision_digits + 10);
    Suite suite;
    long N = std::max(cfg.truncation, 30L);

    QLaurent d = delta(N), dp = delta_prime(N);

    // 1. exact coefficients of Delta'
    {
        bool ok = dp.at(2) == 47709536 && dp.at(3) == Rat("39862705122") &&
                  dp.at(4) == Rat("7552626810624") && dp.at(-1) == 1 && dp.at(0) == 0 &&
                  dp.at(1) == 0;
        suite.add("1", "coefficients of the weight-12 weak eigenform", ok,
                  "a2=" + rat_str(dp.at(2)) + " a3=" + rat_str(dp.at(3)) +
                      " a4=" + rat_str(dp.at(4)));
    }

    // 2. duality pairing
    {
        Rat p1 = pairing(d, dp, 10), p2 = pairing(d, d, 10);
        suite.add("2", "pairing {Delta, Delta'} = 1, {Delta, Delta} = 0",
                  p1 == 1 && p2 == 0, "{d,d'}=" + rat_str(p1) + " {d,d}=" + rat_str(p2));
    }

    // 3. defect series p2 (checked through q^15)
    hecke::HeckeEigenData eig;
    Rat alpha_rat;
    QLaurent p2 = QLaurent::zero(-10, 0);
    {
        long depth = 15;
        QLaurent dw = delta(8 * depth), dpw = delta_prime(8 * depth);
        eig = hecke::eigen_data_from_form(dw, 12, 20, "weight-12 cusp form");
        auto defect = hecke::eigen_defect(dpw, eig, 2, 10);
        p2 = defect.p;
        QLaurent closed = rat(24) * (eisenstein(7, depth + 5) * delta(depth + 8).pow(-2));
        bool closed_ok = equal_through(p2, closed, depth);
        QLaurent lhs = hecke::hecke_qexp(dpw, 12, 2) + rat(24) * dpw.truncated(4 * depth);
        bool bol_ok = equal_through(lhs, bol(p2, 10), depth);
        bool norm_ok = equal_through(Rat(int_pow(2, 11)) * defect.psi,
                                     Rat(factorial(10)) * p2, depth);
        bool leading = p2.at(-2) == -1 && p2.at(-1) == -24 && p2.at(0) == 196560 &&
                       p2.at(1) == 47709536;
        suite.add("3", "p2 = 24 G14 / Delta^2 and (T2+24)Delta' = D^11 p2",
                  closed_ok && bol_ok && norm_ok && leading,
                  std::string("closed=") + (closed_ok ? "y" : "n") + " bol=" +
                      (bol_ok ? "y" : "n") + " psi-norm=" + (norm_ok ? "y" : "n"));
        alpha_rat = hecke::alpha_constant(eig, 2, defect.psi.at(0)).rational_part;
    }

    // 4. periods
    auto P = compute_periods(cfg);
    {
        Real tol = real_pow_int(Real(10), -12);
        bool ok = rel_close(P.omega_plus, "-68916772.809595194754", tol) &&
                  rel_close(P.omega_minus, "-5585015.3793104018668", tol) &&
                  rel_close(P.eta_plus, "127202100647.17709477", tol) &&
                  rel_close(P.eta_minus, "10276732343.649132750", tol);
        suite.add("4", "periods and quasi-periods to 1e-12", ok,
                  "omega+ rel=" + rel_str(P.omega_plus, "-68916772.809595194754") +
                      " eta- rel=" + rel_str(P.eta_minus, "10276732343.649132750") +
                      " residual=" + real_str(P.residual, 3));
    }

    // 5. determinant and Petersson norm
    auto I = sv::invariants_of_P(P);
    {
        bool det_ok = abs(I.det_ratio - 1) <= real_pow_int(Real(10), -10);
        bool pet_ok = rel_close(I.petersson, "1.03536205e-6", real_pow_int(Real(10), -7));
        suite.add("5", "det P = 10! (2 pi i)^11 and Petersson norm", det_ok && pet_ok,
                  "det_ratio-1=" + real_str(I.det_ratio - 1, 3) +
                      " petersson=" + real_str(I.petersson, 9));
    }

    // 6. single-valued matrix and rho
    auto M = sv::sv_matrix(P);
    Real rho = sv::rho(P);
    {
        Real tol = 2 * real_pow_int(Real(10), -7);
        bool ok = rel_close(M.m[0][0], "648.84093", tol) &&
                  rel_close(M.m[0][1], "-0.3520770", tol) &&
                  rel_close(M.m[1][0], "1195742.7", tol) &&
                  rel_close(M.m[1][1], "-648.84093", tol) &&
                  rel_close(rho, "1842.8947269", real_pow_int(Real(10), -9));
        suite.add("6", "single-valued matrix entries and rho", ok,
                  "sigma=" + real_str(sv::sigma_of(M), 8) + " tau=" + real_str(sv::tau_of(M), 8) +
                      " rho=" + real_str(rho, 11));
    }

    // 7. alpha: exact rational factor and m-independence
    {
        Rat expect = Rat(factorial(7)) * 13 / 691 * Rat(factorial(10)) / Rat(int_pow(2, 11));
        QLaurent dpw = delta_prime(90);
        auto d3 = hecke::eigen_defect(dpw, eig, 3, 10);
        Rat a3 = hecke::alpha_constant(eig, 3, d3.psi.at(0)).rational_part;
        bool ok = alpha_rat == expect && alpha_rat == a3;
        suite.add("7", "alpha = (7! 13/691)(10!/2^11) sigma, consistent over m", ok,
                  "alpha=" + rat_str(alpha_rat) + " m=3 gives " + rat_str(a3));
    }

    // 8. mock coefficients
    {
        auto mk = mock::mock_series(10);
        auto term = [&](long n) { return mk.terms.at(n); };
        bool ok = term(-1) == std::make_pair(Rat(1), Rat(0)) &&
                  term(0) == std::make_pair(rat(-65520, 691), Rat(0)) &&
                  term(1) == std::make_pair(Rat(0), Rat(-1)) &&
                  term(2) == std::make_pair(rat(-1490923, 64), rat(3, 256)) &&
                  term(3) == std::make_pair(rat(-164044054, 729), rat(-28, 19683));
        suite.add("8", "mock modular coefficients (inside the 11! scale)", ok,
                  "q^2 -> " + rat_str(term(2).first) + " + " + rat_str(term(2).second) + " rho");
    }

    // 9. Kloosterman-Bessel identity
    {
        bool ok = true;
        std::string detail;
        Real tol = real_pow_int(Real(10), -6);
        for (long n = 1; n <= 5; ++n) {
            auto chk = mock::verify_corollary(n, cfg.cmax, rho, d, dp, tol);
            if (!(chk.rel_err <= tol)) ok = false;
            if (n == 5) detail = "n=5 rel_err=" + real_str(chk.rel_err, 3);
        }
        suite.add("9", "Poincare-series identity for n = 1..5", ok, detail);
    }

    // 10. exact property suite
    {
        std::ostringstream fails;
        int checks = 0;
        auto expect = [&](bool ok, const char* what) {
            ++checks;
            if (!ok) fails << what << "; ";
        };
        ra::PeriodScalar alpha_sym = ra::PeriodScalar::sym_alpha();

        std::vector<ra::BiExpansion> H;
        for (int r = 0; r <= 10; ++r) H.push_back(ra::build_H(r, 10 - r, N, d, dp, alpha_sym));
        for (int r = 0; r <= 10; ++r) {
            int s = 10 - r;
            if (s >= 1) expect(ra::d_holo(H[r]) == Rat(r + 1) * H[r + 1], "ladder del");
            if (r >= 1) expect(ra::d_anti(H[r]) == Rat(s + 1) * H[r - 1], "ladder delbar");
            expect(ra::laplacian(H[r]) == Rat(-10) * H[r], "Laplace eigenvalue");
            expect(ra::laplacian(H[r].mul_L(-1)).is_zero(), "harmonic lift");
        }
        expect(ra::d_holo(H[10]) == ra::from_qlaurent(d, 12, 0).mul_L(1), "del boundary");
        {
            ra::BiExpansion sf = ra::PeriodScalar::sym_sigma() * ra::from_qlaurent(dp, 12, 0) +
                                 ra::PeriodScalar::sym_tau() * ra::from_qlaurent(d, 12, 0);
            expect(ra::d_anti(H[0]) == ra::conj_expansion(sf).mul_L(1), "delbar boundary");
        }
        for (int w : {2, 4, 6}) {
            ra::BiExpansion E = ra::build_E(w, 0, N);
            expect(ra::d_holo(E) == ra::from_qlaurent(eisenstein((w + 2) / 2, N), w + 2, 0).mul_L(1),
                   "Eisenstein boundary");
        }

        std::mt19937 rng(8128);
        std::uniform_int_distribution<int> wd(-6, 8);
        for (int i = 0; i < 50; ++i) {
            ra::BiExpansion F = random_expansion(rng, wd(rng), wd(rng), 8, 12);
            Rat h(F.r() - F.s());
            expect(ra::d_holo(ra::d_anti(F)) - ra::d_anti(ra::d_holo(F)) == h * F, "[del,delbar]=h");
            expect(ra::op_h(ra::d_holo(F)) - ra::d_holo(ra::op_h(F)) == Rat(2) * ra::d_holo(F),
                   "[h,del]=2del");
            expect(ra::op_h(ra::d_anti(F)) - ra::d_anti(ra::op_h(F)) == Rat(-2) * ra::d_anti(F),
                   "[h,delbar]=-2delbar");
            expect(ra::d_holo(F.mul_L(1)) == ra::d_holo(F).mul_L(1), "[del,L]=0");
            expect(ra::d_anti(F.mul_L(1)) == ra::d_anti(F).mul_L(1), "[delbar,L]=0");
            expect(ra::d_holo(ra::laplacian(F)) == ra::laplacian(ra::d_holo(F)), "[del,Lap]=0");
            expect(ra::d_anti(ra::laplacian(F)) == ra::laplacian(ra::d_anti(F)), "[delbar,Lap]=0");
            expect(ra::laplacian(F).mul_L(1) - ra::laplacian(F.mul_L(1)) ==
                       ra::op_w(F.mul_L(1)), "[L,Lap]=wL");
        }
        for (int i = 0; i < 20; ++i) {
            ra::BiExpansion F = random_expansion(rng, -10, wd(rng), 8, 10);
            ra::BiExpansion lhs = F;
            for (int j = 0; j < 11; ++j) lhs = rat(1, 2) * ra::d_holo(lhs).mul_L(-1);
            ra::BiExpansion rhs = F;
            for (int j = 0; j < 11; ++j) rhs = ra::op_D(rhs);
            expect(lhs == rhs, "Bol identity");
        }

        // Hecke relations on weight-12 q-expansions
        {
            long depth = 15;
            QLaurent big_d = delta(8 * depth), big_dp = delta_prime(8 * depth),
                     big_g = eisenstein(6, 8 * depth);
            for (const QLaurent* f : {&big_d, &big_dp, &big_g}) {
                QLaurent t23 = hecke::hecke_qexp(hecke::hecke_qexp(*f, 12, 3), 12, 2);
                QLaurent t32 = hecke::hecke_qexp(hecke::hecke_qexp(*f, 12, 2), 12, 3);
                QLaurent t6 = hecke::hecke_qexp(*f, 12, 6);
                expect(equal_through(t23, t6, depth) && equal_through(t32, t6, depth),
                       "T2T3=T6");
                QLaurent t24 = hecke::hecke_qexp(hecke::hecke_qexp(*f, 12, 4), 12, 2);
                QLaurent t8 = hecke::hecke_qexp(*f, 12, 8);
                QLaurent t2 = hecke::hecke_qexp(*f, 12, 2);
                expect(equal_through(t24, t8 + Rat(int_pow(2, 11)) * t2.truncated(depth), depth),
                       "T2T4=T8+2^11 T2");
            }
        }
        // T_n G2* = sigma_1(n) G2*
        {
            long depth = 8;
            QLaurent g2 = eisenstein(1, 6 * depth);
            ra::BiExpansion G2s = ra::from_qlaurent(g2, 2, 0);
            G2s.add_term(-1, 0, 0, ra::PeriodScalar(rat(-1, 4)));
            for (long n = 1; n <= 6; ++n)
                expect(ra::hecke_ra(G2s, n) == Rat(divisor_sigma(1, n)) * G2s, "T_n G2*");
        }
        // inhomogeneous Hecke equation, m = 2, all (r,s)
        {
            QLaurent d60 = delta(60), dp60 = delta_prime(60);
            for (int r = 0; r <= 10; ++r)
                expect(ra::hecke_inhomogeneous_holds(r, 10 - r, 2, 10, eig.at(2), d60, dp60,
                                                     alpha_rat, p2),
                       "inhomogeneous Hecke");
        }

        std::string f = fails.str();
        suite.add("10", "exact symbolic property suite", f.empty(),
                  f.empty() ? std::to_string(checks) + " checks" : f);
    }

    // 11. numerical modularity
    {
        ra::SymbolValues vals = h_symbol_values(M, alpha_rat, 5);
        ra::BiExpansion H10 = ra::build_H(10, 0, N, d, dp, ra::PeriodScalar::sym_alpha());
        ra::BiExpansion E22 = ra::build_E(2, 2, N);
        std::vector<Cplx> pts = {{Real(0), Real(1)},
                                 {Real(1) / 2, Real(1)},
                                 {Real(1) / 3, Real(1)},
                                 {Real(0), Real(3) / 2},
                                 {Real(0), Real(2)}};
        Real tol = real_pow_int(Real(10), -15), worst = 0;
        bool ok = true;
        for (const auto& z : pts) {
            Real r1 = ra::modularity_residual(H10, cocycle::mat_S(), z, vals);
            Real r2 = ra::modularity_residual(E22, cocycle::mat_S(), z, vals);
            Real r = r1 > r2 ? r1 : r2;
            if (r > worst) worst = r;
            if (!(r <= tol)) ok = false;
        }
        suite.add("11", "pointwise S-modularity of the lift and E_{2,2}", ok,
                  "worst residual " + real_str(worst, 3));
    }

    // 12. stability of the periods
    {
        Real tol = real_pow_int(Real(10), -10);
        auto close = [&](const cocycle::PeriodMatrix& A) {
            return abs(A.omega_plus - P.omega_plus) <= tol * abs(P.omega_plus) &&
                   abs(A.omega_minus - P.omega_minus) <= tol * abs(P.omega_minus) &&
                   abs(A.eta_plus - P.eta_plus) <= tol * abs(P.eta_plus) &&
                   abs(A.eta_minus - P.eta_minus) <= tol * abs(P.eta_minus);
        };
        PipelineConfig c1 = cfg;
        c1.basepoint = Cplx(Real(0), Real(3) / 2);
        PipelineConfig c2 = cfg;
        c2.truncation = 40;
        bool ok = close(compute_periods(c1)) && close(compute_periods(c2));
        {
            // doubled starting quadrature order
            QLaurent d30 = delta(cfg.truncation), dp30 = delta_prime(cfg.truncation);
            cocycle::QuadOptions opt;
            opt.initial_order = 32;
            Cplx z{Real(0), Real(1)};
            auto Cd = cocycle::cocycle_of_form(d30, 10, cfg.basepoint, z, opt, "f");
            auto Cdp = cocycle::cocycle_of_form(dp30, 10, cfg.basepoint, z, opt, "f'");
            ok = ok && close(cocycle::extract_periods(Cd, Cdp, real_pow_int(Real(10), -12)));
        }
        suite.add("12", "period stability under basepoint, truncation, quadrature", ok, "");
    }

    if (summary) {
        unsigned d10 = cfg.precision_digits;
        summary->omega_plus = real_str(P.omega_plus, d10);
        summary->omega_minus = real_str(P.omega_minus, d10);
        summary->eta_plus = real_str(P.eta_plus, d10);
        summary->eta_minus = real_str(P.eta_minus, d10);
        summary->sigma = real_str(sv::sigma_of(M), d10);
        summary->tau = real_str(sv::tau_of(M), d10);
        summary->rho = real_str(rho, d10);
        summary->alpha = rat_str(alpha_rat) + " sigma";
        summary->petersson = real_str(I.petersson, d10);
        summary->det_ratio = real_str(I.det_ratio, d10);
    }
    return suite.out;
}

} // namespace report
} // namespace ramf
