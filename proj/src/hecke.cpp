#include "ramf/hecke.hpp"

#include "ramf/forms.hpp"

#include <algorithm>

namespace ramf {
namespace hecke {

QLaurent hecke_qexp(const QLaurent& f, long w, long m) {
    if (m < 1) throw error("hecke_qexp: m must be >= 1");
    long tout = floor_div(f.truncation(), m);
    if (f.is_zero()) return QLaurent::zero(f.weight(), tout);
    long vout = m * std::min(f.valuation(), 0L);  // poles deepen m-fold at most
    if (f.valuation() > 0) vout = (f.valuation() + m - 1) / m;
    if (vout > tout) return QLaurent::zero(f.weight(), tout);
    std::vector<Rat> c(static_cast<size_t>(tout - vout + 1), Rat(0));
    for (long mu = vout; mu <= tout; ++mu) {
        Rat s = 0;
        for (long a = 1; a <= m; ++a) {
            if (m % a != 0) continue;
            if (mu % a != 0) continue;  // a | gcd(m, mu); gcd(m, 0) = m
            long idx = (mu / a) * (m / a);
            if (!f.known(idx)) throw error("hecke_qexp: insufficient input truncation");
            if (f.at(idx) == 0) continue;
            s += Rat(int_pow(a, w - 1)) * f.at(idx);
        }
        c[static_cast<size_t>(mu - vout)] = s;
    }
    return QLaurent(f.weight(), vout, std::move(c), tout);
}

const Rat& HeckeEigenData::at(long m) const {
    auto it = lambda.find(m);
    if (it == lambda.end()) throw error("HeckeEigenData: eigenvalue not stored for this m");
    return it->second;
}

HeckeEigenData eigen_data_from_form(const QLaurent& f, long weight, long mmax,
                                    const std::string& source) {
    if (!f.known(mmax)) throw error("eigen_data_from_form: truncation below mmax");
    if (f.at(1) != 1) throw error("eigen_data_from_form: form is not normalised (a_1 != 1)");
    HeckeEigenData eig;
    eig.weight = weight;
    eig.source = source;
    for (long m = 1; m <= mmax; ++m) eig.lambda[m] = f.at(m);
    return eig;
}

bool eigenvalues_multiplicative(const HeckeEigenData& eig) {
    long mmax = eig.lambda.rbegin()->first;
    for (long m = 2; m <= mmax; ++m)
        for (long n = 2; m * n <= mmax; ++n) {
            Int g;
            mpz_gcd(g.get_mpz_t(), Int(m).get_mpz_t(), Int(n).get_mpz_t());
            if (g == 1 && eig.at(m * n) != eig.at(m) * eig.at(n)) return false;
        }
    // lambda_p lambda_{p^k} = lambda_{p^{k+1}} + p^{w-1} lambda_{p^{k-1}}
    for (long p = 2; p <= mmax; ++p) {
        bool prime = p >= 2;
        for (long d = 2; d * d <= p; ++d)
            if (p % d == 0) prime = false;
        if (!prime) continue;
        for (long pk = p; pk * p <= mmax; pk *= p) {
            Rat lhs = eig.at(p) * eig.at(pk);
            Rat rhs = eig.at(pk * p) + Rat(int_pow(p, eig.weight - 1)) * eig.at(pk / p);
            if (lhs != rhs) return false;
        }
    }
    return true;
}

EigenDefect eigen_defect(const QLaurent& fprime, const HeckeEigenData& eig, long m, long n) {
    long w = n + 2;
    if (n != 10) throw error("eigen_defect: only the weight-12 eigenspace is supported");
    if (eig.weight != w) throw error("eigen_defect: weight mismatch");
    QLaurent tm = hecke_qexp(fprime, w, m);
    QLaurent defect = tm - eig.at(m) * fprime.truncated(tm.truncation());
    if (defect.known(0) && defect.at(0) != 0)
        throw error("eigen_defect: nonzero constant term; not a weak eigenform for this lambda");
    QLaurent p = qexact::bol_inverse(defect, n);

    // D^{n+1} kills constants, so bol_inverse leaves a_0(p) undetermined; the
    // constant is pinned by modularity: M^!_{-10} has no form of pole order
    // <= 1, so the principal part determines p as a combination of the basis
    // forms of pole order >= 2, each with a definite constant term.
    long P = p.pole_order();
    if (P >= 2) {
        std::vector<Rat> princ(static_cast<size_t>(P + 1), Rat(0));
        for (long k = 1; k <= P; ++k) princ[static_cast<size_t>(k)] = p.at(-k);
        Rat a0 = 0;
        for (long k = P; k >= 2; --k) {
            Rat g = princ[static_cast<size_t>(k)];
            if (g == 0) continue;
            QLaurent basis = weight_minus10_form(k, 0);
            for (long j = 1; j <= k; ++j) princ[static_cast<size_t>(j)] -= g * basis.at(-j);
            a0 += g * basis.at(0);
        }
        if (princ[1] != 0)
            throw error("eigen_defect: defect is not the Bol image of a weight -10 form");
        if (a0 != 0) p = p + QLaurent::constant(-10, a0, p.truncation());
    }

    Rat norm = Rat(factorial(n)) / Rat(int_pow(2, n + 1));
    QLaurent psi = norm * p;
    return {std::move(p), std::move(psi)};
}

bool consistency_psi(const QLaurent& fprime, const HeckeEigenData& eig, long m, long k,
                     long n, long depth) {
    long w = n + 2;
    auto defect = [&](const QLaurent& g, long j) {
        QLaurent t = hecke_qexp(g, w, j);
        return t - eig.at(j) * g.truncated(t.truncation());
    };
    QLaurent lhs = defect(defect(fprime, k), m);
    QLaurent rhs = defect(defect(fprime, m), k);
    return equal_through(lhs, rhs, depth);
}

AlphaValue alpha_constant(const HeckeEigenData& eig, long m, const Rat& psi_zero) {
    long n = eig.weight - 2;
    Rat den = Rat(divisor_sigma(n + 1, m)) - eig.at(m);
    if (den == 0) throw error("alpha_constant: sigma_{n+1}(m) = lambda_m; try a larger m");
    return {psi_zero / den, "sigma"};
}

QLaurent weight_minus10_form(long pole, long N) {
    if (pole < 2) throw error("weight_minus10_form: minimal pole order is 2");
    long M = N + pole + 2;
    QLaurent g = qexact::e4(M).pow(2) * qexact::e6(M) * qexact::delta(M).pow(-2);
    if (pole > 2) g = g * qexact::j_invariant(M).pow(pole - 2);
    return g.truncated(N).with_weight(-10);
}

QLaurent canonical_representative(const QLaurent& f, long n) {
    if (n != 10) throw error("canonical_representative: only the weight-12 eigenspace is supported");
    if (f.weight() != 12) throw error("canonical_representative: weight mismatch");
    const long pole_bound = 64;
    QLaurent g = f;
    while (!g.is_zero() && g.leading_exponent() < -1) {
        long p = -g.leading_exponent();
        if (p > pole_bound) throw error("canonical_representative: pole order beyond configured bound");
        QLaurent basis = weight_minus10_form(p, g.truncation());
        QLaurent image = qexact::bol(basis, 10);  // leading term (-p)^11 q^{-p}
        Rat scale = g.at(-p) / rat_pow(rat(-p), 11);
        g = g - scale * image;
    }
    return g;
}

} // namespace hecke
} // namespace ramf
