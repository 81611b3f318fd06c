#ifndef RAMF_HECKE_HPP
#define RAMF_HECKE_HPP

#include "ramf/qlaurent.hpp"

#include <map>
#include <string>

namespace ramf {
namespace hecke {

/// T_m on a weight-w q-expansion by the closed coefficient formula
/// alpha_mu = sum_{a | (m, mu)} a^{w-1} a_{mu m / a^2}(f).
/// Output truncation floor(trunc(f)/m); pole order grows at most m-fold.
QLaurent hecke_qexp(const QLaurent& f, long w, long m);

struct HeckeEigenData {
    long weight = 0;                 // n + 2
    std::map<long, Rat> lambda;      // m -> eigenvalue
    std::string source;

    const Rat& at(long m) const;
};

/// Eigenvalues read off a normalised eigenform (a_1 = 1): lambda_m = a_m.
HeckeEigenData eigen_data_from_form(const QLaurent& f, long weight, long mmax,
                                    const std::string& source);

/// Classical multiplicativity of the stored eigenvalues.
bool eigenvalues_multiplicative(const HeckeEigenData& eig);

struct EigenDefect {
    QLaurent p;    // exact Bol preimage: D^{n+1} p_m = (T_m - lambda_m) f'
    QLaurent psi;  // psi_m = (n!/2^{n+1}) p_m, the normalisation entering alpha
};

/// Defect series of a weak eigenform.  Errors if (T_m - lambda_m) f' has a
/// nonzero constant term (wrong eigenvalue, or f' is not a weak eigenform).
EigenDefect eigen_defect(const QLaurent& fprime, const HeckeEigenData& eig, long m, long n);

/// (T_m - lambda_m) psi~_k = (T_k - lambda_k) psi~_m for the weight-(n+2)
/// defect series psi~_j = (T_j - lambda_j) f', checked exactly through
/// q^depth.  fprime must be truncated at >= m*k*depth.
bool consistency_psi(const QLaurent& fprime, const HeckeEigenData& eig, long m, long k,
                     long n, long depth);

struct AlphaValue {
    Rat rational_part;
    std::string symbol;  // the period symbol this multiplies ("sigma")
};

/// alpha = a_0(psi_m) / (sigma_{n+1}(m) - lambda_m); the caller passes
/// a_0(psi_m) (the sigma-coefficient for the Delta pipeline).
AlphaValue alpha_constant(const HeckeEigenData& eig, long m, const Rat& psi_zero);

/// Weakly holomorphic weight -10 form with leading term q^{-pole}, pole >= 2:
/// E_4^2 E_6 Delta^{-2} j^{pole-2}.
QLaurent weight_minus10_form(long pole, long N);

/// Unique representative of f modulo D^11 M^!_{-10} with pole order <= 1,
/// reduced greedily from the deepest pole.  Weight 12 only.
QLaurent canonical_representative(const QLaurent& f, long n);

} // namespace hecke
} // namespace ramf

#endif
