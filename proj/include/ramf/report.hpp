#ifndef RAMF_REPORT_HPP
#define RAMF_REPORT_HPP

#include "ramf/cocycle.hpp"
#include "ramf/hecke.hpp"
#include "ramf/raexpand.hpp"
#include "ramf/svperiods.hpp"

#include <string>
#include <vector>

namespace ramf {
namespace report {

struct PipelineConfig {
    long truncation = 30;
    unsigned precision_digits = 40;
    Cplx basepoint;  // default 2i
    long cmax = 100;

    PipelineConfig() : basepoint(Real(0), Real(2)) {}
    void validate() const;  // truncation >= 10, digits >= 25, Im basepoint >= 1
};

struct CheckResult {
    std::string id, name, detail;
    bool pass = false;
};

/// Named q-expansions for the CLI: delta | delta-prime | j | eisenstein<k>.
QLaurent make_form(const std::string& name, long N);

cocycle::PeriodMatrix compute_periods(const PipelineConfig& cfg);

/// Numeric values of the expansion symbols for the Delta family.  The sv
/// matrix entries follow the reference sign convention (sigma, tau < 0); the
/// modular expansions require the opposite sign, so the substitution negates
/// them.  zeta_arg = 0 leaves the zeta slot at 0.
ra::SymbolValues h_symbol_values(const sv::SvMatrix& M, const Rat& alpha_rational,
                                 unsigned long zeta_arg);

/// Headline quantities of the run, formatted at the configured precision.
struct ReportSummary {
    std::string omega_plus, omega_minus, eta_plus, eta_minus;
    std::string sigma, tau, rho, alpha, petersson, det_ratio;
};

/// All acceptance checks, one result per criterion.
std::vector<CheckResult> run_acceptance(const PipelineConfig& cfg,
                                        ReportSummary* summary = nullptr);

} // namespace report
} // namespace ramf

#endif
