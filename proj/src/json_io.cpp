#include "ramf/json_io.hpp"

namespace ramf {
namespace io {

json to_json(const QLaurent& f) {
    json coeffs = json::array();
    for (long e = f.valuation(); e <= f.truncation(); ++e)
        coeffs.push_back({f.at(e).get_num().get_str(), f.at(e).get_den().get_str()});
    return json{{"weight", f.weight()},
                {"valuation", f.valuation()},
                {"truncation", f.truncation()},
                {"coeffs", coeffs}};
}

QLaurent qlaurent_from_json(const json& j) {
    long val = j.at("valuation").get<long>();
    long trunc = j.at("truncation").get<long>();
    int weight = j.at("weight").get<int>();
    std::vector<Rat> c;
    for (const auto& pair : j.at("coeffs"))
        c.push_back(rat(Int(pair.at(0).get<std::string>()), Int(pair.at(1).get<std::string>())));
    return QLaurent(weight, val, std::move(c), trunc);
}

json to_json(const cocycle::PeriodMatrix& P, unsigned digits, long truncation) {
    return json{{"omega_plus", real_str(P.omega_plus, digits)},
                {"omega_minus", real_str(P.omega_minus, digits)},
                {"eta_plus", real_str(P.eta_plus, digits)},
                {"eta_minus", real_str(P.eta_minus, digits)},
                {"residual", real_str(P.residual, 3)},
                {"precision_digits", digits},
                {"truncation", truncation}};
}

json to_json(const sv::SvMatrix& M, const sv::PeriodInvariants& I, const Real& rho,
             unsigned digits) {
    return json{{"sigma", real_str(sv::sigma_of(M), digits)},
                {"tau", real_str(sv::tau_of(M), digits)},
                {"rho", real_str(rho, digits)},
                {"det_ratio", real_str(I.det_ratio, digits)},
                {"petersson", real_str(I.petersson, digits)},
                {"sv_matrix",
                 json::array({json::array({real_str(M.m[0][0], digits), real_str(M.m[0][1], digits)}),
                              json::array({real_str(M.m[1][0], digits), real_str(M.m[1][1], digits)})})}};
}

json to_json(const ra::BiExpansion& F) {
    json terms = json::array();
    for (const auto& [key, c] : F.terms()) {
        terms.push_back(json{{"k", key.k},
                             {"m", key.m},
                             {"n", key.n},
                             {"coeff",
                              json{{"one", rat_str(c.one)},
                                   {"sigma", rat_str(c.sigma)},
                                   {"tau", rat_str(c.tau)},
                                   {"alpha", rat_str(c.alpha)},
                                   {"zeta", rat_str(c.zeta)}}}});
    }
    return json{{"r", F.r()}, {"s", F.s()}, {"terms", terms}, {"truncation", F.trunc()}};
}

json to_json(const mock::MockSeries& M, const Real& rho, unsigned digits) {
    json terms = json::array();
    for (const auto& [n, ab] : M.terms) {
        Real value = real_from(ab.first) + real_from(ab.second) * rho;
        terms.push_back(json{{"n", n},
                             {"a", rat_str(ab.first)},
                             {"b", rat_str(ab.second)},
                             {"value", real_str(value, digits)}});
    }
    return json{{"scale", M.scale.get_str()}, {"truncation", M.truncation},
                {"rho", real_str(rho, digits)}, {"terms", terms}};
}

std::string mock_csv(const mock::MockSeries& M, const Real& rho, unsigned digits) {
    std::string out = "n,a_n,b_n,value\n";
    for (const auto& [n, ab] : M.terms) {
        Real value = real_from(ab.first) + real_from(ab.second) * rho;
        out += std::to_string(n) + "," + rat_str(ab.first) + "," + rat_str(ab.second) + "," +
               real_str(value, digits) + "\n";
    }
    return out;
}

} // namespace io
} // namespace ramf
