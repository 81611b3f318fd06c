#ifndef RAMF_JSON_IO_HPP
#define RAMF_JSON_IO_HPP

#include "ramf/cocycle.hpp"
#include "ramf/mock.hpp"
#include "ramf/qlaurent.hpp"
#include "ramf/raexpand.hpp"
#include "ramf/svperiods.hpp"

#include <json.hpp>

namespace ramf {
namespace io {

using json = nlohmann::ordered_json;

json to_json(const QLaurent& f);
QLaurent qlaurent_from_json(const json& j);

json to_json(const cocycle::PeriodMatrix& P, unsigned digits, long truncation);
json to_json(const sv::SvMatrix& M, const sv::PeriodInvariants& I, const Real& rho,
             unsigned digits);
json to_json(const ra::BiExpansion& F);
json to_json(const mock::MockSeries& M, const Real& rho, unsigned digits);
std::string mock_csv(const mock::MockSeries& M, const Real& rho, unsigned digits);

} // namespace io
} // namespace ramf

#endif
