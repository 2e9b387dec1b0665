#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "qfgaps/analytic_constants.hpp"
#include "qfgaps/census.hpp"
#include "qfgaps/gaps.hpp"

namespace qfg {

/// 15 significant digits, shortest form ("%.15g").
std::string format_real(double v);

inline constexpr std::string_view kCensusHeader = "set1,set2,a,x,H,count";
inline constexpr std::string_view kCorrelationHeader = "psi,a,x,J,main,ratio";

/// Summary row followed by one "W,n" line per witness, newline-terminated.
std::string census_csv(const CensusRecord& rec);
CensusRecord parse_census_csv(std::string_view text);

std::string correlation_csv(const CorrelationReport& r);
CorrelationReport parse_correlation_csv(std::string_view line);

nlohmann::ordered_json to_json(const CensusRecord& rec);
nlohmann::ordered_json to_json(const CorrelationReport& r);
nlohmann::ordered_json to_json(const GapWitness& w);
nlohmann::ordered_json to_json(const TruncatedValue& v);

}  // namespace qfg
