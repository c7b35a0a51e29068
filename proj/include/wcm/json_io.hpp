#pragma once

#include <iosfwd>

#include <json.hpp>

#include "wcm/identity.hpp"
#include "wcm/modules.hpp"
#include "wcm/ses.hpp"

namespace wcm {

using Json = nlohmann::json;

Json web_to_json(const Rank1Web& w);
Json web_to_json(const Rank2Web& w);
Json web_to_json(const TripodWeb& w);
Json web_to_json(const Web& w);
Web web_from_json(const Json& j);

Json profile_to_json(const Rank2Profile& p);
Rank2Profile profile_from_json(const Json& j);

Json module_to_json(const ExplicitModule& m);

Json identity_report_to_json(const IdentityReport& r);
Json suite_report_to_json(const SuiteReport& r);
Json ses_report_to_json(const SesReport& r);
Json ses_case_to_json(const SesCaseReport& r);
Json ses_suite_to_json(const SesSuiteReport& r);

// TSV of rationals "p/q" separated by whitespace, one row per line
GrassPoint read_point_tsv(std::istream& in);

// expression file: each line "coef; web-json; web-json; ..." summed
FunctionExpr read_expr_file(std::istream& in);

} // namespace wcm
