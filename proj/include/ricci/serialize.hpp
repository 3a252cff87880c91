#pragma once

#include <json.hpp>

#include "ricci/classify.hpp"
#include "ricci/curve.hpp"
#include "ricci/freeboundary.hpp"
#include "ricci/oracle.hpp"
#include "ricci/params.hpp"

namespace ricci {

using Json = nlohmann::ordered_json;

// Finite doubles serialize as numbers, infinities as the strings
// "inf"/"-inf" (JSON has no infinity literal).
Json json_number(double v);

Json params_to_json(const RicciParams& p);
Json interval_to_json(const DomainInterval& iv);
Json report_to_json(const ClassificationReport& rep);
Json validation_to_json(const ValidationReport& rep);
Json freeboundary_to_json(const FreeBoundarySolution& sol);
Json profile_to_json(const ProfileCurve& curve);

}  // namespace ricci
