#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "xns/baker.hpp"

namespace xns {

using json = nlohmann::ordered_json;

// {lo, hi} as exact hex floats plus an upward-rounded decimal of hi.
json interval_to_json(const RealInterval& x);
RealInterval interval_from_json(const json& j);

json check_to_json(const CheckResult& c);
CheckResult check_from_json(const json& j);

// Top-level keys: context, assumptions, pipeline, bounds, anchors, timings.
// `timings` stays empty unless values are supplied, so identical runs give
// identical bytes.
json report_to_json(const BoundReport& r, const std::map<std::string, double>& timings = {});
BoundReport report_from_json(const json& j);

// Fixed-width table in pipeline order with the formula anchor last.
std::string report_to_text(const BoundReport& r);

}  // namespace xns
