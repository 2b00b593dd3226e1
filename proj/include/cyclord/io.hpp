#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "cyclord/analysis.hpp"
#include "cyclord/coding.hpp"
#include "cyclord/corder.hpp"
#include "cyclord/rotation.hpp"
#include "cyclord/split.hpp"

namespace cyclord::io {

using json = nlohmann::json;

// labels may arrive as strings or numbers; numbers are stringified
Label label_from_json(const json& j);

json order_to_json(const FiniteCyclicOrder& x);
FiniteCyclicOrder order_from_json(const json& j);

json relation_to_json(const TernaryRelation& rel);
TernaryRelation relation_from_json(const json& j);

json point_map_to_json(const PointMap& f);
PointMap point_map_from_json(const json& j);

json angle_spec_to_json(const AngleSpec& spec);
AngleSpec angle_spec_from_json(const json& j, int default_precision = 60);

json split_to_json(const SplitOrder& s);

json validation_to_json(const ValidationReport& r);
json verdict_to_json(const VerdictReport& r);

json function_sample_to_json(const FunctionSample& f);
FunctionSample function_sample_from_json(const json& j);

// "golden" | "sqrt2m1" | decimal | p/q
Angle parse_angle(const std::string& text, int precision);
std::vector<Angle> parse_angle_list(const std::string& comma_separated,
                                    int precision);

// Point expressions: signed sums of decimal/rational offsets and integer
// multiples of the spec's angles, e.g. "0.25", "1-alpha", "3*alpha2+1/4",
// "golden". Named angles resolve to the spec slot carrying them.
CirclePoint parse_point(const RotationContext& ctx, const std::string& text);
std::vector<CirclePoint> parse_point_list(const RotationContext& ctx,
                                          const std::string& comma_separated);

// "a..b" inclusive
std::pair<long, long> parse_range(const std::string& text);

ArcCover parse_arcs(const RotationContext& ctx, const std::string& text);

}  // namespace cyclord::io
