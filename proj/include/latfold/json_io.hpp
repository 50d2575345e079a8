#pragma once

#include <string>

#include <json.hpp>

#include "latfold/burst.hpp"
#include "latfold/ddc.hpp"

namespace latfold {

using nlohmann::json;

// Stable JSON schemas:
//   point            [x, y, ...]
//   shape            {"dim": D, "points": [[..], ...], "center": [..]}
//   lattice          {"dim": D, "gen": [[..], ...]}
//   b2 set           {"n": N, "elements": [..]}
//   dot pattern      {"shape": {..}, "dots": [[..], ...]}
//   periodic pattern {"period": [..], "dots": [[..], ...]}

json point_to_json(const Point& p);
Point point_from_json(const json& j);

json shape_to_json(const Shape& s);
Shape shape_from_json(const json& j);

json lattice_to_json(const Lattice& lat);
Lattice lattice_from_json(const json& j);

json b2_to_json(const B2Set& b);
B2Set b2_from_json(const json& j);

json dot_pattern_to_json(const DotPattern& dp);
DotPattern dot_pattern_from_json(const json& j);

json periodic_pattern_to_json(const PeriodicPattern& pp);
PeriodicPattern periodic_pattern_from_json(const json& j);

// code summary: dimensions or shape, field modulus, exponent map, padding,
// and the packed parity-check columns in cell order (hex strings)
json burst_code_to_json(const BurstCode& code);

std::string read_file(const std::string& path);

// Command-line argument helpers. JSON arguments may be given inline (first
// character '[' or '{') or as a path to a file holding the JSON.
json parse_json_arg(const std::string& arg);
Lattice parse_lattice_arg(const std::string& arg);
// accepts builder specs (rect:5,7 etc.) as well as JSON
Shape parse_shape_arg(const std::string& arg);
PeriodicPattern parse_pattern_arg(const std::string& arg);
B2Set parse_b2_arg(const std::string& arg);
// comma separated integers, e.g. "1,0" or "0,1,-1"
Point parse_point_arg(const std::string& arg);

}  // namespace latfold
