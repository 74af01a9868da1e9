#pragma once

#include <string>
#include <vector>

#include "coquartic/tritensor/surface.hpp"
#include "json.hpp"

namespace coq {

using Json = nlohmann::ordered_json;

/// {"m": [[["p/q" x4] x4] x4]} indexed m[i][j][k].
Json tritensor_to_json(const Tritensor& t);
/// Throws ParseError naming the offending axis or entry.
Tritensor tritensor_from_json(const Json& j);

/// File forms of the above. `source` labels diagnostics.
Tritensor parse_tritensor(const std::string& path);
void emit_tritensor(const Tritensor& t, const std::string& path);

/// {"points": [["p/q" x4], ...]}
std::vector<RationalPoint> parse_points(const std::string& path);
Json points_to_json(const std::vector<RationalPoint>& points);

/// One polynomial in the text format, whole file.
MultiPoly parse_poly_file(const std::string& path);

/// Reads and parses a JSON document; ParseError carries line and column.
Json read_json(const std::string& path);
/// Pretty-printed with two-space indent and a trailing newline. Path "-"
/// or empty writes to stdout.
void write_json(const Json& j, const std::string& path);

}  // namespace coq
