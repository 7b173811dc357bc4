#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "frz/surface.hpp"
#include "frz/tubes.hpp"

namespace frz {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Triangulation file format (JSON): {"boundary_points": b, "arcs": [{"id":
// n, "ends": [endpoint, endpoint]}...], "triangles": [{"sides": [side,
// side, side]} | {"selffolded": {"loop": id, "radius": id}}...]} with
// endpoint {"boundary": i} | {"puncture": "P"|"Q"} and side {"arc": id} |
// {"segment": [i, i+1 mod b]}. Unknown fields are rejected.
DiskTriangulation parse_triangulation(const std::string& json_text);
DiskTriangulation load_triangulation(const std::filesystem::path& path);
std::string triangulation_to_json(const DiskTriangulation& t);

// Machine-readable tube report; parse(print(r)) == r.
std::string report_to_machine(const TubeReport& r);
TubeReport report_from_machine(const std::string& json_text);

std::string report_to_text(const TubeReport& r);

}  // namespace frz
