#include "frz/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace frz {

namespace {

using Json = nlohmann::ordered_json;

void require_keys(const Json& obj, const char* what,
                  std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) throw ParseError(std::string(what) + " must be a JSON object");
  for (const auto& item : obj.items()) {
    bool ok = false;
    for (const char* key : allowed)
      if (item.key() == key) ok = true;
    if (!ok) throw ParseError(std::string("unknown field \"") + item.key() + "\" in " + what);
  }
}

const Json& require_field(const Json& obj, const char* what, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end())
    throw ParseError(std::string(what) + " is missing the \"" + key + "\" field");
  return *it;
}

int as_int(const Json& v, const char* what) {
  if (!v.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return v.get<int>();
}

Endpoint parse_endpoint(const Json& j) {
  require_keys(j, "endpoint", {"boundary", "puncture"});
  if (j.size() != 1) throw ParseError("endpoint must have exactly one of boundary/puncture");
  if (j.contains("boundary")) return Endpoint::boundary(as_int(j["boundary"], "boundary index"));
  const auto& p = j["puncture"];
  if (p == "P") return Endpoint::puncture(PunctureId::P);
  if (p == "Q") return Endpoint::puncture(PunctureId::Q);
  throw ParseError("puncture must be \"P\" or \"Q\"");
}

Json endpoint_json(const Endpoint& e) {
  Json j;
  if (e.is_boundary())
    j["boundary"] = e.boundary_index();
  else
    j["puncture"] = std::string(1, puncture_name(e.puncture_id()));
  return j;
}

SideRef parse_side(const Json& j, int boundary_points) {
  require_keys(j, "side", {"arc", "segment"});
  if (j.size() != 1) throw ParseError("side must have exactly one of arc/segment");
  if (j.contains("arc")) return SideRef::arc(as_int(j["arc"], "arc id"));
  const auto& seg = j["segment"];
  if (!seg.is_array() || seg.size() != 2) throw ParseError("segment must be a pair [i, j]");
  const int i = as_int(seg[0], "segment start");
  const int j2 = as_int(seg[1], "segment end");
  if (boundary_points < 1 || i < 1 || i > boundary_points || j2 != i % boundary_points + 1)
    throw ParseError("segment [" + std::to_string(i) + "," + std::to_string(j2) +
                     "] is not a boundary segment [i, i+1 mod b]");
  return SideRef::segment(i);
}

Json side_json(const SideRef& s, int boundary_points) {
  Json j;
  if (s.is_arc())
    j["arc"] = s.arc_id();
  else
    j["segment"] = Json::array({s.segment_start(), s.segment_start() % boundary_points + 1});
  return j;
}

Int parse_int_string(const Json& v, const char* what) {
  if (!v.is_string()) throw ParseError(std::string(what) + " must be a decimal string");
  try {
    return Int(v.get<std::string>());
  } catch (const std::exception&) {
    throw ParseError(std::string(what) + " is not a valid integer");
  }
}

Json quiddity_json(const Quiddity& q) {
  Json arr = Json::array();
  for (const Int& a : q.entries()) arr.push_back(a.str());
  return arr;
}

Quiddity parse_quiddity_json(const Json& arr, const char* what) {
  if (!arr.is_array() || arr.empty())
    throw ParseError(std::string(what) + " must be a non-empty array");
  std::vector<Int> entries;
  for (const auto& v : arr) entries.push_back(parse_int_string(v, what));
  return Quiddity(std::move(entries));
}

Json slot_json(const GrowthSlot& s) {
  Json j;
  j["value"] = s.value ? Json(s.value->str()) : Json(nullptr);
  j["note"] = s.note;
  return j;
}

GrowthSlot parse_slot(const Json& j, const char* what) {
  require_keys(j, what, {"value", "note"});
  GrowthSlot s;
  const auto& v = require_field(j, what, "value");
  if (!v.is_null()) s.value = parse_int_string(v, what);
  s.note = require_field(j, what, "note").get<std::string>();
  return s;
}

}  // namespace

DiskTriangulation parse_triangulation(const std::string& json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("triangulation file is not valid JSON: ") + e.what());
  }
  require_keys(j, "triangulation", {"boundary_points", "arcs", "triangles"});
  DiskTriangulation t;
  t.boundary_points = as_int(require_field(j, "triangulation", "boundary_points"),
                             "boundary_points");

  const Json& arcs = require_field(j, "triangulation", "arcs");
  if (!arcs.is_array()) throw ParseError("arcs must be an array");
  for (const auto& a : arcs) {
    require_keys(a, "arc", {"id", "ends"});
    const int id = as_int(require_field(a, "arc", "id"), "arc id");
    const Json& ends = require_field(a, "arc", "ends");
    if (!ends.is_array() || ends.size() != 2)
      throw ParseError("arc ends must be a pair of endpoints");
    if (!t.arcs.emplace(id, Arc{parse_endpoint(ends[0]), parse_endpoint(ends[1])}).second)
      throw ParseError("duplicate arc id " + std::to_string(id));
  }

  const Json& tris = require_field(j, "triangulation", "triangles");
  if (!tris.is_array()) throw ParseError("triangles must be an array");
  for (const auto& tr : tris) {
    require_keys(tr, "triangle", {"sides", "selffolded"});
    if (tr.size() != 1) throw ParseError("triangle must have exactly one of sides/selffolded");
    if (tr.contains("sides")) {
      const Json& sides = tr["sides"];
      if (!sides.is_array() || sides.size() != 3)
        throw ParseError("triangle sides must be an array of three");
      PlainTriangle pt{{parse_side(sides[0], t.boundary_points),
                        parse_side(sides[1], t.boundary_points),
                        parse_side(sides[2], t.boundary_points)}};
      t.triangles.emplace_back(pt);
    } else {
      const Json& sf = tr["selffolded"];
      require_keys(sf, "selffolded", {"loop", "radius"});
      t.triangles.emplace_back(SelfFoldedTriangle{as_int(require_field(sf, "selffolded", "loop"),
                                                         "loop"),
                                                  as_int(require_field(sf, "selffolded", "radius"),
                                                         "radius")});
    }
  }
  return t;
}

DiskTriangulation load_triangulation(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_triangulation(buf.str());
}

std::string triangulation_to_json(const DiskTriangulation& t) {
  Json j;
  j["boundary_points"] = t.boundary_points;
  Json arcs = Json::array();
  for (const auto& [id, arc] : t.arcs) {
    Json a;
    a["id"] = id;
    a["ends"] = Json::array({endpoint_json(arc.end1), endpoint_json(arc.end2)});
    arcs.push_back(std::move(a));
  }
  j["arcs"] = std::move(arcs);
  Json tris = Json::array();
  for (const Triangle& tri : t.triangles) {
    Json tj;
    if (const auto* plain = std::get_if<PlainTriangle>(&tri)) {
      tj["sides"] = Json::array({side_json(plain->sides[0], t.boundary_points),
                                 side_json(plain->sides[1], t.boundary_points),
                                 side_json(plain->sides[2], t.boundary_points)});
    } else {
      const auto& sf = std::get<SelfFoldedTriangle>(tri);
      tj["selffolded"] = Json{{"loop", sf.loop}, {"radius", sf.radius}};
    }
    tris.push_back(std::move(tj));
  }
  j["triangles"] = std::move(tris);
  return j.dump(2) + "\n";
}

std::string report_to_machine(const TubeReport& r) {
  Json j;
  j["error_stage"] = r.error_stage;
  j["error_detail"] = r.error_detail;
  j["case"] = r.failed() ? Json(nullptr) : Json(case_str(r.tag));
  j["loop_at"] = r.loop_at ? Json(std::string(1, puncture_name(*r.loop_at))) : Json(nullptr);
  j["boundary_points"] = r.boundary_points;
  j["stripped_boundary_points"] = r.stripped_boundary_points;
  j["p"] = r.p;
  j["q"] = r.q;
  j["a"] = r.a.str();
  j["quiddity_tube1"] = r.quid1 ? quiddity_json(*r.quid1) : Json(nullptr);
  j["quiddity_tube2"] = r.quid2 ? quiddity_json(*r.quid2) : Json(nullptr);
  j["quiddity_tube3"] = r.quid3 ? quiddity_json(*r.quid3) : Json(nullptr);
  j["growth_formula"] = r.growth_formula.str();
  j["growth_band"] = slot_json(r.growth_band);
  j["band_degenerate"] = r.band_degenerate;
  j["growth_tube1"] = slot_json(r.growth_empirical1);
  j["growth_tube2"] = slot_json(r.growth_empirical2);
  j["growth_tube3"] = slot_json(r.growth_empirical3);
  j["growth_homogeneous"] = slot_json(r.homogeneous_growth);
  j["all_equal"] = r.all_equal;
  return j.dump() + "\n";
}

TubeReport report_from_machine(const std::string& json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("report is not valid JSON: ") + e.what());
  }
  require_keys(j, "report",
               {"error_stage", "error_detail", "case", "loop_at", "boundary_points",
                "stripped_boundary_points", "p", "q", "a", "quiddity_tube1", "quiddity_tube2",
                "quiddity_tube3", "growth_formula", "growth_band", "band_degenerate",
                "growth_tube1", "growth_tube2", "growth_tube3", "growth_homogeneous",
                "all_equal"});
  TubeReport r;
  r.error_stage = require_field(j, "report", "error_stage").get<std::string>();
  r.error_detail = require_field(j, "report", "error_detail").get<std::string>();
  const Json& c = require_field(j, "report", "case");
  if (!c.is_null()) {
    const std::string s = c.get<std::string>();
    r.tag = s == "I" ? CaseTag::I : s == "II" ? CaseTag::II : CaseTag::III;
  }
  const Json& la = require_field(j, "report", "loop_at");
  if (!la.is_null()) r.loop_at = la.get<std::string>() == "P" ? PunctureId::P : PunctureId::Q;
  r.boundary_points = as_int(require_field(j, "report", "boundary_points"), "boundary_points");
  r.stripped_boundary_points =
      as_int(require_field(j, "report", "stripped_boundary_points"), "stripped_boundary_points");
  r.p = as_int(require_field(j, "report", "p"), "p");
  r.q = as_int(require_field(j, "report", "q"), "q");
  r.a = parse_int_string(require_field(j, "report", "a"), "a");
  for (auto [key, field] : {std::pair<const char*, std::optional<Quiddity>*>{"quiddity_tube1",
                                                                             &r.quid1},
                            {"quiddity_tube2", &r.quid2},
                            {"quiddity_tube3", &r.quid3}}) {
    const Json& v = require_field(j, "report", key);
    if (!v.is_null()) *field = parse_quiddity_json(v, key);
  }
  r.growth_formula = parse_int_string(require_field(j, "report", "growth_formula"),
                                      "growth_formula");
  r.growth_band = parse_slot(require_field(j, "report", "growth_band"), "growth_band");
  r.band_degenerate = require_field(j, "report", "band_degenerate").get<bool>();
  r.growth_empirical1 = parse_slot(require_field(j, "report", "growth_tube1"), "growth_tube1");
  r.growth_empirical2 = parse_slot(require_field(j, "report", "growth_tube2"), "growth_tube2");
  r.growth_empirical3 = parse_slot(require_field(j, "report", "growth_tube3"), "growth_tube3");
  r.homogeneous_growth =
      parse_slot(require_field(j, "report", "growth_homogeneous"), "growth_homogeneous");
  r.all_equal = require_field(j, "report", "all_equal").get<bool>();
  return r;
}

std::string report_to_text(const TubeReport& r) {
  std::ostringstream out;
  if (r.failed()) {
    out << "error at stage " << r.error_stage << ": " << r.error_detail << "\n";
    return out.str();
  }
  out << "case: " << case_str(r.tag);
  if (r.loop_at) out << " (loop at " << puncture_name(*r.loop_at) << ")";
  out << "\n";
  out << "boundary points: " << r.boundary_points << " (peripheral-free: "
      << r.stripped_boundary_points << ")\n";
  out << "p: " << r.p << "  q: " << r.q << "  a: " << r.a.str() << "\n";
  out << "tube 1 quiddity: " << r.quid1->str() << "\n";
  out << "tube 2 quiddity: " << r.quid2->str() << "\n";
  out << "tube 3 quiddity: " << r.quid3->str() << "\n";
  auto slot = [](const GrowthSlot& s) { return s.value ? s.value->str() : "- (" + s.note + ")"; };
  out << "growth, formula a^2*p*q-2:  " << r.growth_formula.str() << "\n";
  out << "growth, band trace:         " << slot(r.growth_band)
      << (r.band_degenerate ? "  [degenerate band]" : "") << "\n";
  out << "growth, tube 1 frieze:      " << slot(r.growth_empirical1) << "\n";
  out << "growth, tube 2 frieze:      " << slot(r.growth_empirical2) << "\n";
  out << "growth, tube 3 frieze:      " << slot(r.growth_empirical3) << "\n";
  out << "growth, homogeneous tubes:  " << slot(r.homogeneous_growth) << "\n";
  out << "all equal: " << (r.all_equal ? "yes" : "no") << "\n";
  return out.str();
}

}  // namespace frz
