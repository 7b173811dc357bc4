#pragma once

#include <algorithm>
#include <filesystem>
#include <string>

#include "frz/io.hpp"
#include "frz/surface.hpp"

namespace frz::testing {

inline DiskTriangulation load_fixture(const std::string& name) {
  return load_triangulation(std::filesystem::path(FRZ_FIXTURE_DIR) / name);
}

// Inserts a new boundary vertex after s, cutting the segment [s, s+1] off
// behind a fresh peripheral arc. Inverse of one ear-clipping step.
inline DiskTriangulation add_ear(const DiskTriangulation& t, int s) {
  DiskTriangulation out;
  out.boundary_points = t.boundary_points + 1;
  auto renum = [s](int x) { return x <= s ? x : x + 1; };

  ArcId z = 0;
  for (const auto& [id, arc] : t.arcs) z = std::max(z, id);
  ++z;

  for (const auto& [id, arc] : t.arcs) {
    auto move_end = [&](const Endpoint& e) {
      return e.is_boundary() ? Endpoint::boundary(renum(e.boundary_index())) : e;
    };
    out.arcs.emplace(id, Arc{move_end(arc.end1), move_end(arc.end2)});
  }
  out.arcs.emplace(z, Arc{Endpoint::boundary(s), Endpoint::boundary(renum(t.next_vertex(s)))});

  for (const Triangle& tri : t.triangles) {
    if (const auto* plain = std::get_if<PlainTriangle>(&tri)) {
      PlainTriangle p = *plain;
      for (SideRef& side : p.sides) {
        if (!side.is_segment()) continue;
        side = side.segment_start() == s ? SideRef::arc(z)
                                         : SideRef::segment(renum(side.segment_start()));
      }
      out.triangles.emplace_back(p);
    } else {
      out.triangles.push_back(tri);
    }
  }
  out.triangles.emplace_back(
      PlainTriangle{{SideRef::segment(s), SideRef::segment(s + 1), SideRef::arc(z)}});
  return out;
}

inline DiskTriangulation rotate_boundary(const DiskTriangulation& t, int shift) {
  DiskTriangulation out;
  out.boundary_points = t.boundary_points;
  auto renum = [&](int x) { return (x - 1 + shift) % t.boundary_points + 1; };
  for (const auto& [id, arc] : t.arcs) {
    auto move_end = [&](const Endpoint& e) {
      return e.is_boundary() ? Endpoint::boundary(renum(e.boundary_index())) : e;
    };
    out.arcs.emplace(id, Arc{move_end(arc.end1), move_end(arc.end2)});
  }
  for (const Triangle& tri : t.triangles) {
    if (const auto* plain = std::get_if<PlainTriangle>(&tri)) {
      PlainTriangle p = *plain;
      for (SideRef& side : p.sides)
        if (side.is_segment()) side = SideRef::segment(renum(side.segment_start()));
      out.triangles.emplace_back(p);
    } else {
      out.triangles.push_back(tri);
    }
  }
  return out;
}

inline DiskTriangulation swap_punctures(const DiskTriangulation& t) {
  DiskTriangulation out;
  out.boundary_points = t.boundary_points;
  auto move_end = [](const Endpoint& e) {
    return e.is_puncture() ? Endpoint::puncture(other(e.puncture_id())) : e;
  };
  for (const auto& [id, arc] : t.arcs)
    out.arcs.emplace(id, Arc{move_end(arc.end1), move_end(arc.end2)});
  out.triangles = t.triangles;
  return out;
}

}  // namespace frz::testing
