#include "frz/surface.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <utility>

namespace frz {

std::string Endpoint::str() const {
  if (is_boundary()) return std::to_string(boundary_index());
  return std::string(1, puncture_name(puncture_id()));
}

std::string case_str(CaseTag c) {
  switch (c) {
    case CaseTag::I: return "I";
    case CaseTag::II: return "II";
    default: return "III";
  }
}

namespace {

struct OrientedSide {
  SideRef ref;
  Endpoint from;
  Endpoint to;
};

// A triangle as a cyclic chain of oriented sides. Self-folded triangles
// unfold to [loop, radius, radius].
struct Chain {
  std::vector<OrientedSide> sides;  // always 3
  bool self_folded = false;
};

std::pair<Endpoint, Endpoint> side_endpoints(const DiskTriangulation& t, const SideRef& s) {
  if (s.is_segment()) {
    const int a = s.segment_start();
    return {Endpoint::boundary(a), Endpoint::boundary(t.next_vertex(a))};
  }
  const Arc& arc = t.arcs.at(s.arc_id());
  return {arc.end1, arc.end2};
}

// Orients the three stored sides into a closed walk. Segments anchor the
// orientation: they are walked forward (start -> start+1), which pins the
// stored order as counterclockwise against the boundary labels.
std::optional<Chain> chain_plain(const DiskTriangulation& t, const PlainTriangle& tri) {
  std::array<std::vector<std::pair<Endpoint, Endpoint>>, 3> options;
  for (int k = 0; k < 3; ++k) {
    auto [a, b] = side_endpoints(t, tri.sides[static_cast<std::size_t>(k)]);
    auto& opt = options[static_cast<std::size_t>(k)];
    opt.push_back({a, b});
    if (tri.sides[static_cast<std::size_t>(k)].is_arc() && !(a == b)) opt.push_back({b, a});
  }
  for (const auto& o0 : options[0])
    for (const auto& o1 : options[1])
      for (const auto& o2 : options[2]) {
        if (o0.second == o1.first && o1.second == o2.first && o2.second == o0.first) {
          Chain c;
          c.sides = {OrientedSide{tri.sides[0], o0.first, o0.second},
                     OrientedSide{tri.sides[1], o1.first, o1.second},
                     OrientedSide{tri.sides[2], o2.first, o2.second}};
          return c;
        }
      }
  return std::nullopt;
}

std::optional<Chain> chain_self_folded(const DiskTriangulation& t, const SelfFoldedTriangle& tri) {
  auto loop_it = t.arcs.find(tri.loop);
  auto rad_it = t.arcs.find(tri.radius);
  if (loop_it == t.arcs.end() || rad_it == t.arcs.end()) return std::nullopt;
  const Arc& loop = loop_it->second;
  const Arc& radius = rad_it->second;
  if (!loop.is_loop() || tri.loop == tri.radius) return std::nullopt;
  const Endpoint base = loop.end1;
  Endpoint punct = radius.end2;
  if (radius.end2 == base)
    punct = radius.end1;
  else if (!(radius.end1 == base))
    return std::nullopt;  // radius does not start at the loop base
  if (!punct.is_puncture() || punct == base) return std::nullopt;
  Chain c;
  c.self_folded = true;
  c.sides = {OrientedSide{SideRef::arc(tri.loop), base, base},
             OrientedSide{SideRef::arc(tri.radius), base, punct},
             OrientedSide{SideRef::arc(tri.radius), punct, base}};
  return c;
}

std::vector<Chain> build_chains(const DiskTriangulation& t) {
  std::vector<Chain> chains;
  chains.reserve(t.triangles.size());
  for (std::size_t k = 0; k < t.triangles.size(); ++k) {
    std::optional<Chain> c;
    if (const auto* plain = std::get_if<PlainTriangle>(&t.triangles[k]))
      c = chain_plain(t, *plain);
    else
      c = chain_self_folded(t, std::get<SelfFoldedTriangle>(t.triangles[k]));
    if (!c) throw SurfaceError("triangle #" + std::to_string(k) + " has inconsistent sides");
    chains.push_back(std::move(*c));
  }
  return chains;
}

struct Slot {
  int tri;
  int pos;
  bool operator==(const Slot&) const = default;
};

std::map<ArcId, std::vector<Slot>> slot_map(const std::vector<Chain>& chains) {
  std::map<ArcId, std::vector<Slot>> slots;
  for (std::size_t k = 0; k < chains.size(); ++k)
    for (int pos = 0; pos < 3; ++pos) {
      const SideRef& ref = chains[k].sides[static_cast<std::size_t>(pos)].ref;
      if (ref.is_arc()) slots[ref.arc_id()].push_back(Slot{static_cast<int>(k), pos});
    }
  return slots;
}

// Marked points touched by a triangle.
std::set<std::string> triangle_vertex_keys(const DiskTriangulation& t, const Triangle& tri) {
  std::set<std::string> keys;
  auto add = [&](const Endpoint& e) { keys.insert(e.str()); };
  if (const auto* plain = std::get_if<PlainTriangle>(&tri)) {
    for (const SideRef& s : plain->sides) {
      auto [a, b] = side_endpoints(t, s);
      add(a);
      add(b);
    }
  } else {
    const auto& sf = std::get<SelfFoldedTriangle>(tri);
    const Arc& loop = t.arcs.at(sf.loop);
    const Arc& radius = t.arcs.at(sf.radius);
    add(loop.end1);
    add(radius.end1);
    add(radius.end2);
  }
  return keys;
}

bool triangle_touches(const DiskTriangulation& t, const Triangle& tri, PunctureId p) {
  const Endpoint e = Endpoint::puncture(p);
  if (const auto* plain = std::get_if<PlainTriangle>(&tri)) {
    for (const SideRef& s : plain->sides) {
      if (!s.is_arc()) continue;
      const Arc& a = t.arcs.at(s.arc_id());
      if (a.end1 == e || a.end2 == e) return true;
    }
    return false;
  }
  const auto& sf = std::get<SelfFoldedTriangle>(tri);
  const Arc& loop = t.arcs.at(sf.loop);
  const Arc& radius = t.arcs.at(sf.radius);
  return loop.end1 == e || radius.end1 == e || radius.end2 == e;
}

int segment_side_count(const PlainTriangle& tri) {
  int n = 0;
  for (const SideRef& s : tri.sides) n += s.is_segment() ? 1 : 0;
  return n;
}

// Ordered arc crossings of the fan sweep around boundary vertex i, from the
// segment ending at i to the segment starting at i.
std::vector<ArcId> sweep_at_vertex(const DiskTriangulation& t, const std::vector<Chain>& chains,
                                   const std::map<ArcId, std::vector<Slot>>& slots, int i) {
  const Endpoint vi = Endpoint::boundary(i);
  const int start_seg = t.prev_vertex(i);
  int tri = -1, pos = -1;
  for (std::size_t k = 0; k < chains.size() && tri < 0; ++k)
    for (int p = 0; p < 3; ++p) {
      const SideRef& ref = chains[k].sides[static_cast<std::size_t>(p)].ref;
      if (ref.is_segment() && ref.segment_start() == start_seg) {
        tri = static_cast<int>(k);
        pos = p;
        break;
      }
    }
  if (tri < 0) throw SurfaceError("boundary segment before vertex " + std::to_string(i) +
                                  " is not used by any triangle");

  std::vector<ArcId> out;
  std::size_t guard = 6 * t.triangles.size() + 6;
  while (guard-- > 0) {
    const OrientedSide& exit = chains[static_cast<std::size_t>(tri)]
                                   .sides[static_cast<std::size_t>((pos + 1) % 3)];
    if (exit.ref.is_segment()) {
      if (exit.ref.segment_start() != i)
        throw SurfaceError("fan at vertex " + std::to_string(i) +
                           " ends at the wrong boundary segment");
      return out;
    }
    const ArcId a = exit.ref.arc_id();
    out.push_back(a);
    const auto& sl = slots.at(a);
    if (sl.size() != 2) throw SurfaceError("arc " + std::to_string(a) + " does not fill 2 slots");
    const Slot here{tri, (pos + 1) % 3};
    const Slot next = (sl[0] == here) ? sl[1] : sl[0];
    if (!(chains[static_cast<std::size_t>(next.tri)]
              .sides[static_cast<std::size_t>(next.pos)]
              .to == vi))
      throw SurfaceError("fan walk at vertex " + std::to_string(i) + " left the vertex");
    tri = next.tri;
    pos = next.pos;
  }
  throw SurfaceError("fan walk at vertex " + std::to_string(i) + " does not terminate");
}

std::map<ArcId, ArcId> self_folded_radii(const DiskTriangulation& t) {
  std::map<ArcId, ArcId> sf;
  for (const Triangle& tri : t.triangles)
    if (const auto* s = std::get_if<SelfFoldedTriangle>(&tri)) sf[s->loop] = s->radius;
  return sf;
}

int ends_at_boundary_vertex(const DiskTriangulation& t, int v) {
  const Endpoint e = Endpoint::boundary(v);
  int n = 0;
  for (const auto& [id, arc] : t.arcs) n += arc.ends_at(e);
  return n;
}

}  // namespace

ValidationReport validate(const DiskTriangulation& t) {
  ValidationReport rep;
  auto bad = [&rep](std::string msg) { rep.violations.push_back(std::move(msg)); };

  const int b = t.boundary_points;
  if (b < 2) bad("boundary must carry at least 2 marked points, has " + std::to_string(b));
  if (b < 1) return rep;

  bool refs_ok = true;
  for (const auto& [id, arc] : t.arcs)
    for (const Endpoint& e : {arc.end1, arc.end2})
      if (e.is_boundary() && (e.boundary_index() < 1 || e.boundary_index() > b)) {
        bad("arc " + std::to_string(id) + " has boundary endpoint out of range");
        refs_ok = false;
      }

  for (std::size_t k = 0; k < t.triangles.size(); ++k) {
    const std::string tri_name = "triangle #" + std::to_string(k);
    if (const auto* plain = std::get_if<PlainTriangle>(&t.triangles[k])) {
      for (const SideRef& s : plain->sides) {
        if (s.is_arc() && !t.arcs.count(s.arc_id())) {
          bad(tri_name + " references missing arc " + std::to_string(s.arc_id()));
          refs_ok = false;
        }
        if (s.is_segment() && (s.segment_start() < 1 || s.segment_start() > b)) {
          bad(tri_name + " references boundary segment out of range");
          refs_ok = false;
        }
      }
      if (refs_ok && (plain->sides[0] == plain->sides[1] || plain->sides[1] == plain->sides[2] ||
                      plain->sides[0] == plain->sides[2]))
        bad(tri_name + " repeats a side; fold it into a self-folded triangle");
    } else {
      const auto& sf = std::get<SelfFoldedTriangle>(t.triangles[k]);
      if (!t.arcs.count(sf.loop) || !t.arcs.count(sf.radius)) {
        bad(tri_name + " references a missing arc");
        refs_ok = false;
      } else if (!chain_self_folded(t, sf)) {
        bad(tri_name + " is not a loop around a radius ending at a puncture");
        refs_ok = false;
      }
    }
  }
  if (!refs_ok) return rep;

  const int expected_arcs = b + 3;
  if (static_cast<int>(t.arcs.size()) != expected_arcs)
    bad("expected " + std::to_string(expected_arcs) + " arcs, found " +
        std::to_string(t.arcs.size()));
  const int expected_triangles = b + 2;
  if (static_cast<int>(t.triangles.size()) != expected_triangles)
    bad("expected " + std::to_string(expected_triangles) + " triangles, found " +
        std::to_string(t.triangles.size()));

  // Segment coverage and arc slot usage.
  std::map<int, int> seg_use;
  std::map<ArcId, int> arc_use;
  for (const Triangle& tri : t.triangles) {
    if (const auto* plain = std::get_if<PlainTriangle>(&tri)) {
      for (const SideRef& s : plain->sides) {
        if (s.is_segment())
          seg_use[s.segment_start()] += 1;
        else
          arc_use[s.arc_id()] += 1;
      }
    } else {
      const auto& sf = std::get<SelfFoldedTriangle>(tri);
      arc_use[sf.loop] += 1;
      arc_use[sf.radius] += 2;
    }
  }
  for (int v = 1; v <= b; ++v) {
    const int n = seg_use.count(v) ? seg_use[v] : 0;
    if (n != 1)
      bad("boundary segment [" + std::to_string(v) + "," + std::to_string(t.next_vertex(v)) +
          "] fills " + std::to_string(n) + " sides, expected 1");
  }
  for (const auto& [id, arc] : t.arcs) {
    const int n = arc_use.count(id) ? arc_use[id] : 0;
    if (n != 2) bad("arc " + std::to_string(id) + " fills " + std::to_string(n) +
                    " sides, expected 2");
  }

  bool chains_ok = true;
  for (std::size_t k = 0; k < t.triangles.size(); ++k)
    if (const auto* plain = std::get_if<PlainTriangle>(&t.triangles[k]))
      if (!chain_plain(t, *plain)) {
        bad("triangle #" + std::to_string(k) +
            " sides do not close up counterclockwise (segments walk forward)");
        chains_ok = false;
      }

  // The two triangles on an arc must walk it in opposite directions;
  // otherwise some triangle is stored clockwise.
  if (chains_ok && rep.ok()) {
    const std::vector<Chain> chains = build_chains(t);
    const auto slots = slot_map(chains);
    for (const auto& [id, sl] : slots) {
      if (sl.size() != 2) continue;
      const OrientedSide& s0 = chains[static_cast<std::size_t>(sl[0].tri)]
                                   .sides[static_cast<std::size_t>(sl[0].pos)];
      const OrientedSide& s1 = chains[static_cast<std::size_t>(sl[1].tri)]
                                   .sides[static_cast<std::size_t>(sl[1].pos)];
      if (s0.from == s0.to) continue;  // loops carry no direction information
      if (!(s0.from == s1.to && s0.to == s1.from))
        bad("arc " + std::to_string(id) +
            " is walked the same way by both of its triangles (one is clockwise)");
    }
  }

  // Connectivity over shared arcs.
  if (!t.triangles.empty()) {
    std::vector<int> parent(t.triangles.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] =
            parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
      }
      return x;
    };
    std::map<ArcId, std::vector<int>> arc_tris;
    for (std::size_t k = 0; k < t.triangles.size(); ++k) {
      if (const auto* plain = std::get_if<PlainTriangle>(&t.triangles[k])) {
        for (const SideRef& s : plain->sides)
          if (s.is_arc()) arc_tris[s.arc_id()].push_back(static_cast<int>(k));
      } else {
        const auto& sf = std::get<SelfFoldedTriangle>(t.triangles[k]);
        arc_tris[sf.loop].push_back(static_cast<int>(k));
        arc_tris[sf.radius].push_back(static_cast<int>(k));
      }
    }
    for (const auto& [id, tris] : arc_tris)
      for (std::size_t j = 1; j < tris.size(); ++j)
        parent[static_cast<std::size_t>(find(tris[j]))] = find(tris[0]);
    const int root = find(0);
    for (std::size_t k = 1; k < t.triangles.size(); ++k)
      if (find(static_cast<int>(k)) != root) {
        bad("triangulation is not connected");
        break;
      }
  }

  // Beyond two loop-ends at one vertex the quiddity rule leaves the charted
  // configurations; keep the count but point it out.
  for (int v = 1; v <= b; ++v) {
    int loop_ends = 0;
    for (const auto& [id, arc] : t.arcs)
      if (arc.is_loop() && arc.end1 == Endpoint::boundary(v)) loop_ends += 2;
    if (loop_ends > 2)
      rep.notes.push_back("vertex " + std::to_string(v) + " carries " +
                          std::to_string(loop_ends) + " loop-ends; review the fan by hand");
  }
  return rep;
}

DiskTriangulation strip_peripheral(const DiskTriangulation& input) {
  DiskTriangulation t = input;
  for (;;) {
    int ear = -1;
    for (std::size_t k = 0; k < t.triangles.size(); ++k)
      if (const auto* plain = std::get_if<PlainTriangle>(&t.triangles[k]))
        if (segment_side_count(*plain) == 2) {
          ear = static_cast<int>(k);
          break;
        }
    if (ear < 0) return t;

    const auto& tri = std::get<PlainTriangle>(t.triangles[static_cast<std::size_t>(ear)]);
    int seg_a = -1, seg_b = -1;
    SideRef third = tri.sides[0];
    for (const SideRef& s : tri.sides) {
      if (s.is_segment()) {
        (seg_a < 0 ? seg_a : seg_b) = s.segment_start();
      } else {
        third = s;
      }
    }
    if (!third.is_arc()) throw SurfaceError("ear triangle with three boundary sides");
    // The clipped vertex sits between the two segments.
    int v;
    if (t.next_vertex(seg_a) == seg_b)
      v = seg_b;
    else if (t.next_vertex(seg_b) == seg_a)
      v = seg_a;
    else
      throw SurfaceError("ear triangle with non-adjacent boundary segments");
    const int u = t.prev_vertex(v);
    const ArcId z = third.arc_id();
    {
      const Arc& za = t.arcs.at(z);
      const Endpoint ev = Endpoint::boundary(v);
      if (za.end1 == ev || za.end2 == ev)
        throw SurfaceError("ear arc ends at the clipped vertex");
      for (const auto& [id, arc] : t.arcs)
        if (id != z && (arc.end1 == ev || arc.end2 == ev))
          throw SurfaceError("arc ends at a clipped ear vertex");
    }

    auto renum = [v](int x) { return x < v ? x : x - 1; };
    DiskTriangulation next;
    next.boundary_points = t.boundary_points - 1;
    for (const auto& [id, arc] : t.arcs) {
      if (id == z) continue;
      auto move_end = [&](const Endpoint& e) {
        return e.is_boundary() ? Endpoint::boundary(renum(e.boundary_index())) : e;
      };
      next.arcs.emplace(id, Arc{move_end(arc.end1), move_end(arc.end2)});
    }
    for (std::size_t k = 0; k < t.triangles.size(); ++k) {
      if (static_cast<int>(k) == ear) continue;
      if (const auto* plain = std::get_if<PlainTriangle>(&t.triangles[k])) {
        PlainTriangle out = *plain;
        for (SideRef& s : out.sides) {
          if (s.is_segment())
            s = SideRef::segment(renum(s.segment_start()));
          else if (s.arc_id() == z)
            s = SideRef::segment(renum(u));  // the ear arc becomes boundary
        }
        next.triangles.emplace_back(out);
      } else {
        next.triangles.push_back(t.triangles[k]);
      }
    }
    t = std::move(next);
  }
}

Quiddity boundary_quiddity(const DiskTriangulation& t) {
  std::vector<Int> entries;
  entries.reserve(static_cast<std::size_t>(t.boundary_points));
  for (int v = 1; v <= t.boundary_points; ++v)
    entries.emplace_back(ends_at_boundary_vertex(t, v) + 1);
  return Quiddity(std::move(entries));
}

Classification classify(const DiskTriangulation& t) {
  {
    ValidationReport rep = validate(t);
    if (!rep.ok()) throw SurfaceError("classify requires a valid triangulation: " +
                                      rep.violations.front());
  }
  for (const Triangle& tri : t.triangles)
    if (const auto* plain = std::get_if<PlainTriangle>(&tri))
      if (segment_side_count(*plain) >= 2)
        throw SurfaceError("classify requires a peripheral-free triangulation; strip ears first");

  auto degree = [&](PunctureId p) {
    const Endpoint e = Endpoint::puncture(p);
    int n = 0;
    for (const auto& [id, arc] : t.arcs) n += arc.ends_at(e);
    return n;
  };
  const int deg_p = degree(PunctureId::P);
  const int deg_q = degree(PunctureId::Q);
  if (deg_p < 1 || deg_q < 1)
    throw SurfaceError("every puncture must meet at least one arc");

  Classification cls;
  std::optional<PunctureId> sf_loop_at;
  for (const Triangle& tri : t.triangles)
    if (const auto* sf = std::get_if<SelfFoldedTriangle>(&tri)) {
      const Arc& radius = t.arcs.at(sf->radius);
      if (radius.end1.is_puncture() && radius.end2.is_puncture())
        sf_loop_at = t.arcs.at(sf->loop).end1.puncture_id();
    }
  bool pq_arc = false;
  for (const auto& [id, arc] : t.arcs)
    if (arc.end1.is_puncture() && arc.end2.is_puncture() && !(arc.end1 == arc.end2)) pq_arc = true;

  if (sf_loop_at) {
    cls.tag = CaseTag::III;
    cls.loop_at = *sf_loop_at;
    cls.p = *sf_loop_at == PunctureId::P ? deg_p : deg_q;
    cls.q = *sf_loop_at == PunctureId::P ? deg_q : deg_p;
    if (cls.p < 6 || cls.q != 1)
      throw SurfaceError("case III needs p >= 6 and q == 1, found p=" + std::to_string(cls.p) +
                         " q=" + std::to_string(cls.q));
  } else if (pq_arc) {
    cls.tag = CaseTag::II;
    cls.p = deg_p;
    cls.q = deg_q;
    if (cls.p < 3 || cls.q < 3)
      throw SurfaceError("case II needs p,q >= 3, found p=" + std::to_string(cls.p) +
                         " q=" + std::to_string(cls.q));
  } else {
    cls.tag = CaseTag::I;
    cls.p = deg_p;
    cls.q = deg_q;
  }
  return cls;
}

std::optional<FenceWord> pq_string(const DiskTriangulation& t) {
  const Classification cls = classify(t);
  if (cls.tag != CaseTag::I) return std::nullopt;

  std::vector<ArcId> c_arcs;
  for (const auto& [id, arc] : t.arcs)
    if (arc.end1.is_boundary() && arc.end2.is_boundary()) c_arcs.push_back(id);
  if (c_arcs.empty())
    throw SurfaceError("case I triangulation without crossing arcs");

  // Restricted dual graph: triangles as nodes, crossing arcs as edges.
  std::map<ArcId, std::vector<int>> flanks;
  for (std::size_t k = 0; k < t.triangles.size(); ++k) {
    if (const auto* plain = std::get_if<PlainTriangle>(&t.triangles[k])) {
      for (const SideRef& s : plain->sides)
        if (s.is_arc() && t.arcs.at(s.arc_id()).end1.is_boundary() &&
            t.arcs.at(s.arc_id()).end2.is_boundary())
          flanks[s.arc_id()].push_back(static_cast<int>(k));
    } else {
      const auto& sf = std::get<SelfFoldedTriangle>(t.triangles[k]);
      const Arc& loop = t.arcs.at(sf.loop);
      if (loop.end1.is_boundary()) flanks[sf.loop].push_back(static_cast<int>(k));
    }
  }
  std::map<int, std::vector<std::pair<ArcId, int>>> adj;  // tri -> (arc, other tri)
  for (ArcId id : c_arcs) {
    auto it = flanks.find(id);
    if (it == flanks.end() || it->second.size() != 2 || it->second[0] == it->second[1])
      throw SurfaceError("crossing arc " + std::to_string(id) + " does not join two triangles");
    adj[it->second[0]].push_back({id, it->second[1]});
    adj[it->second[1]].push_back({id, it->second[0]});
  }
  std::vector<int> endpoints;
  for (const auto& [tri, edges] : adj) {
    if (edges.size() > 2)
      throw SurfaceError("crossing arcs do not form a strip (triangle with 3 crossing sides)");
    if (edges.size() == 1) endpoints.push_back(tri);
  }
  if (endpoints.size() != 2)
    throw SurfaceError("crossing arcs do not form a single strip");

  const bool e0p = triangle_touches(t, t.triangles[static_cast<std::size_t>(endpoints[0])],
                                    PunctureId::P);
  const bool e1p = triangle_touches(t, t.triangles[static_cast<std::size_t>(endpoints[1])],
                                    PunctureId::P);
  const bool e0q = triangle_touches(t, t.triangles[static_cast<std::size_t>(endpoints[0])],
                                    PunctureId::Q);
  const bool e1q = triangle_touches(t, t.triangles[static_cast<std::size_t>(endpoints[1])],
                                    PunctureId::Q);
  int start;
  if (e0p && e1q && !e0q)
    start = endpoints[0];
  else if (e1p && e0q && !e1q)
    start = endpoints[1];
  else
    throw SurfaceError("strip ends are not one triangle at each puncture");

  // Walk the strip from the P side.
  std::vector<int> tri_path{start};
  std::vector<ArcId> arc_path;
  std::set<ArcId> used;
  int cur = start;
  while (true) {
    const auto& edges = adj.at(cur);
    std::optional<std::pair<ArcId, int>> step;
    for (const auto& e : edges)
      if (!used.count(e.first)) {
        if (step) throw SurfaceError("strip walk is ambiguous");
        step = e;
      }
    if (!step) break;
    used.insert(step->first);
    arc_path.push_back(step->first);
    cur = step->second;
    tri_path.push_back(cur);
  }
  if (arc_path.size() != c_arcs.size())
    throw SurfaceError("strip does not cover every crossing arc");
  if (cur != (start == endpoints[0] ? endpoints[1] : endpoints[0]))
    throw SurfaceError("strip walk did not reach the far puncture");

  // Letters: one per pass-through triangle, from the stored ccw side order.
  std::vector<Letter> letters;
  for (std::size_t i = 1; i + 1 < tri_path.size(); ++i) {
    const auto* plain =
        std::get_if<PlainTriangle>(&t.triangles[static_cast<std::size_t>(tri_path[i])]);
    if (!plain) throw SurfaceError("self-folded triangle inside the strip");
    int entry = -1, exit = -1;
    for (int pos = 0; pos < 3; ++pos) {
      const SideRef& s = plain->sides[static_cast<std::size_t>(pos)];
      if (!s.is_arc()) continue;
      if (s.arc_id() == arc_path[i - 1]) entry = pos;
      if (s.arc_id() == arc_path[i]) exit = pos;
    }
    if (entry < 0 || exit < 0) throw SurfaceError("strip triangle lost its crossing sides");
    letters.push_back(exit == (entry + 1) % 3 ? Letter::Down : Letter::Up);
  }
  return FenceWord(std::move(letters));
}

Int a_value(const DiskTriangulation& t) {
  const auto word = pq_string(t);
  return word ? ideal_count(*word) : Int(1);
}

CyclicWord band_word(const DiskTriangulation& t) {
  const Classification cls = classify(t);
  const std::size_t p = static_cast<std::size_t>(cls.p);
  const std::size_t q = static_cast<std::size_t>(cls.q);
  switch (cls.tag) {
    case CaseTag::I: {
      const FenceWord w = *pq_string(t);
      return CyclicWord{FenceWord::u_run(p - 1)
                            .linked(w)
                            .linked(FenceWord::u_run(q - 1))
                            .linked(w.inverted())};
    }
    case CaseTag::II:
      return CyclicWord{FenceWord::u_run(p - 2).linked(FenceWord::u_run(q - 2))};
    default:
      return CyclicWord{FenceWord::u_run(p - 4)};
  }
}

std::optional<Digraph> quasi_simple_digraph(const DiskTriangulation& t, int vertex) {
  if (vertex < 1 || vertex > t.boundary_points)
    throw std::invalid_argument("boundary vertex out of range");
  const std::vector<Chain> chains = build_chains(t);
  const auto slots = slot_map(chains);
  const std::vector<ArcId> seq = sweep_at_vertex(t, chains, slots, vertex);
  if (seq.empty()) return std::nullopt;

  const auto sf = self_folded_radii(t);
  std::vector<int> group_sizes;
  for (std::size_t j = 0; j < seq.size();) {
    auto it = sf.find(seq[j]);
    if (it != sf.end()) {
      if (j + 2 >= seq.size() || seq[j + 1] != it->second || seq[j + 2] != seq[j])
        throw SurfaceError("self-folded fan at vertex " + std::to_string(vertex) +
                           " is out of pattern");
      group_sizes.push_back(2);  // loop and radius become a parallel pair
      j += 3;
    } else {
      group_sizes.push_back(1);
      j += 1;
    }
  }

  const int n = std::accumulate(group_sizes.begin(), group_sizes.end(), 0);
  Digraph g(n);
  int base = 0;
  for (std::size_t k = 0; k + 1 < group_sizes.size(); ++k) {
    const int next_base = base + group_sizes[k];
    for (int a = 0; a < group_sizes[k]; ++a)
      for (int b2 = 0; b2 < group_sizes[k + 1]; ++b2) g.add_arrow(base + a, next_base + b2);
    base = next_base;
  }
  return g;
}

}  // namespace frz
