#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "frz/fence.hpp"
#include "frz/frieze.hpp"
#include "frz/numeric.hpp"

namespace frz {

class SurfaceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class PunctureId : unsigned char { P, Q };

inline PunctureId other(PunctureId p) { return p == PunctureId::P ? PunctureId::Q : PunctureId::P; }
inline char puncture_name(PunctureId p) { return p == PunctureId::P ? 'P' : 'Q'; }

// Marked point: a boundary vertex (1-based, counterclockwise) or a puncture.
class Endpoint {
 public:
  static Endpoint boundary(int v) { return Endpoint(v); }
  static Endpoint puncture(PunctureId p) { return Endpoint(p); }

  bool is_boundary() const { return std::holds_alternative<int>(v_); }
  bool is_puncture() const { return !is_boundary(); }
  int boundary_index() const { return std::get<int>(v_); }
  PunctureId puncture_id() const { return std::get<PunctureId>(v_); }

  bool operator==(const Endpoint&) const = default;
  std::string str() const;

 private:
  explicit Endpoint(int v) : v_(v) {}
  explicit Endpoint(PunctureId p) : v_(p) {}
  std::variant<int, PunctureId> v_;
};

using ArcId = int;

struct Arc {
  Endpoint end1;
  Endpoint end2;

  bool is_loop() const { return end1 == end2; }
  // Number of endpoints equal to the given marked point (a loop counts 2).
  int ends_at(const Endpoint& e) const { return (end1 == e ? 1 : 0) + (end2 == e ? 1 : 0); }

  bool operator==(const Arc&) const = default;
};

// One side slot of a triangle: an arc or the boundary segment start..start+1.
class SideRef {
 public:
  static SideRef arc(ArcId id) { return SideRef(id, true); }
  static SideRef segment(int start) { return SideRef(start, false); }

  bool is_arc() const { return is_arc_; }
  bool is_segment() const { return !is_arc_; }
  ArcId arc_id() const { return v_; }
  int segment_start() const { return v_; }

  bool operator==(const SideRef&) const = default;

 private:
  SideRef(int v, bool a) : v_(v), is_arc_(a) {}
  int v_;
  bool is_arc_;
};

struct PlainTriangle {
  std::array<SideRef, 3> sides;  // counterclockwise order
  bool operator==(const PlainTriangle&) const = default;
};

struct SelfFoldedTriangle {
  ArcId loop;
  ArcId radius;
  bool operator==(const SelfFoldedTriangle&) const = default;
};

using Triangle = std::variant<PlainTriangle, SelfFoldedTriangle>;

// Combinatorial triangulation of the twice-punctured disk with b >= 2
// boundary marked points: b+3 arcs glued into b+2 triangles.
struct DiskTriangulation {
  int boundary_points = 0;
  std::map<ArcId, Arc> arcs;
  std::vector<Triangle> triangles;

  int next_vertex(int v) const { return v % boundary_points + 1; }
  int prev_vertex(int v) const { return (v + boundary_points - 2) % boundary_points + 1; }

  bool operator==(const DiskTriangulation&) const = default;
};

struct ValidationReport {
  std::vector<std::string> violations;
  std::vector<std::string> notes;
  bool ok() const { return violations.empty(); }
};

// Checks all structural invariants: counts, slot usage, segment coverage,
// side chaining with segments walked forward, self-folded shape,
// connectivity. Notes flag boundary vertices with more than two loop-ends.
ValidationReport validate(const DiskTriangulation& t);

// Iterated ear clipping: removes every plain triangle with two boundary
// segment sides, turning its arc into a boundary segment, until none is
// left. Boundary vertices are renumbered. Idempotent.
DiskTriangulation strip_peripheral(const DiskTriangulation& t);

enum class CaseTag : unsigned char { I, II, III };

std::string case_str(CaseTag c);

struct Classification {
  CaseTag tag = CaseTag::I;
  // Case III only: the puncture carrying the loop of the self-folded
  // triangle. Degrees are normalized so p belongs to that puncture.
  std::optional<PunctureId> loop_at;
  int p = 0;
  int q = 0;
};

// Requires a valid, peripheral-free triangulation; p and q are arc-end
// counts at the punctures (loops counted twice). Throws SurfaceError when
// the preconditions or the per-case degree bounds fail.
Classification classify(const DiskTriangulation& t);

// a_i = number of arc-ends at boundary vertex i, plus one (loops at i
// contribute two ends). Peripheral arcs are permitted.
Quiddity boundary_quiddity(const DiskTriangulation& t);

// Case I: the fence word of the string of the puncture-connecting arc,
// read off the unique strip of triangles over the arcs with no puncture
// end. Cases II/III: nullopt. Throws SurfaceError when the restricted dual
// graph is not a single simple path covering those arcs.
std::optional<FenceWord> pq_string(const DiskTriangulation& t);

// ideal_count(pq_string) in case I; 1 in cases II and III.
Int a_value(const DiskTriangulation& t);

// The cyclic word whose band module sits at the mouth of a homogeneous
// tube: case I U_{p-1} ↘ W ↘ U_{q-1} ↘ W^{-1} with W = pq_string; case II
// U_{p-2} ↘ U_{q-2}; case III U_{p-4}.
CyclicWord band_word(const DiskTriangulation& t);

// Digraph of the quasi-simple module of the peripheral arc over boundary
// vertex i: the arc-end crossings at i in fan order, with each self-folded
// loop/radius visit collapsed to a parallel pair of vertices, and complete
// forward arrows between consecutive groups. nullopt when no arc ends at i
// (the zero module; its count is 1 by convention).
std::optional<Digraph> quasi_simple_digraph(const DiskTriangulation& t, int vertex);

// Deterministic builders for the three shapes. case_one takes the strip
// zigzag: Up advances the bottom endpoint, Down the top one; p or q equal
// to 1 closes that end with a self-folded triangle at the merged corner.
DiskTriangulation case_one_triangulation(int p, int q, const std::vector<Letter>& zigzag);
DiskTriangulation case_two_triangulation(int p, int q);
DiskTriangulation case_three_triangulation(int p, PunctureId loop_at = PunctureId::P);

struct GenParams {
  int b = 0;
  int p = 0;
  int q = 0;
};

// Deterministic in the seed. Emits a valid, peripheral-free triangulation:
// a random case I strip when p + q <= b + 2, and the direct case II / III
// constructions when p + q == b + 4. Throws SurfaceError on infeasible
// parameters.
DiskTriangulation random_triangulation(std::uint64_t seed, const GenParams& params);

}  // namespace frz
