#pragma once

#include <optional>
#include <string>
#include <utility>

#include "frz/frieze.hpp"
#include "frz/numeric.hpp"
#include "frz/surface.hpp"

namespace frz {

// Coordinate of a peripheral generalized arc: start and target boundary
// vertices (1-based mod n-2) and winding count l >= 0. The arc must travel
// at least two boundary steps counterclockwise, counting full turns.
struct PeripheralArcCoord {
  int v_s = 0;
  int v_t = 0;
  int l = 0;
  bool operator==(const PeripheralArcCoord&) const = default;
};

// Counterclockwise travel in boundary steps, ((v_t - v_s) mod n-2) + l*(n-2).
int coord_travel(const PeripheralArcCoord& c, int n_minus_2);
bool coord_valid(const PeripheralArcCoord& c, int n_minus_2);

// AR translate on peripheral arcs: both endpoints move clockwise by one.
PeripheralArcCoord tau_peripheral(const PeripheralArcCoord& c, int n_minus_2);

enum class MeshDirection : unsigned char { Lengthen, Shorten };

// One irreducible-map step in the rank n-2 tube. Lengthen advances the
// target endpoint (bumping l when it passes the start); Shorten advances
// the start endpoint (dropping l when it passes the target) and is absent
// at the mouth, where the travel is exactly two steps.
std::optional<PeripheralArcCoord> mesh_step(const PeripheralArcCoord& c, MeshDirection dir,
                                            int n_minus_2);

// The four tagged arcs joining the two punctures (quasi-simples of the two
// rank 2 tubes).
enum class TaggedPQArc : unsigned char { Plain, NotchedAtP, NotchedAtQ, NotchedBoth };

// tau swaps Plain <-> NotchedBoth and NotchedAtP <-> NotchedAtQ.
TaggedPQArc tau_tagged(TaggedPQArc x);

std::string tagged_str(TaggedPQArc x);

// Quiddity sequences (a, apq) and (ap, aq) of the two rank 2 tubes.
std::pair<Quiddity, Quiddity> small_tube_quiddities(const Int& a, const Int& p, const Int& q);

// a^2 * p * q - 2.
Int growth_formula(const Int& a, const Int& p, const Int& q);

// A growth value, or a note naming why it is unavailable (degenerate
// quiddity that fails to generate an infinite frieze).
struct GrowthSlot {
  std::optional<Int> value;
  std::string note;
  bool operator==(const GrowthSlot&) const = default;
};

// Frieze growth of the quiddity as a slot (FriezeError becomes a note).
GrowthSlot empirical_growth_slot(const Quiddity& q);

struct TubeReport {
  // Set when a pipeline stage failed; all later fields are then default.
  std::string error_stage;
  std::string error_detail;

  CaseTag tag = CaseTag::I;
  std::optional<PunctureId> loop_at;
  int boundary_points = 0;
  int stripped_boundary_points = 0;
  int p = 0;
  int q = 0;
  Int a = 0;

  std::optional<Quiddity> quid1, quid2, quid3;

  Int growth_formula = 0;
  GrowthSlot growth_band;
  bool band_degenerate = false;
  GrowthSlot growth_empirical1, growth_empirical2, growth_empirical3;
  GrowthSlot homogeneous_growth;

  bool all_equal = false;

  bool failed() const { return !error_stage.empty(); }
  bool operator==(const TubeReport&) const = default;
};

// Strips peripherals, classifies, and computes the growth coefficient of
// every tube along independent routes: the formula a^2pq-2, the band-word
// trace, and the frieze growths of the boundary quiddity (of the input
// triangulation, peripheral arcs included) and of the two small-tube
// quiddities, plus the homogeneous-tube value. all_equal is set when every
// slot carries the formula value. Stage errors are carried in the report.
TubeReport tube_report(const DiskTriangulation& t);

}  // namespace frz
