#include "frz/tubes.hpp"

#include <stdexcept>

#include "frz/fence.hpp"

namespace frz {

namespace {

int norm1(int v, int n) { return (v % n + n - 1) % n + 1; }  // into 1..n

}  // namespace

int coord_travel(const PeripheralArcCoord& c, int n_minus_2) {
  const int step = ((c.v_t - c.v_s) % n_minus_2 + n_minus_2) % n_minus_2;
  return step + c.l * n_minus_2;
}

bool coord_valid(const PeripheralArcCoord& c, int n_minus_2) {
  if (n_minus_2 < 2 || c.l < 0) return false;
  if (c.v_s < 1 || c.v_s > n_minus_2 || c.v_t < 1 || c.v_t > n_minus_2) return false;
  return coord_travel(c, n_minus_2) >= 2;
}

PeripheralArcCoord tau_peripheral(const PeripheralArcCoord& c, int n_minus_2) {
  return {norm1(c.v_s - 1, n_minus_2), norm1(c.v_t - 1, n_minus_2), c.l};
}

std::optional<PeripheralArcCoord> mesh_step(const PeripheralArcCoord& c, MeshDirection dir,
                                            int n_minus_2) {
  if (!coord_valid(c, n_minus_2)) throw std::invalid_argument("invalid peripheral arc coordinate");
  const int n = n_minus_2;
  if (dir == MeshDirection::Lengthen) {
    const int vt = norm1(c.v_t + 1, n);
    if (vt == c.v_s) return PeripheralArcCoord{c.v_s, vt, c.l + 1};
    return PeripheralArcCoord{c.v_s, vt, c.l};
  }
  // Shorten is undefined at the mouth of the tube.
  if (coord_travel(c, n) == 2) return std::nullopt;
  const int vs = norm1(c.v_s + 1, n);
  if (c.l > 0 && c.v_t == c.v_s) return PeripheralArcCoord{vs, c.v_t, c.l - 1};
  return PeripheralArcCoord{vs, c.v_t, c.l};
}

TaggedPQArc tau_tagged(TaggedPQArc x) {
  switch (x) {
    case TaggedPQArc::Plain: return TaggedPQArc::NotchedBoth;
    case TaggedPQArc::NotchedBoth: return TaggedPQArc::Plain;
    case TaggedPQArc::NotchedAtP: return TaggedPQArc::NotchedAtQ;
    default: return TaggedPQArc::NotchedAtP;
  }
}

std::string tagged_str(TaggedPQArc x) {
  switch (x) {
    case TaggedPQArc::Plain: return "plain";
    case TaggedPQArc::NotchedAtP: return "notched at P";
    case TaggedPQArc::NotchedAtQ: return "notched at Q";
    default: return "notched at both";
  }
}

std::pair<Quiddity, Quiddity> small_tube_quiddities(const Int& a, const Int& p, const Int& q) {
  if (a < 1 || p < 1 || q < 1)
    throw std::invalid_argument("small_tube_quiddities needs a,p,q >= 1");
  return {Quiddity({a, a * p * q}), Quiddity({a * p, a * q})};
}

Int growth_formula(const Int& a, const Int& p, const Int& q) {
  if (a < 1 || p < 1 || q < 1) throw std::invalid_argument("growth_formula needs a,p,q >= 1");
  return a * a * p * q - 2;
}

GrowthSlot empirical_growth_slot(const Quiddity& q) {
  try {
    return GrowthSlot{growth(q), ""};
  } catch (const FriezeError& e) {
    return GrowthSlot{std::nullopt, std::string("degenerate: ") + e.what()};
  }
}

TubeReport tube_report(const DiskTriangulation& t) {
  TubeReport rep;
  rep.boundary_points = t.boundary_points;

  {
    const ValidationReport v = validate(t);
    if (!v.ok()) {
      rep.error_stage = "validate";
      rep.error_detail = v.violations.front();
      return rep;
    }
  }

  const DiskTriangulation stripped = strip_peripheral(t);
  rep.stripped_boundary_points = stripped.boundary_points;
  {
    const ValidationReport v = validate(stripped);
    if (!v.ok()) {
      rep.error_stage = "strip";
      rep.error_detail = v.violations.front();
      return rep;
    }
  }

  Classification cls;
  try {
    cls = classify(stripped);
  } catch (const SurfaceError& e) {
    rep.error_stage = "classify";
    rep.error_detail = e.what();
    return rep;
  }
  rep.tag = cls.tag;
  rep.loop_at = cls.loop_at;
  rep.p = cls.p;
  rep.q = cls.q;

  try {
    rep.a = a_value(stripped);
  } catch (const SurfaceError& e) {
    rep.error_stage = "pq-string";
    rep.error_detail = e.what();
    return rep;
  }

  // The boundary quiddity of the input triangulation is the quiddity of
  // the big tube; ear removal preserves its growth coefficient.
  rep.quid1 = boundary_quiddity(t);
  auto [q2, q3] = small_tube_quiddities(rep.a, rep.p, rep.q);
  rep.quid2 = q2;
  rep.quid3 = q3;

  rep.growth_formula = growth_formula(rep.a, rep.p, rep.q);
  const BandCount band = band_count(band_word(stripped));
  rep.growth_band = GrowthSlot{band.count, ""};
  rep.band_degenerate = band.degenerate;

  rep.growth_empirical1 = empirical_growth_slot(*rep.quid1);
  rep.growth_empirical2 = empirical_growth_slot(*rep.quid2);
  rep.growth_empirical3 = empirical_growth_slot(*rep.quid3);
  rep.homogeneous_growth =
      rep.growth_formula >= 1
          ? empirical_growth_slot(Quiddity({rep.growth_formula}))
          : GrowthSlot{std::nullopt, "degenerate: homogeneous quiddity is not positive"};

  rep.all_equal = true;
  for (const GrowthSlot* slot :
       {&rep.growth_band, &rep.growth_empirical1, &rep.growth_empirical2, &rep.growth_empirical3,
        &rep.homogeneous_growth})
    if (!slot->value || *slot->value != rep.growth_formula) rep.all_equal = false;
  return rep;
}

}  // namespace frz
