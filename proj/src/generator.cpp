#include <algorithm>
#include <random>
#include <vector>

#include "frz/surface.hpp"

namespace frz {

namespace {

std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

Endpoint bnd(int v) { return Endpoint::boundary(v); }
Endpoint punct(PunctureId p) { return Endpoint::puncture(p); }

}  // namespace

// Case I normal form: a fan of p arcs at P on the left, a fan of q arcs at
// Q on the right, and a strip of triangles over the crossing arcs whose
// zigzag is the given letter sequence (Up advances the bottom boundary
// path, Down the top one). p == 1 or q == 1 closes that end with a
// self-folded triangle whose loop is the outermost crossing arc.
DiskTriangulation case_one_triangulation(int p, int q, const std::vector<Letter>& zigzag) {
  if (p < 1 || q < 1) throw SurfaceError("case I needs p,q >= 1");
  const int s = static_cast<int>(std::count(zigzag.begin(), zigzag.end(), Letter::Up));
  const int t_steps = static_cast<int>(zigzag.size()) - s;
  const int b = s + t_steps + p + q - 2;
  if (b < 2) throw SurfaceError("case I parameters give fewer than 2 boundary points");
  const int m = s + t_steps + 1;

  // Boundary numbering, counterclockwise: bottom path, then the fan run at
  // Q, the top path right to left, and the fan run at P. A fan of size one
  // merges its corner into the adjacent paths.
  std::vector<int> bot(static_cast<std::size_t>(s) + 1);
  std::vector<int> top(static_cast<std::size_t>(t_steps) + 1);
  std::vector<int> e_run(static_cast<std::size_t>(std::max(q - 2, 0)) + 1);
  std::vector<int> d_run(static_cast<std::size_t>(std::max(p - 2, 0)) + 1);
  if (p == 1 && q == 1) {
    // Both corners merge into the boundary circle; the two paths tile it.
    for (int j = 0; j <= s; ++j) bot[static_cast<std::size_t>(j)] = j % b + 1;
    for (int l = 0; l <= t_steps; ++l)
      top[static_cast<std::size_t>(l)] = (s + t_steps - l) % b + 1;
  } else {
    int cursor = 1;
    bot[0] = 1;
    for (int j = 1; j <= s; ++j) bot[static_cast<std::size_t>(j)] = ++cursor;
    if (q >= 2)
      for (int j = 1; j <= q - 2; ++j) e_run[static_cast<std::size_t>(j)] = ++cursor;
    if (q == 1)
      top[static_cast<std::size_t>(t_steps)] = bot[static_cast<std::size_t>(s)];
    else if (t_steps == 0 && p == 1)
      top[0] = bot[0];
    else
      top[static_cast<std::size_t>(t_steps)] = ++cursor;
    for (int l = t_steps - 1; l >= 1; --l) top[static_cast<std::size_t>(l)] = ++cursor;
    if (t_steps >= 1) top[0] = (p == 1) ? bot[0] : ++cursor;
    if (p >= 2)
      for (int j = 1; j <= p - 2; ++j) d_run[static_cast<std::size_t>(j)] = ++cursor;
    if (cursor != b) throw SurfaceError("case I numbering is inconsistent");
  }

  DiskTriangulation t;
  t.boundary_points = b;
  ArcId next_id = 0;
  auto add_arc = [&](Endpoint a, Endpoint b2) {
    t.arcs.emplace(++next_id, Arc{a, b2});
    return next_id;
  };

  // Arcs at P. With p == 1 the crossing arc c_1 is the loop itself.
  std::vector<ArcId> d(static_cast<std::size_t>(p) + 1);
  ArcId p_loop = 0, p_radius = 0;
  if (p >= 2) {
    d[1] = add_arc(bnd(top[0]), punct(PunctureId::P));
    for (int j = 2; j <= p - 1; ++j)
      d[static_cast<std::size_t>(j)] =
          add_arc(bnd(d_run[static_cast<std::size_t>(j - 1)]), punct(PunctureId::P));
    d[static_cast<std::size_t>(p)] = add_arc(bnd(bot[0]), punct(PunctureId::P));
  } else {
    p_radius = add_arc(bnd(bot[0]), punct(PunctureId::P));
    p_loop = add_arc(bnd(bot[0]), bnd(bot[0]));
  }

  std::vector<ArcId> e(static_cast<std::size_t>(q) + 1);
  ArcId q_loop = 0, q_radius = 0;
  if (q >= 2) {
    e[1] = add_arc(bnd(bot[static_cast<std::size_t>(s)]), punct(PunctureId::Q));
    for (int j = 2; j <= q - 1; ++j)
      e[static_cast<std::size_t>(j)] =
          add_arc(bnd(e_run[static_cast<std::size_t>(j - 1)]), punct(PunctureId::Q));
    e[static_cast<std::size_t>(q)] =
        add_arc(bnd(top[static_cast<std::size_t>(t_steps)]), punct(PunctureId::Q));
  } else {
    const int vr = bot[static_cast<std::size_t>(s)];
    q_radius = add_arc(bnd(vr), punct(PunctureId::Q));
    q_loop = add_arc(bnd(vr), bnd(vr));
  }

  std::vector<ArcId> c(static_cast<std::size_t>(m) + 1);
  {
    int bi = 0, ti = 0;
    if (p == 1)
      c[1] = p_loop;
    else if (m == 1 && q == 1)
      c[1] = q_loop;
    else
      c[1] = add_arc(bnd(bot[0]), bnd(top[0]));
    for (int k = 1; k < m; ++k) {
      if (zigzag[static_cast<std::size_t>(k - 1)] == Letter::Up)
        ++bi;
      else
        ++ti;
      if (k + 1 == m && q == 1)
        c[static_cast<std::size_t>(k + 1)] = q_loop;
      else
        c[static_cast<std::size_t>(k + 1)] = add_arc(bnd(bot[static_cast<std::size_t>(bi)]),
                                                     bnd(top[static_cast<std::size_t>(ti)]));
    }
  }

  auto plain = [&](SideRef a, SideRef b2, SideRef c2) {
    t.triangles.emplace_back(PlainTriangle{{a, b2, c2}});
  };
  auto seg = [](int v) { return SideRef::segment(v); };
  auto arc = [](ArcId id) { return SideRef::arc(id); };

  if (p >= 2) {
    plain(arc(c[1]), arc(d[1]), arc(d[static_cast<std::size_t>(p)]));
    // fan triangles along the run top[0], d_run..., bot[0]
    std::vector<int> run{top[0]};
    for (int j = 1; j <= p - 2; ++j) run.push_back(d_run[static_cast<std::size_t>(j)]);
    run.push_back(bot[0]);
    for (int j = 1; j <= p - 1; ++j)
      plain(seg(run[static_cast<std::size_t>(j - 1)]), arc(d[static_cast<std::size_t>(j + 1)]),
            arc(d[static_cast<std::size_t>(j)]));
  } else {
    t.triangles.emplace_back(SelfFoldedTriangle{p_loop, p_radius});
  }

  {
    int bi = 0, ti = 0;
    for (int k = 1; k < m; ++k) {
      if (zigzag[static_cast<std::size_t>(k - 1)] == Letter::Up) {
        plain(seg(bot[static_cast<std::size_t>(bi)]), arc(c[static_cast<std::size_t>(k + 1)]),
              arc(c[static_cast<std::size_t>(k)]));
        ++bi;
      } else {
        ++ti;
        plain(arc(c[static_cast<std::size_t>(k + 1)]), seg(top[static_cast<std::size_t>(ti)]),
              arc(c[static_cast<std::size_t>(k)]));
      }
    }
  }

  if (q >= 2) {
    plain(arc(e[1]), arc(e[static_cast<std::size_t>(q)]), arc(c[static_cast<std::size_t>(m)]));
    std::vector<int> run{bot[static_cast<std::size_t>(s)]};
    for (int j = 1; j <= q - 2; ++j) run.push_back(e_run[static_cast<std::size_t>(j)]);
    run.push_back(top[static_cast<std::size_t>(t_steps)]);
    for (int j = 1; j <= q - 1; ++j)
      plain(seg(run[static_cast<std::size_t>(j - 1)]), arc(e[static_cast<std::size_t>(j + 1)]),
            arc(e[static_cast<std::size_t>(j)]));
  } else {
    t.triangles.emplace_back(SelfFoldedTriangle{q_loop, q_radius});
  }

  return t;
}

DiskTriangulation case_two_triangulation(int p, int q) {
  if (p < 3 || q < 3) throw SurfaceError("case II needs p,q >= 3");
  const int b = p + q - 4;
  if (b < 2) throw SurfaceError("case II parameters give fewer than 2 boundary points");

  DiskTriangulation t;
  t.boundary_points = b;
  ArcId next_id = 0;
  auto add_arc = [&](Endpoint a, Endpoint b2) {
    t.arcs.emplace(++next_id, Arc{a, b2});
    return next_id;
  };
  const ArcId g = add_arc(punct(PunctureId::P), punct(PunctureId::Q));
  std::vector<ArcId> d(static_cast<std::size_t>(p));
  for (int k = 1; k <= p - 1; ++k)
    d[static_cast<std::size_t>(k)] = add_arc(bnd(k), punct(PunctureId::P));
  std::vector<ArcId> e(static_cast<std::size_t>(q));
  std::vector<int> ev(static_cast<std::size_t>(q));
  for (int k = 1; k <= q - 1; ++k) {
    ev[static_cast<std::size_t>(k)] = (p - 2 + k - 1) % b + 1;
    e[static_cast<std::size_t>(k)] = add_arc(bnd(ev[static_cast<std::size_t>(k)]),
                                             punct(PunctureId::Q));
  }

  auto plain = [&](SideRef a, SideRef b2, SideRef c2) {
    t.triangles.emplace_back(PlainTriangle{{a, b2, c2}});
  };
  for (int k = 1; k <= p - 2; ++k)
    plain(SideRef::segment(k), SideRef::arc(d[static_cast<std::size_t>(k + 1)]),
          SideRef::arc(d[static_cast<std::size_t>(k)]));
  for (int k = 1; k <= q - 2; ++k)
    plain(SideRef::segment(ev[static_cast<std::size_t>(k)]),
          SideRef::arc(e[static_cast<std::size_t>(k + 1)]),
          SideRef::arc(e[static_cast<std::size_t>(k)]));
  plain(SideRef::arc(d[static_cast<std::size_t>(p - 1)]), SideRef::arc(e[1]), SideRef::arc(g));
  plain(SideRef::arc(e[static_cast<std::size_t>(q - 1)]), SideRef::arc(d[1]), SideRef::arc(g));
  return t;
}

DiskTriangulation case_three_triangulation(int p, PunctureId loop_at) {
  if (p < 6) throw SurfaceError("case III needs p >= 6");
  const int b = p - 4;
  const PunctureId inner = other(loop_at);

  DiskTriangulation t;
  t.boundary_points = b;
  ArcId next_id = 0;
  auto add_arc = [&](Endpoint a, Endpoint b2) {
    t.arcs.emplace(++next_id, Arc{a, b2});
    return next_id;
  };
  const ArcId loop = add_arc(punct(loop_at), punct(loop_at));
  const ArcId radius = add_arc(punct(loop_at), punct(inner));
  std::vector<ArcId> d(static_cast<std::size_t>(b) + 2);
  for (int k = 1; k <= b; ++k) d[static_cast<std::size_t>(k)] = add_arc(bnd(k), punct(loop_at));
  d[static_cast<std::size_t>(b + 1)] = add_arc(bnd(1), punct(loop_at));

  t.triangles.emplace_back(SelfFoldedTriangle{loop, radius});
  for (int k = 1; k <= b; ++k)
    t.triangles.emplace_back(PlainTriangle{{SideRef::segment(k),
                                            SideRef::arc(d[static_cast<std::size_t>(k + 1)]),
                                            SideRef::arc(d[static_cast<std::size_t>(k)])}});
  t.triangles.emplace_back(PlainTriangle{
      {SideRef::arc(d[1]), SideRef::arc(loop), SideRef::arc(d[static_cast<std::size_t>(b + 1)])}});
  return t;
}

DiskTriangulation random_triangulation(std::uint64_t seed, const GenParams& params) {
  const int b = params.b, p = params.p, q = params.q;
  if (b < 2 || p < 1 || q < 1)
    throw SurfaceError("generator needs b >= 2 and p,q >= 1");
  if (p + q <= b + 2) {
    std::mt19937_64 rng(seed);
    const int k = b + 2 - p - q;
    const int s = static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(k) + 1));
    std::vector<Letter> zigzag(static_cast<std::size_t>(s), Letter::Up);
    zigzag.resize(static_cast<std::size_t>(k), Letter::Down);
    for (std::size_t i = zigzag.size(); i > 1; --i)
      std::swap(zigzag[i - 1], zigzag[rand_below(rng, i)]);
    return case_one_triangulation(p, q, zigzag);
  }
  if (p + q == b + 4 && p >= 3 && q >= 3) return case_two_triangulation(p, q);
  if (p + q == b + 5) {
    if (q == 1 && p >= 6) return case_three_triangulation(p, PunctureId::P);
    if (p == 1 && q >= 6) return case_three_triangulation(q, PunctureId::Q);
  }
  throw SurfaceError("no twice-punctured disk with b=" + std::to_string(b) +
                     " p=" + std::to_string(p) + " q=" + std::to_string(q));
}

}  // namespace frz
