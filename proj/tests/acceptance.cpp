// Acceptance suite: runs every checked claim end to end and prints one
// pass/fail line per criterion. Exit code is the number of failures.

#include <algorithm>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "frz/cli.hpp"
#include "frz/fence.hpp"
#include "frz/frieze.hpp"
#include "frz/io.hpp"
#include "frz/surface.hpp"
#include "frz/tubes.hpp"
#include "helpers.hpp"

using namespace frz;
using frz::testing::load_fixture;

namespace {

struct Checker {
  int failures = 0;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      ++failures;
      detail << "    " << what << "\n";
    }
  }
};

bool same_cyclic_multiset(std::vector<Int> a, std::vector<Int> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

std::vector<Int> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

FenceWord random_word(std::mt19937_64& rng, std::size_t max_len) {
  const std::size_t len = rng() % (max_len + 1);
  std::vector<Letter> letters(len);
  for (Letter& l : letters) l = (rng() & 1) ? Letter::Up : Letter::Down;
  return FenceWord(std::move(letters));
}

void criterion_frieze_reproduction(Checker& c) {
  const Frieze f = generate(Quiddity::parse("4,2,2"), 5);
  c.require(same_cyclic_multiset(f.row(2), ints({7, 7, 3})), "(4,2,2) row 2");
  c.require(same_cyclic_multiset(f.row(3), ints({12, 10, 10})), "(4,2,2) row 3");
  c.require(same_cyclic_multiset(f.row(4), ints({17, 17, 33})), "(4,2,2) row 4");
  c.require(same_cyclic_multiset(f.row(5), ints({24, 56, 56})), "(4,2,2) row 5");
  const Frieze g = generate(Quiddity::parse("5,2"), 4);
  c.require(same_cyclic_multiset(g.row(2), ints({9, 9})), "(5,2) row 2");
  c.require(same_cyclic_multiset(g.row(3), ints({16, 40})), "(5,2) row 3");
  c.require(same_cyclic_multiset(g.row(4), ints({71, 71})), "(5,2) row 4");
}

void criterion_growth_values(Checker& c) {
  c.require(growth(Quiddity::parse("4,2,2")) == 8, "growth (4,2,2)");
  c.require(growth(Quiddity::parse("5,2")) == 8, "growth (5,2)");
  c.require(growth(Quiddity::parse("2,3")) == 4, "growth (2,3)");
  c.require(growth(Quiddity::parse("2,3,2,3")) == 14, "growth (2,3,2,3)");
  c.require(chebyshev_growth(4, 2) == 14, "chebyshev s_2(4)");
  c.require(growth(Quiddity::parse("4")) == 4, "growth (4)");
  c.require(growth(Quiddity::parse("5")) == 5, "growth (5)");
  c.require(growth(Quiddity::parse("6")) == 6, "growth (6)");
}

void criterion_rank_matrices(Checker& c) {
  const FenceWord w = FenceWord::parse("DDUD");
  c.require(ideal_count(w) == 11, "ideal count DDUD");
  c.require(nabla(w) == RankMatrix(11, -7, 8, -5, MatrixForm::Specialized), "nabla DDUD");
  c.require(delta(w) == RankMatrix(7, 4, 5, 3, MatrixForm::Dual), "delta DDUD");
  const RankMatrix left = nabla(FenceWord::parse("D"));
  const RankMatrix right = nabla(FenceWord::parse("UD"));
  c.require(left == RankMatrix(3, -2, 2, -1, MatrixForm::Specialized), "nabla D");
  c.require(right == RankMatrix(5, -3, 2, -1, MatrixForm::Specialized), "nabla UD");
  c.require(left * right == nabla(w), "link product D . UD = DDUD");
}

void criterion_oracle_equivalence(Checker& c) {
  std::mt19937_64 rng(1001);
  for (int i = 0; i < 1000; ++i) {
    const FenceWord w = random_word(rng, 18);
    const RankMatrix n = nabla(w);
    const RankMatrix d = delta(w);
    bool ok = n.at(0, 0) == closed_subset_count(fence_digraph(w), 19);
    ok = ok && n.det() == 1 && d.det() == 1;
    ok = ok && nabla_to_delta(n) == d;
    ok = ok && nabla_of_inverse(n) == nabla(w.inverted());
    ok = ok && ideal_count(w) == ideal_count(w.inverted());
    ok = ok && ideal_count(w) == ideal_count(w.flipped());
    c.require(ok, "word " + w.str());
    if (!ok) return;
  }
}

void criterion_trace_identity(Checker& c) {
  std::mt19937_64 rng(1002);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t p = 1 + rng() % 6;
    const std::size_t q = 1 + rng() % 6;
    const FenceWord w = random_word(rng, 5);  // cyclic digraph stays under the cap
    const Int a = ideal_count(w);
    const Int expected = a * a * Int(p) * Int(q) - 2;
    const RankMatrix prod = nabla(FenceWord::u_run(p - 1)) * nabla(w) *
                            nabla(FenceWord::u_run(q - 1)) * nabla(w.inverted());
    const CyclicWord band{FenceWord::u_run(p - 1)
                              .linked(w)
                              .linked(FenceWord::u_run(q - 1))
                              .linked(w.inverted())};
    bool ok = prod.trace() == expected;
    ok = ok && band_count(band).count == expected;
    ok = ok && closed_subset_count(cyclic_digraph(band)) == expected;
    c.require(ok, "p=" + std::to_string(p) + " q=" + std::to_string(q) + " W=" + w.str());
    if (!ok) return;
  }
}

void criterion_conway_coxeter(Checker& c) {
  std::mt19937_64 rng(1003);
  for (int i = 0; i < 200; ++i) {
    const int n = 4 + static_cast<int>(rng() % 9);
    std::vector<std::pair<int, int>> diagonals;
    auto rec = [&](auto&& self, int lo, int hi) -> void {
      if (hi - lo < 2) return;
      const int mid = lo + 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo - 1));
      if (mid - lo >= 2 && !(lo == 1 && mid == n)) diagonals.emplace_back(lo, mid);
      if (hi - mid >= 2 && !(mid == 1 && hi == n)) diagonals.emplace_back(mid, hi);
      self(self, lo, mid);
      self(self, mid, hi);
    };
    rec(rec, 1, n);
    const Frieze f = generate(polygon_quiddity(n, diagonals), n);
    bool ok = f.status().state == FriezeState::Closed && f.status().row == n - 2;
    for (int r = 1; ok && r < n - 2; ++r)
      for (const Int& v : f.row(r)) ok = ok && v > 0;
    c.require(ok, "n=" + std::to_string(n));
    if (!ok) return;
  }
}

void criterion_fixture_reports(Checker& c) {
  const TubeReport two = tube_report(load_fixture("case2_minimal.json"));
  c.require(!two.failed() && two.tag == CaseTag::II && two.p == 3 && two.q == 3 && two.a == 1,
            "case II classification");
  c.require(two.quid1 && two.quid1->entries() == ints({3, 3}) &&
                two.quid2->entries() == ints({1, 9}) && two.quid3->entries() == ints({3, 3}),
            "case II quiddities");
  c.require(two.growth_formula == 7 && two.all_equal, "case II growth 7 everywhere");

  const TubeReport three = tube_report(load_fixture("case3_minimal.json"));
  c.require(!three.failed() && three.tag == CaseTag::III && three.p == 6 && three.q == 1 &&
                three.a == 1,
            "case III classification");
  c.require(three.quid1 && three.quid1->entries() == ints({3, 2}) &&
                three.quid2->entries() == ints({1, 6}) && three.quid3->entries() == ints({6, 1}),
            "case III quiddities");
  c.require(three.growth_formula == 4 && three.all_equal, "case III growth 4 everywhere");

  const TubeReport big = tube_report(load_fixture("disk_71422.json"));
  c.require(!big.failed() && big.quid2->entries() == ints({3, 12}) &&
                big.quid3->entries() == ints({3, 12}),
            "(7,1,4,2,2) small tube quiddities");
  c.require(big.growth_formula == 34 && big.all_equal, "(7,1,4,2,2) growth 34 everywhere");
}

void criterion_randomized_verification(Checker& c) {
  std::ostringstream out, err;
  DiskVerifyCmd cmd;
  cmd.random = 100;
  cmd.seed = 42;
  const int code = run(Command{cmd}, out, err);
  c.require(code == 0, "disk verify --random 100 --seed 42 exited " + std::to_string(code));
}

void criterion_quiddity_lemma(Checker& c) {
  auto check_triangulation = [&c](const DiskTriangulation& t, const std::string& label) {
    const Quiddity q = boundary_quiddity(t);
    for (int v = 1; v <= t.boundary_points; ++v) {
      const auto g = quasi_simple_digraph(t, v);
      const Int count = g ? closed_subset_count(*g) : Int(1);
      c.require(count == q.entries()[static_cast<std::size_t>(v - 1)],
                label + " vertex " + std::to_string(v));
    }
  };
  for (const char* name : {"case2_minimal.json", "case3_minimal.json", "disk_71422.json"})
    check_triangulation(load_fixture(name), name);
  std::mt19937_64 rng(1009);
  for (int i = 0; i < 50; ++i) {
    const int b = 2 + static_cast<int>(rng() % 7);
    const int p = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(b + 1));
    const int q = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(b + 2 - p));
    check_triangulation(random_triangulation(rng(), GenParams{b, p, q}),
                        "instance " + std::to_string(i));
  }
}

void criterion_navigation(Checker& c) {
  std::mt19937_64 rng(1010);
  for (int i = 0; i < 100; ++i) {
    const int n = 2 + static_cast<int>(rng() % 29);
    PeripheralArcCoord coord{0, 0, 0};
    do {
      coord = {1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n)),
               1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n)),
               static_cast<int>(rng() % 4)};
    } while (!coord_valid(coord, n));
    PeripheralArcCoord x = coord;
    for (int k = 0; k < n; ++k) x = tau_peripheral(x, n);
    c.require(x == coord, "tau order at n-2=" + std::to_string(n));

    const auto len = mesh_step(coord, MeshDirection::Lengthen, n);
    std::optional<PeripheralArcCoord> down;
    if (len) down = mesh_step(*len, MeshDirection::Shorten, n);
    c.require(down && tau_peripheral(*down, n) == coord, "mesh square");
    const auto shorter = mesh_step(coord, MeshDirection::Shorten, n);
    if (shorter) {
      const auto up = mesh_step(*shorter, MeshDirection::Lengthen, n);
      c.require(up && *up == *down, "mesh square, other way around");
    } else {
      c.require(coord_travel(coord, n) == 2, "shorten only absent at the mouth");
    }
  }
  for (TaggedPQArc x : {TaggedPQArc::Plain, TaggedPQArc::NotchedAtP, TaggedPQArc::NotchedAtQ,
                        TaggedPQArc::NotchedBoth})
    c.require(tau_tagged(tau_tagged(x)) == x, "tau_tagged involution");
}

struct Criterion {
  const char* name;
  std::function<void(Checker&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"1. frieze reproduction for (4,2,2) and (5,2)", criterion_frieze_reproduction},
      {"2. growth coefficients and Chebyshev values", criterion_growth_values},
      {"3. rank matrices and factorization of DDUD", criterion_rank_matrices},
      {"4. oracle equivalence over 1000 random words", criterion_oracle_equivalence},
      {"5. trace identity over 1000 random strips", criterion_trace_identity},
      {"6. Conway-Coxeter closure over 200 polygons", criterion_conway_coxeter},
      {"7. bundled fixture tube reports", criterion_fixture_reports},
      {"8. randomized verification of 100 instances", criterion_randomized_verification},
      {"9. quasi-simple counts equal the quiddity", criterion_quiddity_lemma},
      {"10. tau and mesh navigation", criterion_navigation},
  };

  int failed = 0;
  for (const Criterion& cr : criteria) {
    Checker c;
    try {
      cr.body(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    if (c.failures == 0) {
      std::cout << "PASS  " << cr.name << "\n";
    } else {
      ++failed;
      std::cout << "FAIL  " << cr.name << "\n" << c.detail.str();
    }
  }
  if (failed == 0)
    std::cout << "all " << criteria.size() << " acceptance criteria hold\n";
  else
    std::cout << failed << " acceptance criteria failed\n";
  return failed;
}
