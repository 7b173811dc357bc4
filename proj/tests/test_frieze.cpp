#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>

#include "doctest.h"
#include "frz/frieze.hpp"

using namespace frz;

namespace {

std::vector<Int> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

bool same_cyclic_multiset(const std::vector<Int>& a, std::vector<Int> b) {
  std::vector<Int> sa = a;
  std::sort(sa.begin(), sa.end());
  std::sort(b.begin(), b.end());
  return sa == b;
}

bool equal_up_to_rotation(const std::vector<Int>& got, const std::vector<Int>& want) {
  const std::size_t n = got.size();
  if (want.size() != n) return false;
  for (std::size_t r = 0; r < n; ++r) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = got[(i + r) % n] == want[i];
    if (ok) return true;
  }
  return false;
}

Quiddity random_infinite_quiddity(std::mt19937_64& rng) {
  const std::size_t m = 1 + rng() % 4;
  std::vector<Int> entries(m);
  for (Int& a : entries) a = 2 + static_cast<long>(rng() % 5);
  return Quiddity(std::move(entries));
}

std::vector<std::pair<int, int>> random_polygon_triangulation(std::mt19937_64& rng, int n) {
  std::vector<std::pair<int, int>> diagonals;
  // split the range [lo..hi] at a random middle vertex
  auto rec = [&](auto&& self, int lo, int hi) -> void {
    if (hi - lo < 2) return;
    const int mid = lo + 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo - 1));
    auto add = [&](int u, int v) {
      if (v - u >= 2 && !(u == 1 && v == n)) diagonals.emplace_back(u, v);
    };
    add(lo, mid);
    add(mid, hi);
    self(self, lo, mid);
    self(self, mid, hi);
  };
  rec(rec, 1, n);
  return diagonals;
}

}  // namespace

TEST_CASE("quiddity parsing and validation") {
  CHECK(Quiddity::parse("4,2,2").entries() == ints({4, 2, 2}));
  CHECK(Quiddity::parse("7").period() == 1);
  CHECK_THROWS_AS(Quiddity::parse("4,,2"), std::invalid_argument);
  CHECK_THROWS_AS(Quiddity::parse("4,-2"), std::invalid_argument);
  CHECK_THROWS_AS(Quiddity::parse("a"), std::invalid_argument);
  CHECK_THROWS_AS(Quiddity::parse("0,2"), std::invalid_argument);
  CHECK(Quiddity::parse("4,2,2").str() == "(4,2,2)");
}

TEST_CASE("frieze rows of (4,2,2)") {
  const Frieze f = generate(Quiddity::parse("4,2,2"), 5);
  CHECK(f.status().state == FriezeState::InfiniteSoFar);
  CHECK(f.row(-1) == ints({0, 0, 0}));
  CHECK(f.row(0) == ints({1, 1, 1}));
  CHECK(same_cyclic_multiset(f.row(2), ints({7, 7, 3})));
  CHECK(same_cyclic_multiset(f.row(3), ints({12, 10, 10})));
  CHECK(same_cyclic_multiset(f.row(4), ints({17, 17, 33})));
  CHECK(same_cyclic_multiset(f.row(5), ints({24, 56, 56})));
}

TEST_CASE("frieze rows of (5,2)") {
  const Frieze f = generate(Quiddity::parse("5,2"), 4);
  CHECK(f.row(2) == ints({9, 9}));
  CHECK(same_cyclic_multiset(f.row(3), ints({16, 40})));
  CHECK(f.row(4) == ints({71, 71}));
}

TEST_CASE("pentagon quiddity closes after n-3 rows") {
  const Frieze f = generate(Quiddity::parse("3,1,2,2,1"), 4);
  CHECK(equal_up_to_rotation(f.row(2), ints({2, 1, 3, 1, 2})));
  CHECK(f.row(3) == ints({1, 1, 1, 1, 1}));
  CHECK(f.row(4) == ints({0, 0, 0, 0, 0}));
  CHECK(f.status() == FriezeStatus{FriezeState::Closed, 3, 0});
}

TEST_CASE("degenerate and boundary closure cases") {
  // (1,1) does not close; the zero in row 2 is reported instead.
  const Frieze f11 = generate(Quiddity::parse("1,1"), 4);
  CHECK(f11.status().state == FriezeState::Invalid);
  CHECK(f11.status().row == 2);

  // the triangle quiddity closes at the quiddity row itself
  const Frieze f111 = generate(Quiddity::parse("1,1,1"), 4);
  CHECK(f111.status() == FriezeStatus{FriezeState::Closed, 1, 0});

  // square frieze presented with its minimal period closes one row later
  const Frieze f21 = generate(Quiddity::parse("2,1"), 4);
  CHECK(f21.status() == FriezeStatus{FriezeState::Closed, 2, 0});
}

TEST_CASE("growth values") {
  CHECK(growth(Quiddity::parse("4,2,2")) == 8);
  CHECK(growth(Quiddity::parse("5,2")) == 8);
  CHECK(growth(Quiddity::parse("2,3")) == 4);
  CHECK(growth(Quiddity::parse("2,3,2,3")) == 14);
  CHECK(growth(Quiddity::parse("4")) == 4);
  CHECK(growth(Quiddity::parse("5")) == 5);
  CHECK(growth(Quiddity::parse("6")) == 6);
  CHECK(growth(Quiddity::parse("7,1,4,2,2")) == 34);
  CHECK_THROWS_AS(growth(Quiddity::parse("1,1")), FriezeError);
  CHECK_THROWS_AS(growth(Quiddity::parse("3,1,2,2,1")), FriezeError);
}

TEST_CASE("chebyshev recurrence") {
  CHECK(chebyshev_growth(4, 0) == 2);
  CHECK(chebyshev_growth(123456, 0) == 2);
  CHECK(chebyshev_growth(4, 1) == 4);
  CHECK(chebyshev_growth(4, 2) == 14);
  CHECK(chebyshev_growth(4, 3) == 52);
  CHECK_THROWS_AS(chebyshev_growth(4, -1), std::invalid_argument);
}

TEST_CASE("repetition law") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 40; ++i) {
    const Quiddity q = random_infinite_quiddity(rng);
    const Int s = growth(q);
    for (int k = 1; k <= 4; ++k) CHECK(growth(q.repeated(k)) == chebyshev_growth(s, k));
  }
}

TEST_CASE("rotation invariance of generated rows") {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 30; ++i) {
    const Quiddity q = random_infinite_quiddity(rng);
    const int m = q.period();
    const int shift = static_cast<int>(rng() % static_cast<std::uint64_t>(m));
    const Frieze f = generate(q, m + 2);
    const Frieze g = generate(q.rotated(shift), m + 2);
    for (int r = -1; r <= f.max_row(); ++r) {
      for (int j = 0; j < m; ++j)
        CHECK(g.row(r)[static_cast<std::size_t>(j)] ==
              f.row(r)[static_cast<std::size_t>((j + shift) % m)]);
    }
  }
}

TEST_CASE("diamond rule holds on stored rows") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 30; ++i) {
    const Quiddity q = random_infinite_quiddity(rng);
    const int m = q.period();
    const Frieze f = generate(q, 6);
    for (int r = 0; r < f.max_row(); ++r)
      for (int j = 0; j < m; ++j) {
        const std::size_t j1 = static_cast<std::size_t>((j + 1) % m);
        CHECK(f.row(r + 1)[static_cast<std::size_t>(j)] * f.row(r - 1)[j1] ==
              f.row(r)[static_cast<std::size_t>(j)] * f.row(r)[j1] - 1);
      }
  }
}

TEST_CASE("generation limits") {
  CHECK_THROWS_AS(generate(Quiddity::parse("4,2,2"), 65), LimitError);
  CHECK_THROWS_AS(generate(Quiddity::parse("4,2,2"), 0), std::invalid_argument);
  GenerationLimits tight;
  tight.max_entry_bits = 8;
  CHECK_THROWS_AS(generate(Quiddity::parse("9,9,9"), 8, tight), LimitError);
}

TEST_CASE("polygon quiddities") {
  CHECK(polygon_quiddity(3, {}).entries() == ints({1, 1, 1}));
  CHECK(polygon_quiddity(5, {{1, 3}, {1, 4}}).entries() == ints({3, 1, 2, 2, 1}));
  CHECK(polygon_quiddity(4, {{1, 3}}).entries() == ints({2, 1, 2, 1}));

  CHECK_THROWS_AS(polygon_quiddity(5, {{1, 3}, {2, 4}}), std::invalid_argument);  // crossing
  CHECK_THROWS_AS(polygon_quiddity(5, {{1, 3}}), std::invalid_argument);          // wrong count
  CHECK_THROWS_AS(polygon_quiddity(5, {{1, 3}, {1, 3}}), std::invalid_argument);  // duplicate
  CHECK_THROWS_AS(polygon_quiddity(4, {{1, 2}}), std::invalid_argument);          // a side
  CHECK_THROWS_AS(polygon_quiddity(4, {{0, 2}}), std::invalid_argument);          // out of range
}

TEST_CASE("Conway-Coxeter closure for random polygons") {
  std::mt19937_64 rng(1234);
  for (int i = 0; i < 60; ++i) {
    const int n = 4 + static_cast<int>(rng() % 9);
    const Quiddity q = polygon_quiddity(n, random_polygon_triangulation(rng, n));
    const Frieze f = generate(q, n);
    CHECK(f.status().state == FriezeState::Closed);
    CHECK(f.status().row == n - 2);  // n-3 non-trivial rows then the row of 1s
    for (int r = 1; r < n - 2; ++r)
      for (const Int& v : f.row(r)) CHECK(v > 0);
  }
}
