#include "frz/frieze.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace frz {

Quiddity::Quiddity(std::vector<Int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("quiddity must have period >= 1");
  for (const Int& a : entries_)
    if (a < 1) throw std::invalid_argument("quiddity entries must be positive");
}

Quiddity Quiddity::parse(std::string_view text) {
  std::vector<Int> entries;
  std::string cur;
  auto flush = [&] {
    if (cur.empty() || !std::all_of(cur.begin(), cur.end(), [](unsigned char c) {
          return std::isdigit(c);
        }))
      throw std::invalid_argument("quiddity entries must be base-10 positive integers");
    entries.emplace_back(cur);
    cur.clear();
  };
  for (char ch : text) {
    if (ch == ',')
      flush();
    else
      cur.push_back(ch);
  }
  flush();
  return Quiddity(std::move(entries));
}

Quiddity Quiddity::rotated(int shift) const {
  const int m = period();
  std::vector<Int> out(entries_.size());
  for (int i = 0; i < m; ++i) out[static_cast<std::size_t>(i)] = at(i + shift);
  return Quiddity(std::move(out));
}

Quiddity Quiddity::repeated(int k) const {
  std::vector<Int> out;
  out.reserve(entries_.size() * static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) out.insert(out.end(), entries_.begin(), entries_.end());
  return Quiddity(std::move(out));
}

std::string Quiddity::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ",";
    s += entries_[i].str();
  }
  return s + ")";
}

Frieze generate(const Quiddity& q, int rows, const GenerationLimits& limits) {
  if (rows < 1) throw std::invalid_argument("generate requires rows >= 1");
  if (rows > limits.max_rows)
    throw LimitError("requested " + std::to_string(rows) + " rows, cap is " +
                     std::to_string(limits.max_rows));

  const int m = q.period();
  const std::size_t um = static_cast<std::size_t>(m);
  Frieze f;
  f.period_ = m;
  f.rows_.push_back(std::vector<Int>(um, 0));  // row -1
  f.rows_.push_back(std::vector<Int>(um, 1));  // row 0
  f.rows_.push_back(q.entries());              // row 1

  auto all_equal_to = [&](const std::vector<Int>& row, int v) {
    return std::all_of(row.begin(), row.end(), [&](const Int& x) { return x == v; });
  };

  for (int r = 1; r < rows; ++r) {
    const std::vector<Int>& cur = f.row(r);
    const std::vector<Int>& prev = f.row(r - 1);
    std::vector<Int> next(um);
    std::optional<int> bad;
    for (int i = 0; i < m && !bad; ++i) {
      const std::size_t j = static_cast<std::size_t>((i + 1) % m);
      Int num = cur[static_cast<std::size_t>(i)] * cur[j] - 1;
      Int quot, rem;
      boost::multiprecision::divide_qr(num, prev[j], quot, rem);
      if (rem != 0) {
        bad = i;  // inexact division: not a frieze quiddity
        break;
      }
      if (bit_length(quot) > limits.max_entry_bits)
        throw LimitError("frieze entry exceeded " + std::to_string(limits.max_entry_bits) +
                         " bits at row " + std::to_string(r + 1));
      next[static_cast<std::size_t>(i)] = std::move(quot);
    }
    if (!bad && all_equal_to(cur, 1) && all_equal_to(next, 0) && (r >= 2 || m == 3)) {
      // Genuine closure: row r of 1s followed by a row of 0s. At the
      // quiddity row itself only the triangle quiddity (1,1,1) closes.
      f.rows_.push_back(std::move(next));
      f.status_ = {FriezeState::Closed, r, 0};
      return f;
    }
    if (!bad)
      for (int i = 0; i < m; ++i)
        if (next[static_cast<std::size_t>(i)] <= 0) {
          bad = i;
          break;
        }
    if (bad) {
      f.status_ = {FriezeState::Invalid, r + 1, *bad};
      return f;
    }
    f.rows_.push_back(std::move(next));
  }
  f.status_ = {FriezeState::InfiniteSoFar, f.max_row(), 0};
  return f;
}

Int growth(const Quiddity& q) {
  const int m = q.period();
  GenerationLimits limits;
  limits.max_rows = std::max(limits.max_rows, m);
  Frieze f = generate(q, m, limits);
  if (f.max_row() < m) {
    const char* why = f.status().state == FriezeState::Invalid
                          ? "quiddity does not generate a frieze through row m"
                          : "frieze closes before row m";
    throw FriezeError(f.status(), why);
  }
  const std::vector<Int>& top = f.row(m - 2);
  const std::vector<Int>& bot = f.row(m);
  Int s = bot[0] - top[1 % static_cast<std::size_t>(m)];
  for (int i = 0; i < m; ++i) {
    const std::size_t j = static_cast<std::size_t>((i + 1) % m);
    if (bot[static_cast<std::size_t>(i)] - top[j] != s)
      throw std::logic_error("growth coefficient is not constant along row m");
  }
  return s;
}

Int chebyshev_growth(const Int& s1, int k) {
  if (k < 0) throw std::invalid_argument("chebyshev_growth requires k >= 0");
  Int prev = 2, cur = s1;  // s_0, s_1
  if (k == 0) return prev;
  for (int i = 1; i < k; ++i) {
    Int next = s1 * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Quiddity polygon_quiddity(int n, const std::vector<std::pair<int, int>>& diagonals) {
  if (n < 3) throw std::invalid_argument("polygon needs n >= 3");
  std::set<std::pair<int, int>> diags;
  for (auto [u, v] : diagonals) {
    if (u < 1 || u > n || v < 1 || v > n || u == v)
      throw std::invalid_argument("diagonal endpoints must be distinct vertices in 1..n");
    if (u > v) std::swap(u, v);
    const int gap = v - u;
    if (gap == 1 || gap == n - 1)
      throw std::invalid_argument("polygon side used as a diagonal");
    if (!diags.emplace(u, v).second) throw std::invalid_argument("duplicate diagonal");
  }
  if (static_cast<int>(diags.size()) != n - 3)
    throw std::invalid_argument("a triangulated n-gon needs exactly n-3 diagonals");
  for (auto it = diags.begin(); it != diags.end(); ++it)
    for (auto jt = std::next(it); jt != diags.end(); ++jt) {
      auto [a, b] = *it;
      auto [c, d] = *jt;
      const bool crossing = (a < c && c < b && b < d) || (c < a && a < d && d < b);
      if (crossing) throw std::invalid_argument("diagonals cross");
    }

  std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n + 1),
                                     std::vector<bool>(static_cast<std::size_t>(n + 1), false));
  auto connect = [&](int u, int v) {
    adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
    adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
  };
  for (int i = 1; i <= n; ++i) connect(i, i % n + 1);
  for (auto [u, v] : diags) connect(u, v);

  // In a triangulated convex polygon every 3-clique bounds a triangle.
  std::vector<Int> quid(static_cast<std::size_t>(n), 0);
  int triangles = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (!adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) continue;
      for (int k = j + 1; k <= n; ++k)
        if (adj[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] &&
            adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]) {
          ++triangles;
          quid[static_cast<std::size_t>(i - 1)] += 1;
          quid[static_cast<std::size_t>(j - 1)] += 1;
          quid[static_cast<std::size_t>(k - 1)] += 1;
        }
    }
  if (triangles != n - 2) throw std::logic_error("triangle count of a triangulation must be n-2");
  return Quiddity(std::move(quid));
}

}  // namespace frz
