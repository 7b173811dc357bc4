#include "frz/fence.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace frz {

namespace {

struct M2 {
  Int a, b, c, d;  // [[a,b],[c,d]]
};

M2 mul(const M2& x, const M2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
          x.c * y.b + x.d * y.d};
}

const M2 kPoint{2, -1, 1, 0};   // nabla of the one-vertex word, also the Down step
const M2 kUpStep{1, 0, -1, 1};  // Up step, conjugated through the dual form

RankMatrix to_rank(const M2& m, MatrixForm form) { return RankMatrix(m.a, m.b, m.c, m.d, form); }

M2 raw(const RankMatrix& m) { return {m.at(0, 0), m.at(0, 1), m.at(1, 0), m.at(1, 1)}; }

}  // namespace

FenceWord FenceWord::parse(std::string_view text) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (char ch : text) {
    if (ch == 'D')
      letters.push_back(Letter::Down);
    else if (ch == 'U')
      letters.push_back(Letter::Up);
    else
      throw std::invalid_argument("fence word may contain only 'U' and 'D', got '" +
                                  std::string(1, ch) + "'");
  }
  return FenceWord(std::move(letters));
}

std::string FenceWord::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (Letter l : letters_) s.push_back(l == Letter::Down ? 'D' : 'U');
  return s;
}

FenceWord FenceWord::inverted() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (Letter& l : out) l = frz::flipped(l);
  return FenceWord(std::move(out));
}

FenceWord FenceWord::flipped() const {
  std::vector<Letter> out = letters_;
  for (Letter& l : out) l = frz::flipped(l);
  return FenceWord(std::move(out));
}

FenceWord FenceWord::linked(const FenceWord& tail) const {
  std::vector<Letter> out = letters_;
  out.reserve(out.size() + 1 + tail.letters_.size());
  out.push_back(Letter::Down);
  out.insert(out.end(), tail.letters_.begin(), tail.letters_.end());
  return FenceWord(std::move(out));
}

RankMatrix::RankMatrix(Int a, Int b, Int c, Int d, MatrixForm form) : form_(form) {
  e_[0] = std::move(a);
  e_[1] = std::move(b);
  e_[2] = std::move(c);
  e_[3] = std::move(d);
}

RankMatrix RankMatrix::operator*(const RankMatrix& rhs) const {
  if (form_ != rhs.form_)
    throw std::invalid_argument("rank matrix product requires matching forms");
  return to_rank(mul(raw(*this), raw(rhs)), form_);
}

std::string RankMatrix::str() const {
  return "[[" + e_[0].str() + "," + e_[1].str() + "],[" + e_[2].str() + "," + e_[3].str() + "]]";
}

RankMatrix nabla(const FenceWord& word) {
  M2 m = kPoint;
  for (Letter l : word.letters()) m = mul(m, l == Letter::Down ? kPoint : kUpStep);
  return to_rank(m, MatrixForm::Specialized);
}

RankMatrix nabla_to_delta(const RankMatrix& m) {
  if (m.form() != MatrixForm::Specialized)
    throw std::invalid_argument("nabla_to_delta expects the specialized form");
  return to_rank(mul(raw(m), M2{0, 1, -1, 1}), MatrixForm::Dual);
}

RankMatrix delta_to_nabla(const RankMatrix& m) {
  if (m.form() != MatrixForm::Dual)
    throw std::invalid_argument("delta_to_nabla expects the dual form");
  return to_rank(mul(raw(m), M2{1, -1, 1, 0}), MatrixForm::Specialized);
}

RankMatrix delta(const FenceWord& word) { return nabla_to_delta(nabla(word)); }

RankMatrix nabla_of_inverse(const RankMatrix& m) {
  if (m.form() != MatrixForm::Specialized)
    throw std::invalid_argument("nabla_of_inverse expects the specialized form");
  const Int a = m.at(0, 0), b = -m.at(0, 1), c = m.at(1, 0), d = -m.at(1, 1);
  return RankMatrix(a, c - a, a - b, c + b - a - d, MatrixForm::Specialized);
}

Int ideal_count(const FenceWord& word) { return nabla(word).at(0, 0); }

void Digraph::add_arrow(int source, int target) {
  if (source < 0 || source >= vertex_count || target < 0 || target >= vertex_count)
    throw std::out_of_range("digraph arrow endpoint out of range");
  auto arrow = std::make_pair(source, target);
  if (std::find(arrows.begin(), arrows.end(), arrow) == arrows.end()) arrows.push_back(arrow);
}

Digraph fence_digraph(const FenceWord& word) {
  Digraph g(static_cast<int>(word.vertex_count()));
  int k = 0;
  for (Letter l : word.letters()) {
    if (l == Letter::Down)
      g.add_arrow(k, k + 1);
    else
      g.add_arrow(k + 1, k);
    ++k;
  }
  return g;
}

Digraph cyclic_digraph(const CyclicWord& w) {
  Digraph g = fence_digraph(w.beta);
  g.add_arrow(g.vertex_count - 1, 0);  // the closing Down arrow
  return g;
}

Int closed_subset_count(const Digraph& g, int vertex_cap) {
  const int n = g.vertex_count;
  if (n > vertex_cap)
    throw std::length_error("closed_subset_count: " + std::to_string(n) +
                            " vertices exceeds the cap of " + std::to_string(vertex_cap));
  std::vector<std::uint64_t> succ(static_cast<std::size_t>(n), 0);
  for (const auto& [s, t] : g.arrows) succ[static_cast<std::size_t>(s)] |= std::uint64_t{1} << t;

  std::uint64_t count = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t set = 0; set < total; ++set) {
    bool ok = true;
    for (std::uint64_t rest = set; rest != 0; rest &= rest - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(rest));
      if (succ[v] & ~set) {
        ok = false;
        break;
      }
    }
    count += ok ? 1 : 0;
  }
  return Int(count);
}

BandCount band_count(const CyclicWord& w) {
  const auto& letters = w.beta.letters();
  const bool degenerate =
      std::none_of(letters.begin(), letters.end(), [](Letter l) { return l == Letter::Up; });
  return BandCount{nabla(w.beta).trace(), degenerate};
}

}  // namespace frz
