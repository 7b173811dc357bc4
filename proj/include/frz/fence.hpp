#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "frz/numeric.hpp"

namespace frz {

// Arrow direction between consecutive vertices of a fence poset, read left
// to right. Down at position k means vertex k covers vertex k+1 (arrow
// k -> k+1 in the quiver); Up means the arrow points k+1 -> k.
enum class Letter : unsigned char { Down, Up };

inline Letter flipped(Letter l) { return l == Letter::Down ? Letter::Up : Letter::Down; }

// A fence poset / type A quiver encoded as its letter sequence. The empty
// word is the one-vertex poset; a word with L letters has L+1 vertices.
class FenceWord {
 public:
  FenceWord() = default;
  explicit FenceWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  // Parses a string over {U, D}; throws std::invalid_argument otherwise.
  static FenceWord parse(std::string_view text);

  // t letters all Up / all Down (the segments U_t and D_t).
  static FenceWord u_run(std::size_t t) { return FenceWord(std::vector<Letter>(t, Letter::Up)); }
  static FenceWord d_run(std::size_t t) { return FenceWord(std::vector<Letter>(t, Letter::Down)); }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  std::size_t vertex_count() const { return letters_.size() + 1; }
  std::string str() const;

  // Reading from right to left: reverses and flips every letter.
  FenceWord inverted() const;
  // Flips every letter without reversing.
  FenceWord flipped() const;
  // this ↘ tail: concatenation with a single linking Down arrow.
  FenceWord linked(const FenceWord& tail) const;

  bool operator==(const FenceWord&) const = default;

 private:
  std::vector<Letter> letters_;
};

enum class MatrixForm : unsigned char { Specialized, Dual };

// 2x2 integer matrix holding the four submodule counts of a string module,
// in either the specialized (nabla) or dual (delta) arrangement.
class RankMatrix {
 public:
  RankMatrix(Int a, Int b, Int c, Int d, MatrixForm form);

  const Int& at(int row, int col) const { return e_[row * 2 + col]; }
  MatrixForm form() const { return form_; }

  Int det() const { return e_[0] * e_[3] - e_[1] * e_[2]; }
  Int trace() const { return e_[0] + e_[3]; }

  // Product of two matrices of the same form (the linking-arrow product);
  // throws std::invalid_argument on a form mismatch.
  RankMatrix operator*(const RankMatrix& rhs) const;

  std::string str() const;  // "[[a,b],[c,d]]"

  bool operator==(const RankMatrix&) const = default;

 private:
  Int e_[4];
  MatrixForm form_;
};

// Specialized rank matrix of the word, by the per-letter transfer product:
// start from [[2,-1],[1,0]] and right-multiply [[2,-1],[1,0]] per Down and
// [[1,0],[-1,1]] per Up. Entry (0,0) is the order-ideal count.
RankMatrix nabla(const FenceWord& word);

// Dual form, delta = nabla * [[0,1],[-1,1]].
RankMatrix delta(const FenceWord& word);

RankMatrix nabla_to_delta(const RankMatrix& m);
RankMatrix delta_to_nabla(const RankMatrix& m);

// Specialized rank matrix of the inverse word, computed directly from the
// matrix: [[a,-b],[c,-d]] -> [[a, c-a],[a-b, c+b-a-d]].
RankMatrix nabla_of_inverse(const RankMatrix& m);

// Number of order ideals of the fence poset (= submodules of the string
// module) = nabla(word)(0,0).
Int ideal_count(const FenceWord& word);

// Plain directed graph on vertices 0..vertex_count-1, no duplicate arrows.
struct Digraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> arrows;

  explicit Digraph(int n = 0) : vertex_count(n) {}
  void add_arrow(int source, int target);
};

// Quiver of the word: vertices 0..L, arrows per letter.
Digraph fence_digraph(const FenceWord& word);

// A fence word closed up by one extra Down arrow from the last vertex back
// to the first (the cyclic word ↻beta).
struct CyclicWord {
  FenceWord beta;
  bool operator==(const CyclicWord&) const = default;
};

Digraph cyclic_digraph(const CyclicWord& w);

inline constexpr int kDefaultSubsetCap = 24;

// Exhaustively counts subsets S with v in S and v -> w implying w in S
// (successor-closed sets = submodules of the identity-map representation).
// Throws std::length_error when vertex_count exceeds the cap.
Int closed_subset_count(const Digraph& g, int vertex_cap = kDefaultSubsetCap);

struct BandCount {
  Int count;
  // Set when beta has no Up letter, so the closed-up quiver is an oriented
  // cycle and the band-module reading is void; the count is still the
  // closed-subset count of the cyclic digraph.
  bool degenerate = false;
};

// trace(nabla(beta)): the submodule count of the quasi-simple band module
// of the cyclic word.
BandCount band_count(const CyclicWord& w);

}  // namespace frz
