#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "frz/numeric.hpp"

namespace frz {

// Periodic sequence of positive integers generating a frieze.
class Quiddity {
 public:
  explicit Quiddity(std::vector<Int> entries);

  // Parses comma-separated base-10 positive integers ("4,2,2").
  static Quiddity parse(std::string_view text);

  const std::vector<Int>& entries() const { return entries_; }
  int period() const { return static_cast<int>(entries_.size()); }
  const Int& at(int i) const { return entries_[static_cast<std::size_t>(i) % entries_.size()]; }

  Quiddity rotated(int shift) const;
  Quiddity repeated(int k) const;
  std::string str() const;  // "(4,2,2)"

  bool operator==(const Quiddity&) const = default;

 private:
  std::vector<Int> entries_;
};

enum class FriezeState : unsigned char { InfiniteSoFar, Closed, Invalid };

struct FriezeStatus {
  FriezeState state = FriezeState::InfiniteSoFar;
  // Closed: row holds the closing row of 1s. Invalid: (row, index) of the
  // first non-positive entry or inexact division.
  int row = 0;
  int index = 0;

  bool operator==(const FriezeStatus&) const = default;
};

// Resource guards for frieze generation.
struct GenerationLimits {
  int max_rows = 64;
  unsigned max_entry_bits = 4096;
};

class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FriezeError : public std::runtime_error {
 public:
  FriezeError(FriezeStatus status, const std::string& what)
      : std::runtime_error(what), status_(status) {}
  FriezeStatus status() const { return status_; }

 private:
  FriezeStatus status_;
};

// Rows of a frieze, from the trivial row -1 of 0s through the last row that
// was computed and accepted. Immutable after generation.
class Frieze {
 public:
  int period() const { return period_; }
  FriezeStatus status() const { return status_; }
  // Highest stored row index (>= 1).
  int max_row() const { return static_cast<int>(rows_.size()) - 2; }
  const std::vector<Int>& row(int r) const { return rows_[static_cast<std::size_t>(r + 1)]; }

 private:
  friend Frieze generate(const Quiddity&, int, const GenerationLimits&);
  int period_ = 0;
  std::vector<std::vector<Int>> rows_;  // rows_[k] is row k-1
  FriezeStatus status_;
};

// Generates rows 2..rows by the diamond rule F(r+1,i) = (F(r,i)F(r,i+1)-1)
// / F(r-1,i+1) with exact division. Stops early with Closed when a row of
// 1s is followed by a row of 0s (accepted for rows >= 2, and for the
// quiddity row itself only when the period is 3, the triangle; every other
// all-ones quiddity, e.g. (1,1), reports Invalid at its first zero of row
// 2). Invalid also covers inexact division and non-positive entries.
// Throws LimitError when rows exceeds limits.max_rows or an entry outgrows
// limits.max_entry_bits.
Frieze generate(const Quiddity& q, int rows, const GenerationLimits& limits = {});

// Growth coefficient: the constant difference F(m,i) - F(m-2,i+1), m the
// period, with the 0s row standing in as row -1 when m <= 2.  Throws
// FriezeError when row m is unreachable (Invalid input or early closure).
Int growth(const Quiddity& q);

// s_k from the recurrence s_{k+2} = s1*s_{k+1} - s_k with s_0 = 2, s_1 = s1.
Int chebyshev_growth(const Int& s1, int k);

// Quiddity of the triangulated convex n-gon: a_i = number of triangles at
// vertex i. Diagonals are 1-based vertex pairs; throws
// std::invalid_argument unless they are n-3 pairwise non-crossing
// diagonals.
Quiddity polygon_quiddity(int n, const std::vector<std::pair<int, int>>& diagonals);

}  // namespace frz
