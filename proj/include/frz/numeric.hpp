#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace frz {

// Exact arbitrary-precision integer used throughout the library.
using Int = boost::multiprecision::cpp_int;

// Number of bits needed to represent |v| (0 for v == 0).
inline unsigned bit_length(const Int& v) {
  if (v == 0) return 0;
  return boost::multiprecision::msb(boost::multiprecision::abs(v)) + 1;
}

}  // namespace frz
