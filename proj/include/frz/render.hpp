#pragma once

#include <string>

#include "frz/frieze.hpp"

namespace frz {

// Staggered text rendering, one period per row, rows labeled "Row r". The
// top row of 0s is omitted unless show_zeros is set; the closing row of 1s
// of a finite frieze is marked. Numbers re-parse to the stored rows.
std::string render_frieze(const Frieze& f, bool show_zeros = false);

}  // namespace frz
