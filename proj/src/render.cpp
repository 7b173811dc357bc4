#include "frz/render.hpp"

#include <algorithm>
#include <sstream>

namespace frz {

std::string render_frieze(const Frieze& f, bool show_zeros) {
  const int first = show_zeros ? -1 : 0;
  const int last = f.max_row();

  std::size_t width = 1;
  for (int r = first; r <= last; ++r)
    for (const Int& v : f.row(r)) width = std::max(width, v.str().size());
  const std::string half(width / 2 + 1, ' ');

  std::ostringstream out;
  for (int r = first; r <= last; ++r) {
    std::ostringstream label;
    label << "Row " << r;
    out << label.str() << std::string(label.str().size() < 8 ? 8 - label.str().size() : 1, ' ')
        << ':';
    if (((r % 2) + 2) % 2 == 1) out << half;
    for (const Int& v : f.row(r)) {
      std::string s = v.str();
      out << ' ' << std::string(width - s.size(), ' ') << s;
    }
    if (f.status().state == FriezeState::Closed && r == f.status().row)
      out << "   (closing row of 1s)";
    out << '\n';
  }
  return out.str();
}

}  // namespace frz
