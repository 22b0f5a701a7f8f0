#include "modlat/render.hpp"

#include <map>
#include <sstream>

#include "modlat/rack.hpp"

namespace modlat {

std::string render_dot(const Lattice& lattice) {
  const ElementMask marked = trinket_mask(lattice);
  std::map<int, std::vector<Element>> levels;
  for (Element x = 0; x < lattice.size(); ++x) levels[lattice.height(x)].push_back(x);

  std::ostringstream out;
  out << "digraph lattice {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (Element x = 0; x < lattice.size(); ++x) {
    out << "  " << x;
    if (marked & element_bit(x)) out << " [style=dashed]";
    out << ";\n";
  }
  for (const auto& [height, members] : levels) {
    out << "  { rank=same;";
    for (Element x : members) out << ' ' << x << ';';
    out << " }\n";
  }
  for (const Cover& c : lattice.covers()) out << "  " << c.lower << " -> " << c.upper << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace modlat
