#include "kgonal/dot.hpp"

#include <sstream>

namespace kgonal {

std::string hasse_dot(const TorusPoset& poset) {
  const auto covers = hasse_covers(poset);
  std::ostringstream os;
  os << "digraph tori {\n"
     << "  label=\"containment of coordinate tori " << poset.params.str() << "\";\n"
     << "  rankdir=BT;\n"
     << "  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t i = 0; i < poset.tori.size(); ++i) {
    os << "  t" << i << " [label=\"" << poset.tori[i].str() << "\\ndim " << dimension(poset.tori[i]);
    if (poset.scrollar(i)) {
      os << "\\nscrollar type";
      for (int a : poset.scrollar_types[i]) os << ' ' << a;
      os << "\", style=filled, fillcolor=lightblue, penwidth=2";
    } else {
      os << '"';
    }
    os << "];\n";
  }
  for (std::size_t i = 0; i < covers.size(); ++i)
    for (std::size_t j : covers[i]) os << "  t" << i << " -> t" << j << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace kgonal
