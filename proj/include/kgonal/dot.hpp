#pragma once

// Graphviz export of the torus containment poset.

#include <string>

#include "kgonal/verifier.hpp"

namespace kgonal {

// Hasse diagram with an edge from each torus to every torus covering it, so
// the sinks are exactly the maximal tori. Tori of scrollar tableaux are drawn
// filled and labelled with their types.
std::string hasse_dot(const TorusPoset& poset);

}  // namespace kgonal
