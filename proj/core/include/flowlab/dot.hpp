#pragma once

#include <string>
#include <vector>

#include "flowlab/gadgets.hpp"
#include "flowlab/netsimplex.hpp"
#include "flowlab/network.hpp"

namespace flowlab {

// Graphviz rendering with the figure conventions: every arc is annotated
// "cost; capacity", watched arcs are dashed, initial-basis arcs are bold.
std::string export_dot(const Network& net, const std::vector<ArcId>& watched = {},
                       const TreeBasis* initialBasis = nullptr);

std::string export_dot(const GadgetNetwork& g);

}  // namespace flowlab
