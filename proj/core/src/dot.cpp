#include "flowlab/dot.hpp"

#include <sstream>

namespace flowlab {

std::string export_dot(const Network& net, const std::vector<ArcId>& watched,
                       const TreeBasis* initialBasis) {
  std::vector<char> isWatched(net.arcs.size(), 0);
  for (ArcId id : watched) isWatched[static_cast<size_t>(id)] = 1;
  std::vector<char> isBold(net.arcs.size(), 0);
  if (initialBasis)
    for (ArcId id : initialBasis->treeArcs) isBold[static_cast<size_t>(id)] = 1;

  std::ostringstream out;
  out << "digraph G {\n  rankdir=LR;\n";
  for (const Node& n : net.nodes) {
    out << "  n" << n.id << " [label=\"" << (n.label ? *n.label : "n" + std::to_string(n.id));
    if (!n.balance.isZero()) out << "\\n" << n.balance.str();
    out << "\"];\n";
  }
  for (const Arc& a : net.arcs) {
    out << "  n" << a.tail << " -> n" << a.head << " [label=\"" << a.cost.str() << "; "
        << a.capacity.str() << "\"";
    if (isBold[static_cast<size_t>(a.id)] && isWatched[static_cast<size_t>(a.id)])
      out << " style=\"bold,dashed\"";
    else if (isBold[static_cast<size_t>(a.id)])
      out << " style=bold";
    else if (isWatched[static_cast<size_t>(a.id)])
      out << " style=dashed";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_dot(const GadgetNetwork& g) {
  return export_dot(g.net, g.watched, g.initialBasis ? &*g.initialBasis : nullptr);
}

}  // namespace flowlab
