#include "flowlab/network.hpp"

#include <set>

namespace flowlab {

NodeId Network::addNode(Rational balance, std::optional<std::string> label) {
  NodeId id = static_cast<NodeId>(nodes.size());
  nodes.push_back(Node{id, std::move(balance), std::move(label)});
  return id;
}

ArcId Network::addArc(NodeId tail, NodeId head, Rational cost, Capacity capacity,
                      std::optional<std::string> label) {
  ArcId id = static_cast<ArcId>(arcs.size());
  arcs.push_back(Arc{id, tail, head, std::move(cost), std::move(capacity), std::move(label)});
  return id;
}

std::optional<NodeId> Network::nodeByLabel(std::string_view label) const {
  for (const Node& n : nodes)
    if (n.label && *n.label == label) return n.id;
  return std::nullopt;
}

std::optional<ArcId> Network::arcByLabel(std::string_view label) const {
  for (const Arc& a : arcs)
    if (a.label && *a.label == label) return a.id;
  return std::nullopt;
}

void validate_network(const Network& net) {
  Rational total;
  std::set<std::string> nodeLabels, arcLabels;
  for (const Node& n : net.nodes) {
    total += n.balance;
    if (n.label && !nodeLabels.insert(*n.label).second)
      raise(Errc::DuplicateLabel, "duplicate node label '" + *n.label + "'");
  }
  if (!total.isZero())
    raise(Errc::UnbalancedSupplies, "balances sum to " + total.str() + ", expected 0");
  NodeId n = static_cast<NodeId>(net.nodes.size());
  for (const Arc& a : net.arcs) {
    if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n)
      raise(Errc::DanglingEndpoint, "arc " + std::to_string(a.id) + " has invalid endpoint");
    if (!a.capacity.isUnbounded() && a.capacity.value().sign() < 0)
      raise(Errc::NegativeCapacity,
            "arc " + std::to_string(a.id) + " capacity " + a.capacity.str());
    if (a.label && !arcLabels.insert(*a.label).second)
      raise(Errc::DuplicateLabel, "duplicate arc label '" + *a.label + "'");
  }
}

void check_flow(const Network& net, const Flow& flow, const Rational& routed) {
  if (flow.values.size() != net.arcs.size())
    raise(Errc::InfeasibleFlow, "flow vector size mismatch");
  std::vector<Rational> net_out(net.nodes.size());
  for (const Arc& a : net.arcs) {
    const Rational& f = flow.on(a.id);
    if (f.sign() < 0)
      raise(Errc::InfeasibleFlow, "arc " + std::to_string(a.id) + " carries negative flow");
    if (a.capacity < f)
      raise(Errc::InfeasibleFlow, "arc " + std::to_string(a.id) + " flow " + f.str() +
                                      " exceeds capacity " + a.capacity.str());
    net_out[static_cast<size_t>(a.tail)] += f;
    net_out[static_cast<size_t>(a.head)] -= f;
  }
  for (const Node& v : net.nodes) {
    Rational expected = v.balance;
    if (net.source && *net.source == v.id) expected += routed;
    if (net.sink && *net.sink == v.id) expected -= routed;
    if (net_out[static_cast<size_t>(v.id)] != expected)
      raise(Errc::InfeasibleFlow, "conservation violated at node " + std::to_string(v.id) +
                                      ": net outflow " + net_out[static_cast<size_t>(v.id)].str() +
                                      ", expected " + expected.str());
  }
}

std::vector<ResidualArc> residual_network(const Network& net, const Flow& flow) {
  std::vector<ResidualArc> res;
  res.reserve(net.arcs.size() * 2);
  for (const Arc& a : net.arcs) {
    const Rational& f = flow.on(a.id);
    if (f.sign() < 0 || a.capacity < f)
      raise(Errc::InfeasibleFlow, "arc " + std::to_string(a.id) + " flow " + f.str() +
                                      " outside [0, " + a.capacity.str() + "]");
    Capacity forward = a.capacity.minus(f);
    if (Rational() < forward)
      res.push_back(ResidualArc{a.id, Dir::Forward, a.tail, a.head, a.cost, forward});
    if (f.sign() > 0)
      res.push_back(ResidualArc{a.id, Dir::Backward, a.head, a.tail, -a.cost, Capacity(f)});
  }
  return res;
}

Rational flow_cost(const Network& net, const Flow& flow) {
  Rational total;
  for (const Arc& a : net.arcs) {
    if (!flow.on(a.id).isZero()) total += a.cost * flow.on(a.id);
  }
  return total;
}

}  // namespace flowlab
