#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flowlab/capacity.hpp"
#include "flowlab/rational.hpp"

namespace flowlab {

using NodeId = std::int32_t;
using ArcId = std::int32_t;

enum class Dir : std::uint8_t { Forward, Backward };

inline const char* to_string(Dir d) { return d == Dir::Forward ? "F" : "B"; }

struct Node {
  NodeId id = 0;
  Rational balance;  // supply > 0, demand < 0, transshipment = 0
  std::optional<std::string> label;
};

struct Arc {
  ArcId id = 0;
  NodeId tail = 0;
  NodeId head = 0;
  Rational cost;
  Capacity capacity;
  std::optional<std::string> label;
};

// Directed multigraph with node balances. Treated as immutable once built;
// arcs are never deleted, so ids stay stable.
struct Network {
  std::vector<Node> nodes;
  std::vector<Arc> arcs;
  std::optional<NodeId> source;
  std::optional<NodeId> sink;

  NodeId addNode(Rational balance = Rational(), std::optional<std::string> label = {});
  ArcId addArc(NodeId tail, NodeId head, Rational cost, Capacity capacity,
               std::optional<std::string> label = {});

  std::optional<NodeId> nodeByLabel(std::string_view label) const;
  std::optional<ArcId> arcByLabel(std::string_view label) const;

  int nodeCount() const { return static_cast<int>(nodes.size()); }
  int arcCount() const { return static_cast<int>(arcs.size()); }
};

struct Flow {
  std::vector<Rational> values;  // per-arc, indexed by ArcId

  static Flow zero(const Network& net) { return Flow{std::vector<Rational>(net.arcs.size())}; }
  const Rational& on(ArcId a) const { return values[static_cast<size_t>(a)]; }
  Rational& on(ArcId a) { return values[static_cast<size_t>(a)]; }
};

struct ResidualArc {
  ArcId base = 0;
  Dir direction = Dir::Forward;
  NodeId tail = 0;
  NodeId head = 0;
  Rational residualCost;
  Capacity residualCapacity;
};

// Throws on the first violation: UnbalancedSupplies, DanglingEndpoint,
// NegativeCapacity, DuplicateLabel.
void validate_network(const Network& net);

// Feasibility of `flow` given that `routed` units have been pushed
// source -> sink on top of the node balances. Throws InfeasibleFlow.
void check_flow(const Network& net, const Flow& flow, const Rational& routed = Rational());

// Positive-residual arcs only, ordered by (base ArcId, Forward first).
std::vector<ResidualArc> residual_network(const Network& net, const Flow& flow);

Rational flow_cost(const Network& net, const Flow& flow);

}  // namespace flowlab
