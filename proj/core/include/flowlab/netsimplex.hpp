#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flowlab/network.hpp"

namespace flowlab {

enum class ArcBound : std::uint8_t { Lower, Upper };

inline const char* to_string(ArcBound b) { return b == ArcBound::Lower ? "lower" : "upper"; }

// Spanning-tree basis: tree arcs plus the nonbasic arcs pinned at flow 0
// (atLower) or at capacity (atUpper). The three sets partition all arcs.
struct TreeBasis {
  std::vector<ArcId> treeArcs;
  std::vector<ArcId> atLower;
  std::vector<ArcId> atUpper;
  NodeId root = 0;
};

struct NodePotentials {
  std::vector<Rational> pi;  // pi[root] = 0; pi[head] - pi[tail] = cost on tree arcs
};

struct EnteringArc {
  ArcId arc = 0;
  Dir dir = Dir::Forward;
  Rational reducedCost;
  bool tied = false;  // another candidate attained the same minimum
};

struct PivotRecord {
  std::int64_t index = 0;
  ArcId enteringArc = 0;
  Dir enteringDir = Dir::Forward;
  Rational reducedCost;
  std::vector<std::pair<ArcId, Dir>> cycleArcs;  // entering first, then the tree path
  Rational theta;
  ArcId leavingArc = 0;
  ArcBound leavingBound = ArcBound::Lower;
  std::string basisAfter;  // summary hash of the basis state
  bool watchedInBasis = false;
  bool enteringTied = false;
  bool leavingTied = false;  // blocking arc was not unique
};

struct NsTrace {
  std::vector<PivotRecord> pivots;
  Flow finalFlow;
  TreeBasis finalBasis;
};

// Unique potentials with pi[root] = 0 satisfying the tree-arc equations.
NodePotentials compute_potentials(const Network& net, const TreeBasis& basis);

// Dantzig's rule: most negative reduced cost among the residual directions of
// non-tree arcs (atLower forward, atUpper backward); ties go to the smaller
// ArcId. Returns nullopt at optimality.
std::optional<EnteringArc> dantzig_entering(const Network& net, const Flow& flow,
                                            const TreeBasis& basis,
                                            const NodePotentials& potentials);

// Pushes the bottleneck amount around the fundamental cycle of the entering
// arc and exchanges it with the first blocking arc. Mutates flow and basis.
PivotRecord pivot(const Network& net, Flow& flow, TreeBasis& basis, const EnteringArc& entering);

using NsObserver = std::function<void(const PivotRecord&, const Flow&)>;

// Dantzig pivots from the given basic feasible solution to optimality.
NsTrace ns_run(const Network& net, const TreeBasis& initialBasis, const Flow& initialFlow,
               std::optional<ArcId> watched, std::int64_t maxPivots,
               const NsObserver& observer = {});

}  // namespace flowlab
