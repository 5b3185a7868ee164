#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "flowlab/network.hpp"

namespace flowlab {

struct SspIteration {
  std::int64_t index = 0;
  std::vector<NodeId> pathNodes;                 // source ... sink
  std::vector<std::pair<ArcId, Dir>> pathArcs;   // residual directions used
  Rational pathCost;
  Rational amount;                               // bottleneck, always pushed in full
  std::optional<Rational> flowOnWatched;         // after this iteration
};

struct SspTrace {
  std::vector<SspIteration> iterations;
  Flow finalFlow;
  Rational totalCost;
};

struct ShortestPath {
  std::vector<std::pair<ArcId, Dir>> arcs;
  Rational cost;
};

// Minimum-cost source->sink path in the residual network of (net, flow), or
// nullopt when the sink is unreachable. Label-correcting relaxation over the
// residual arcs in (ArcId, Forward before Backward) order with strict-only
// parent updates, so the selected path is deterministic. Backward arcs carry
// negative costs; a residual negative cycle aborts with NegativeCycleDetected.
std::optional<ShortestPath> shortest_residual_path(const Network& net, const Flow& flow,
                                                   NodeId source, NodeId sink);

// Called after each augmentation with the fresh iteration record and the
// current flow.
using SspObserver = std::function<void(const SspIteration&, const Flow&)>;

// Successive shortest paths from the zero flow until the sink becomes
// unreachable. Every iteration augments the bottleneck amount along the
// selected shortest path. Needing more than maxIterations augmentations is
// an error, never silent truncation.
SspTrace ssp_run(const Network& net, std::optional<ArcId> watched, std::int64_t maxIterations,
                 const SspObserver& observer = {});

}  // namespace flowlab
