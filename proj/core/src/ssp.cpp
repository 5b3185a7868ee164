#include "flowlab/ssp.hpp"

#include <algorithm>
#include <cassert>

namespace flowlab {

namespace {

// Costs in a generated network share a granularity g; dividing them out lets
// the relaxation loop run on big integers instead of rationals. Scaling by a
// positive constant preserves every comparison, so selected paths and
// tie-breaks are unchanged.
struct ScaledCosts {
  Rational granularity;
  std::vector<BigInt> units;  // cost[a] / granularity, exact
};

ScaledCosts scale_costs(const Network& net) {
  std::vector<Rational> magnitudes;
  for (const Arc& a : net.arcs)
    if (!a.cost.isZero()) magnitudes.push_back(a.cost.abs());
  ScaledCosts sc;
  sc.granularity = magnitudes.empty() ? Rational(1) : common_granularity(magnitudes);
  sc.units.reserve(net.arcs.size());
  for (const Arc& a : net.arcs) {
    Rational q = a.cost / sc.granularity;
    assert(q.isInteger());
    sc.units.push_back(q.num());
  }
  return sc;
}

struct BfArc {
  NodeId tail, head;
  ArcId base;
  Dir dir;
  const BigInt* cost;  // scaled units, sign already applied for Backward
};

struct BfResult {
  bool reachable = false;
  BigInt dist;                                  // scaled units
  std::vector<std::pair<ArcId, Dir>> pathArcs;  // source -> sink
};

// One round-based Bellman-Ford pass structure. Arcs are scanned in
// (ArcId, Forward before Backward) order; only strict improvements update
// distance and parent, which keeps the parent chain simple and the selected
// path deterministic.
BfResult bellman_ford(const Network& net, const Flow& flow, const ScaledCosts& sc,
                      NodeId source, NodeId sink) {
  const size_t n = net.nodes.size();
  std::vector<BfArc> arcs;
  arcs.reserve(net.arcs.size() * 2);
  std::vector<BigInt> negCost(net.arcs.size());
  for (const Arc& a : net.arcs) {
    const Rational& f = flow.on(a.id);
    if (f < a.capacity) arcs.push_back(BfArc{a.tail, a.head, a.id, Dir::Forward,
                                             &sc.units[static_cast<size_t>(a.id)]});
    if (f.sign() > 0) {
      negCost[static_cast<size_t>(a.id)] = -sc.units[static_cast<size_t>(a.id)];
      arcs.push_back(BfArc{a.head, a.tail, a.id, Dir::Backward,
                           &negCost[static_cast<size_t>(a.id)]});
    }
  }

  std::vector<BigInt> dist(n);
  std::vector<char> reached(n, 0), changedPrev(n, 0), changedCur(n, 0);
  std::vector<int> parent(n, -1);  // index into arcs
  reached[static_cast<size_t>(source)] = 1;
  changedPrev[static_cast<size_t>(source)] = 1;

  bool anyChange = true;
  size_t pass = 0;
  for (; pass <= n && anyChange; ++pass) {
    anyChange = false;
    for (size_t i = 0; i < arcs.size(); ++i) {
      const BfArc& ra = arcs[i];
      size_t u = static_cast<size_t>(ra.tail), v = static_cast<size_t>(ra.head);
      if (!reached[u] || !(changedPrev[u] || changedCur[u])) continue;
      BigInt cand = dist[u] + *ra.cost;
      if (!reached[v] || cand < dist[v]) {
        dist[v] = std::move(cand);
        reached[v] = 1;
        parent[v] = static_cast<int>(i);
        changedCur[v] = 1;
        anyChange = true;
      }
    }
    changedPrev.swap(changedCur);
    std::fill(changedCur.begin(), changedCur.end(), 0);
  }
  if (anyChange)
    raise(Errc::NegativeCycleDetected, "residual network contains a negative-cost cycle");

  BfResult result;
  if (!reached[static_cast<size_t>(sink)]) return result;
  result.reachable = true;
  result.dist = dist[static_cast<size_t>(sink)];
  for (NodeId v = sink; v != source;) {
    const BfArc& ra = arcs[static_cast<size_t>(parent[static_cast<size_t>(v)])];
    result.pathArcs.emplace_back(ra.base, ra.dir);
    v = ra.tail;
  }
  std::reverse(result.pathArcs.begin(), result.pathArcs.end());
  return result;
}

Rational bottleneck(const Network& net, const Flow& flow,
                    const std::vector<std::pair<ArcId, Dir>>& pathArcs) {
  Capacity amount = Capacity::unbounded();
  for (auto [id, dir] : pathArcs) {
    const Arc& a = net.arcs[static_cast<size_t>(id)];
    Capacity r = dir == Dir::Forward ? a.capacity.minus(flow.on(id)) : Capacity(flow.on(id));
    amount = min(amount, r);
  }
  if (amount.isUnbounded())
    raise(Errc::UnboundedAugmentation, "augmenting path has unbounded capacity");
  return amount.value();
}

}  // namespace

std::optional<ShortestPath> shortest_residual_path(const Network& net, const Flow& flow,
                                                   NodeId source, NodeId sink) {
  ScaledCosts sc = scale_costs(net);
  BfResult bf = bellman_ford(net, flow, sc, source, sink);
  if (!bf.reachable) return std::nullopt;
  return ShortestPath{std::move(bf.pathArcs), sc.granularity * Rational(bf.dist)};
}

SspTrace ssp_run(const Network& net, std::optional<ArcId> watched, std::int64_t maxIterations,
                 const SspObserver& observer) {
  validate_network(net);
  if (!net.source || !net.sink || *net.source == *net.sink)
    raise(Errc::InfeasibleFlow, "ssp_run requires distinct source and sink");
  if (watched && (*watched < 0 || static_cast<size_t>(*watched) >= net.arcs.size()))
    raise(Errc::DanglingEndpoint, "watched arc id " + std::to_string(*watched) + " out of range");
  NodeId source = *net.source, sink = *net.sink;

  ScaledCosts sc = scale_costs(net);
  SspTrace trace;
  trace.finalFlow = Flow::zero(net);
  Flow& flow = trace.finalFlow;
  Rational routed;

  for (std::int64_t iter = 0;; ++iter) {
    BfResult bf = bellman_ford(net, flow, sc, source, sink);
    if (!bf.reachable) break;
    if (iter >= maxIterations)
      raise(Errc::IterationBudgetExceeded,
            "ssp_run exceeded " + std::to_string(maxIterations) + " iterations");

    SspIteration rec;
    rec.index = iter;
    rec.pathArcs = std::move(bf.pathArcs);
    rec.pathCost = sc.granularity * Rational(bf.dist);
    rec.amount = bottleneck(net, flow, rec.pathArcs);

    rec.pathNodes.push_back(source);
    for (auto [id, dir] : rec.pathArcs) {
      const Arc& a = net.arcs[static_cast<size_t>(id)];
      if (dir == Dir::Forward)
        flow.on(id) += rec.amount;
      else
        flow.on(id) -= rec.amount;
      rec.pathNodes.push_back(dir == Dir::Forward ? a.head : a.tail);
    }
    routed += rec.amount;
    trace.totalCost += rec.pathCost * rec.amount;
    if (watched) rec.flowOnWatched = flow.on(*watched);

    assert(trace.iterations.empty() || trace.iterations.back().pathCost <= rec.pathCost);
#ifndef NDEBUG
    check_flow(net, flow, routed);
#endif
    trace.iterations.push_back(std::move(rec));
    if (observer) observer(trace.iterations.back(), flow);
  }
  return trace;
}

}  // namespace flowlab
