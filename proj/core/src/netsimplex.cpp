#include "flowlab/netsimplex.hpp"

#include <algorithm>
#include <cassert>
#include <cstdio>
#include <deque>

namespace flowlab {

namespace {

enum class ArcState : std::uint8_t { Tree, Lower, Upper };

std::vector<ArcState> states_from_basis(const Network& net, const TreeBasis& basis) {
  std::vector<ArcState> state(net.arcs.size(), ArcState::Lower);
  std::vector<char> seen(net.arcs.size(), 0);
  auto mark = [&](const std::vector<ArcId>& ids, ArcState s, const char* setName) {
    for (ArcId id : ids) {
      if (id < 0 || static_cast<size_t>(id) >= net.arcs.size() || seen[static_cast<size_t>(id)])
        raise(Errc::InfeasibleStart,
              std::string("basis sets do not partition the arcs (") + setName + ")");
      seen[static_cast<size_t>(id)] = 1;
      state[static_cast<size_t>(id)] = s;
    }
  };
  mark(basis.treeArcs, ArcState::Tree, "tree");
  mark(basis.atLower, ArcState::Lower, "atLower");
  mark(basis.atUpper, ArcState::Upper, "atUpper");
  for (char c : seen)
    if (!c) raise(Errc::InfeasibleStart, "basis sets do not cover all arcs");
  return state;
}

std::uint64_t fnv1a(const std::vector<ArcState>& state) {
  std::uint64_t h = 1469598103934665603ull;
  for (ArcState s : state) {
    h ^= static_cast<std::uint64_t>(s);
    h *= 1099511628211ull;
  }
  return h;
}

std::string hash_string(std::uint64_t h) {
  char buf[19];
  std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// Shared mutable state for a simplex run. The free functions wrap one-shot
// instances; ns_run drives a single instance to optimality.
struct SimplexRun {
  const Network& net;
  Flow flow;
  std::vector<ArcState> state;
  NodeId root;
  std::vector<Rational> pi;
  std::vector<std::vector<std::pair<ArcId, NodeId>>> adj;  // tree adjacency
  std::optional<ArcId> watched;

  SimplexRun(const Network& n, const TreeBasis& basis, Flow f)
      : net(n), flow(std::move(f)), state(states_from_basis(n, basis)), root(basis.root) {
    rebuildAdjacency();
    computePotentialsScratch();
  }

  void rebuildAdjacency() {
    adj.assign(net.nodes.size(), {});
    for (const Arc& a : net.arcs)
      if (state[static_cast<size_t>(a.id)] == ArcState::Tree) {
        adj[static_cast<size_t>(a.tail)].emplace_back(a.id, a.head);
        adj[static_cast<size_t>(a.head)].emplace_back(a.id, a.tail);
      }
  }

  void computePotentialsScratch() {
    pi.assign(net.nodes.size(), Rational());
    std::vector<char> visited(net.nodes.size(), 0);
    std::deque<NodeId> queue{root};
    visited[static_cast<size_t>(root)] = 1;
    size_t reached = 1;
    while (!queue.empty()) {
      NodeId u = queue.front();
      queue.pop_front();
      for (auto [id, other] : adj[static_cast<size_t>(u)]) {
        if (visited[static_cast<size_t>(other)]) continue;
        visited[static_cast<size_t>(other)] = 1;
        const Arc& a = net.arcs[static_cast<size_t>(id)];
        pi[static_cast<size_t>(other)] =
            a.tail == u ? pi[static_cast<size_t>(u)] + a.cost : pi[static_cast<size_t>(u)] - a.cost;
        queue.push_back(other);
        ++reached;
      }
    }
    if (reached != net.nodes.size())
      raise(Errc::NotATree, "tree arcs do not span the node set");
  }

  // Natural-orientation reduced cost c(a) + pi(tail) - pi(head).
  Rational reducedNatural(const Arc& a) const {
    return a.cost + pi[static_cast<size_t>(a.tail)] - pi[static_cast<size_t>(a.head)];
  }

  std::optional<EnteringArc> chooseEntering() const {
    std::optional<EnteringArc> best;
    for (const Arc& a : net.arcs) {
      ArcState s = state[static_cast<size_t>(a.id)];
      if (s == ArcState::Tree) continue;
      Dir dir = s == ArcState::Lower ? Dir::Forward : Dir::Backward;
      // the candidate direction must have positive residual capacity
      if (s == ArcState::Lower && !(Rational() < a.capacity)) continue;
      if (s == ArcState::Upper && flow.on(a.id).isZero()) continue;
      Rational rc = reducedNatural(a);
      if (dir == Dir::Backward) rc = -rc;
      if (rc.sign() >= 0) continue;
      if (!best || rc < best->reducedCost) {
        best = EnteringArc{a.id, dir, std::move(rc), false};
      } else if (rc == best->reducedCost) {
        best->tied = true;
      }
    }
    return best;
  }

  std::vector<std::pair<ArcId, Dir>> treePath(NodeId from, NodeId to) const {
    std::vector<int> parentArc(net.nodes.size(), -1);
    std::vector<NodeId> parentNode(net.nodes.size(), -1);
    std::vector<char> visited(net.nodes.size(), 0);
    std::deque<NodeId> queue{from};
    visited[static_cast<size_t>(from)] = 1;
    while (!queue.empty() && !visited[static_cast<size_t>(to)]) {
      NodeId u = queue.front();
      queue.pop_front();
      for (auto [id, other] : adj[static_cast<size_t>(u)]) {
        if (visited[static_cast<size_t>(other)]) continue;
        visited[static_cast<size_t>(other)] = 1;
        parentArc[static_cast<size_t>(other)] = id;
        parentNode[static_cast<size_t>(other)] = u;
        queue.push_back(other);
      }
    }
    assert(visited[static_cast<size_t>(to)]);
    std::vector<std::pair<ArcId, Dir>> rev;
    for (NodeId v = to; v != from; v = parentNode[static_cast<size_t>(v)]) {
      ArcId id = parentArc[static_cast<size_t>(v)];
      const Arc& a = net.arcs[static_cast<size_t>(id)];
      rev.emplace_back(id, a.head == v ? Dir::Forward : Dir::Backward);
    }
    std::reverse(rev.begin(), rev.end());
    return rev;
  }

  PivotRecord pivotOnce(const EnteringArc& entering, std::int64_t index) {
    const Arc& ea = net.arcs[static_cast<size_t>(entering.arc)];
    NodeId pushHead = entering.dir == Dir::Forward ? ea.head : ea.tail;
    NodeId pushTail = entering.dir == Dir::Forward ? ea.tail : ea.head;

    PivotRecord rec;
    rec.index = index;
    rec.enteringArc = entering.arc;
    rec.enteringDir = entering.dir;
    rec.reducedCost = entering.reducedCost;
    rec.enteringTied = entering.tied;
    rec.cycleArcs.emplace_back(entering.arc, entering.dir);
    for (auto& step : treePath(pushHead, pushTail)) rec.cycleArcs.push_back(step);

    // bottleneck and first blocking arc, walking from the entering arc
    Capacity theta = Capacity::unbounded();
    size_t blockIdx = 0;
    bool haveBlock = false;
    for (size_t i = 0; i < rec.cycleArcs.size(); ++i) {
      auto [id, dir] = rec.cycleArcs[i];
      const Arc& a = net.arcs[static_cast<size_t>(id)];
      Capacity r = dir == Dir::Forward ? a.capacity.minus(flow.on(id)) : Capacity(flow.on(id));
      if (!haveBlock || r < theta) {
        theta = r;
        blockIdx = i;
        haveBlock = !r.isUnbounded();
        rec.leavingTied = false;
      } else if (!r.isUnbounded() && r == theta) {
        rec.leavingTied = true;
      }
    }
    if (theta.isUnbounded())
      raise(Errc::UnboundedCycle, "pivot cycle has unbounded capacity in the push direction");
    rec.theta = theta.value();
    if (rec.theta.isZero())
      raise(Errc::DegeneratePivot, "pivot " + std::to_string(index) + " pushes zero flow");

    for (auto [id, dir] : rec.cycleArcs) {
      if (dir == Dir::Forward)
        flow.on(id) += rec.theta;
      else
        flow.on(id) -= rec.theta;
    }

    auto [leaveId, leaveDir] = rec.cycleArcs[blockIdx];
    rec.leavingArc = leaveId;
    rec.leavingBound = leaveDir == Dir::Forward ? ArcBound::Upper : ArcBound::Lower;

    if (leaveId == entering.arc) {
      // the entering arc blocks itself: it moves between its bounds and the
      // tree is unchanged
      state[static_cast<size_t>(entering.arc)] =
          rec.leavingBound == ArcBound::Upper ? ArcState::Upper : ArcState::Lower;
    } else {
      // nodes on the root side of the tree with the leaving arc removed keep
      // their potentials; the far side shifts by the entering reduced cost
      std::vector<char> rootSide(net.nodes.size(), 0);
      {
        std::deque<NodeId> queue{root};
        rootSide[static_cast<size_t>(root)] = 1;
        while (!queue.empty()) {
          NodeId u = queue.front();
          queue.pop_front();
          for (auto [id, other] : adj[static_cast<size_t>(u)]) {
            if (id == leaveId || rootSide[static_cast<size_t>(other)]) continue;
            rootSide[static_cast<size_t>(other)] = 1;
            queue.push_back(other);
          }
        }
      }
      Rational delta = reducedNatural(ea);
      if (!rootSide[static_cast<size_t>(ea.tail)]) delta = -delta;
      assert(rootSide[static_cast<size_t>(ea.tail)] != rootSide[static_cast<size_t>(ea.head)]);
      for (size_t v = 0; v < net.nodes.size(); ++v)
        if (!rootSide[v]) pi[v] += delta;

      state[static_cast<size_t>(leaveId)] =
          rec.leavingBound == ArcBound::Upper ? ArcState::Upper : ArcState::Lower;
      state[static_cast<size_t>(entering.arc)] = ArcState::Tree;
      rebuildAdjacency();
#ifndef NDEBUG
      std::vector<Rational> shifted = pi;
      computePotentialsScratch();
      assert(shifted == pi);
#endif
    }

    rec.basisAfter = hash_string(fnv1a(state));
    rec.watchedInBasis =
        watched && state[static_cast<size_t>(*watched)] == ArcState::Tree;
    return rec;
  }

  TreeBasis exportBasis() const {
    TreeBasis b;
    b.root = root;
    for (const Arc& a : net.arcs) {
      switch (state[static_cast<size_t>(a.id)]) {
        case ArcState::Tree: b.treeArcs.push_back(a.id); break;
        case ArcState::Lower: b.atLower.push_back(a.id); break;
        case ArcState::Upper: b.atUpper.push_back(a.id); break;
      }
    }
    return b;
  }

  void validateStart() const {
    size_t n = net.nodes.size();
    size_t treeCount = 0;
    for (ArcState s : state)
      if (s == ArcState::Tree) ++treeCount;
    if (treeCount + 1 != n)
      raise(Errc::InfeasibleStart, "basis has " + std::to_string(treeCount) + " tree arcs for " +
                                       std::to_string(n) + " nodes");
    for (const Arc& a : net.arcs) {
      ArcState s = state[static_cast<size_t>(a.id)];
      if (s == ArcState::Lower && !flow.on(a.id).isZero())
        raise(Errc::InfeasibleStart,
              "atLower arc " + std::to_string(a.id) + " carries flow " + flow.on(a.id).str());
      if (s == ArcState::Upper &&
          (a.capacity.isUnbounded() || flow.on(a.id) != a.capacity.value()))
        raise(Errc::InfeasibleStart,
              "atUpper arc " + std::to_string(a.id) + " is not at its capacity");
    }
    try {
      check_flow(net, flow, Rational());
    } catch (const Error& e) {
      raise(Errc::InfeasibleStart, std::string("initial flow infeasible: ") + e.what());
    }
  }
};

}  // namespace

NodePotentials compute_potentials(const Network& net, const TreeBasis& basis) {
  if (basis.treeArcs.size() + 1 != net.nodes.size())
    raise(Errc::NotATree, "expected " + std::to_string(net.nodes.size() - 1) + " tree arcs, got " +
                              std::to_string(basis.treeArcs.size()));
  std::vector<std::vector<std::pair<ArcId, NodeId>>> adj(net.nodes.size());
  for (ArcId id : basis.treeArcs) {
    const Arc& a = net.arcs[static_cast<size_t>(id)];
    adj[static_cast<size_t>(a.tail)].emplace_back(id, a.head);
    adj[static_cast<size_t>(a.head)].emplace_back(id, a.tail);
  }
  NodePotentials result;
  result.pi.assign(net.nodes.size(), Rational());
  std::vector<char> visited(net.nodes.size(), 0);
  std::deque<NodeId> queue{basis.root};
  visited[static_cast<size_t>(basis.root)] = 1;
  size_t reached = 1;
  while (!queue.empty()) {
    NodeId u = queue.front();
    queue.pop_front();
    for (auto [id, other] : adj[static_cast<size_t>(u)]) {
      if (visited[static_cast<size_t>(other)]) continue;
      visited[static_cast<size_t>(other)] = 1;
      const Arc& a = net.arcs[static_cast<size_t>(id)];
      result.pi[static_cast<size_t>(other)] = a.tail == u
                                                  ? result.pi[static_cast<size_t>(u)] + a.cost
                                                  : result.pi[static_cast<size_t>(u)] - a.cost;
      queue.push_back(other);
      ++reached;
    }
  }
  if (reached != net.nodes.size()) raise(Errc::NotATree, "tree arcs do not span the node set");
  return result;
}

std::optional<EnteringArc> dantzig_entering(const Network& net, const Flow& flow,
                                            const TreeBasis& basis,
                                            const NodePotentials& potentials) {
  std::vector<ArcState> state = states_from_basis(net, basis);
  std::optional<EnteringArc> best;
  for (const Arc& a : net.arcs) {
    ArcState s = state[static_cast<size_t>(a.id)];
    if (s == ArcState::Tree) continue;
    Dir dir = s == ArcState::Lower ? Dir::Forward : Dir::Backward;
    if (s == ArcState::Lower && !(Rational() < a.capacity)) continue;
    if (s == ArcState::Upper && flow.on(a.id).isZero()) continue;
    Rational rc = a.cost + potentials.pi[static_cast<size_t>(a.tail)] -
                  potentials.pi[static_cast<size_t>(a.head)];
    if (dir == Dir::Backward) rc = -rc;
    if (rc.sign() >= 0) continue;
    if (!best || rc < best->reducedCost) {
      best = EnteringArc{a.id, dir, std::move(rc), false};
    } else if (rc == best->reducedCost) {
      best->tied = true;
    }
  }
  return best;
}

PivotRecord pivot(const Network& net, Flow& flow, TreeBasis& basis, const EnteringArc& entering) {
  SimplexRun run(net, basis, flow);
  if (run.state[static_cast<size_t>(entering.arc)] == ArcState::Tree)
    raise(Errc::InfeasibleStart, "entering arc is already in the basis");
  PivotRecord rec = run.pivotOnce(entering, 0);
  flow = run.flow;
  basis = run.exportBasis();
  return rec;
}

NsTrace ns_run(const Network& net, const TreeBasis& initialBasis, const Flow& initialFlow,
               std::optional<ArcId> watched, std::int64_t maxPivots, const NsObserver& observer) {
  validate_network(net);
  if (watched && (*watched < 0 || static_cast<size_t>(*watched) >= net.arcs.size()))
    raise(Errc::DanglingEndpoint, "watched arc id " + std::to_string(*watched) + " out of range");
  SimplexRun run(net, initialBasis, initialFlow);
  run.watched = watched;
  run.validateStart();

  NsTrace trace;
  for (std::int64_t index = 0;; ++index) {
    std::optional<EnteringArc> entering = run.chooseEntering();
    if (!entering) break;
    if (index >= maxPivots)
      raise(Errc::PivotBudgetExceeded,
            "ns_run exceeded " + std::to_string(maxPivots) + " pivots");
    trace.pivots.push_back(run.pivotOnce(*entering, index));
#ifndef NDEBUG
    check_flow(net, run.flow, Rational());
#endif
    if (observer) observer(trace.pivots.back(), run.flow);
  }
  trace.finalFlow = run.flow;
  trace.finalBasis = run.exportBasis();
  return trace;
}

}  // namespace flowlab
