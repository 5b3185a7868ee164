#include "flowlab/gadgets.hpp"

#include <cassert>

namespace flowlab {

namespace mp = boost::multiprecision;

int bit_of(std::uint64_t k, unsigned j) {
  if (j >= 64) return 0;
  return static_cast<int>((k >> j) & 1u);
}

Rational signed_sum(const std::vector<Rational>& v, int i1, int i2, std::uint64_t k) {
  if (i1 < 0 || i1 > i2 || i2 > static_cast<int>(v.size()))
    raise(Errc::IndexOrder, "signed_sum requires 0 <= i1 <= i2 <= len(v)");
  Rational sum;
  for (int j = i1 + 1; j <= i2; ++j) {
    const Rational& term = v[static_cast<size_t>(j - 1)];
    if (bit_of(k, static_cast<unsigned>(j - 1)))
      sum -= term;
    else
      sum += term;
  }
  return sum;
}

PartitionInstance normalize_instance(const std::vector<Rational>& raw) {
  if (raw.empty()) raise(Errc::EmptyInstance, "empty partition instance");
  BigInt denomLcm = 1;
  for (const Rational& a : raw) {
    if (a.sign() <= 0)
      raise(Errc::NonPositiveEntry, "partition values must be positive, got " + a.str());
    denomLcm = mp::lcm(denomLcm, a.den());
  }
  std::vector<BigInt> ints;
  ints.reserve(raw.size());
  BigInt sum = 0, g = 0;
  for (const Rational& a : raw) {
    BigInt p = a.num() * (denomLcm / a.den());
    sum += p;
    g = mp::gcd(g, p);
    ints.push_back(std::move(p));
  }
  BigInt scale = 13 * sum;
  PartitionInstance inst;
  inst.raw = raw;
  inst.normalized.reserve(raw.size());
  for (BigInt& p : ints) inst.normalized.emplace_back(std::move(p), scale);
  inst.epsilon = Rational(std::move(g), scale);
  inst.total = Rational(1, 13);
  return inst;
}

const char* to_string(GadgetFamily f) {
  switch (f) {
    case GadgetFamily::CountingSsp: return "counting-ssp";
    case GadgetFamily::Gssp: return "gssp";
    case GadgetFamily::CountingNs: return "counting-ns";
    case GadgetFamily::NsHarness: return "ns-harness";
    case GadgetFamily::Gns: return "gns";
  }
  return "?";
}

GadgetFamily gadget_family_from_string(std::string_view s) {
  if (s == "counting-ssp") return GadgetFamily::CountingSsp;
  if (s == "gssp") return GadgetFamily::Gssp;
  if (s == "counting-ns") return GadgetFamily::CountingNs;
  if (s == "ns-harness") return GadgetFamily::NsHarness;
  if (s == "gns") return GadgetFamily::Gns;
  raise(Errc::ParseError, "unknown gadget family '" + std::string(s) + "'");
}

namespace {

std::vector<Rational> signed_values(const PartitionInstance& inst, int sign) {
  assert(sign == 1 || sign == -1);
  std::vector<Rational> v = inst.normalized;
  if (sign < 0)
    for (Rational& x : v) x = -x;
  return v;
}

struct Chains {
  std::vector<NodeId> s, t;  // s[0..level], t[0..level]
};

Chains add_chain_nodes(Network& net, std::map<std::string, NodeId>& roles, int level,
                       const std::string& suffix) {
  Chains c;
  for (int i = 0; i <= level; ++i) {
    std::string ls = "s" + std::to_string(i) + suffix;
    c.s.push_back(net.addNode(Rational(), ls));
    roles[ls] = c.s.back();
  }
  for (int i = 0; i <= level; ++i) {
    std::string lt = "t" + std::to_string(i) + suffix;
    c.t.push_back(net.addNode(Rational(), lt));
    roles[lt] = c.t.back();
  }
  return c;
}

std::string arc_label(const Network& net, NodeId tail, NodeId head) {
  return *net.nodes[static_cast<size_t>(tail)].label + "->" +
         *net.nodes[static_cast<size_t>(head)].label;
}

ArcId add_labeled_arc(Network& net, NodeId tail, NodeId head, Rational cost, Capacity cap) {
  return net.addArc(tail, head, std::move(cost), std::move(cap), arc_label(net, tail, head));
}

// Levels 1..level of the successive-shortest-path counting gadget: cheap
// chain arcs of cost v_i/2 and expensive diagonals of cost (2^i - 1 - v_i)/2,
// all with capacity 2^(i-1).
void add_ssp_levels(Network& net, const Chains& c, const std::vector<Rational>& v, int level) {
  const Rational half(1, 2);
  for (int i = 1; i <= level; ++i) {
    const Rational& vi = v[static_cast<size_t>(i - 1)];
    Rational cheap = half * vi;
    Rational expensive = half * (rational_pow2(i) - Rational(1) - vi);
    Capacity cap(rational_pow2(i - 1));
    add_labeled_arc(net, c.s[i], c.s[i - 1], cheap, cap);
    add_labeled_arc(net, c.t[i - 1], c.t[i], cheap, cap);
    add_labeled_arc(net, c.s[i], c.t[i - 1], expensive, cap);
    add_labeled_arc(net, c.s[i - 1], c.t[i], expensive, cap);
  }
}

// x_i = 3 * 2^(i-1) - 1, the capacity parameter of the simplex gadget.
Rational x_of(int i) { return Rational(3) * rational_pow2(i - 1) - Rational(1); }

struct NsLevelArcs {
  std::vector<ArcId> sChain, tChain;  // (s_i,s_{i-1}) and (t_{i-1},t_i), i = 1..level
};

// Levels 1..level of the network-simplex counting gadget: all four level-i
// arcs have capacity x_i + 1; diagonal costs are split by r. An optional
// per-level offset perturbs every level-i cost by i * perturbStep.
NsLevelArcs add_ns_levels(Network& net, const Chains& c, const std::vector<Rational>& v,
                          const Rational& r, int level, const Rational& perturbStep) {
  NsLevelArcs out;
  const Rational half(1, 2);
  for (int i = 1; i <= level; ++i) {
    const Rational& vi = v[static_cast<size_t>(i - 1)];
    Rational offset = perturbStep * Rational(i);
    Rational cheap = half * vi + offset;
    Rational power = rational_pow2(i - 1);
    Rational diagLow = power - r - half * vi + offset;          // (s_i, t_{i-1})
    Rational diagHigh = power - (Rational(1) - r) - half * vi + offset;  // (s_{i-1}, t_i)
    Capacity cap(x_of(i) + Rational(1));
    out.sChain.push_back(add_labeled_arc(net, c.s[i], c.s[i - 1], cheap, cap));
    out.tChain.push_back(add_labeled_arc(net, c.t[i - 1], c.t[i], cheap, cap));
    add_labeled_arc(net, c.s[i], c.t[i - 1], diagLow, cap);
    add_labeled_arc(net, c.s[i - 1], c.t[i], diagHigh, cap);
  }
  return out;
}

void check_level(const PartitionInstance& inst, int level, int minLevel) {
  if (level < minLevel || level > inst.size())
    raise(Errc::LevelOutOfRange, "level " + std::to_string(level) + " outside [" +
                                     std::to_string(minLevel) + ", " +
                                     std::to_string(inst.size()) + "]");
}

void check_r(const PartitionInstance& inst, const Rational& r) {
  Rational lo = Rational(2) * inst.total;
  Rational hi = Rational(1) - lo;
  if (!(lo < r) || !(r < hi) || r == Rational(1, 2))
    raise(Errc::InvalidR, "r = " + r.str() + " must lie in (" + lo.str() + ", " + hi.str() +
                              ") and differ from 1/2");
}

}  // namespace

GadgetNetwork build_counting_ssp(const PartitionInstance& inst, int sign, int level) {
  check_level(inst, level, 0);
  std::vector<Rational> v = signed_values(inst, sign);

  GadgetNetwork g;
  g.meta = GadgetMeta{GadgetFamily::CountingSsp, level, sign, Rational(), inst.epsilon};
  Chains c = add_chain_nodes(g.net, g.roles, level, "");
  add_labeled_arc(g.net, c.s[0], c.t[0], Rational(), Capacity(1));
  add_ssp_levels(g.net, c, v, level);
  g.net.source = c.s[static_cast<size_t>(level)];
  g.net.sink = c.t[static_cast<size_t>(level)];
  g.initialFlow = Flow::zero(g.net);
  return g;
}

GadgetNetwork build_gssp(const PartitionInstance& inst) {
  int n = inst.size();
  GadgetNetwork g;
  g.meta = GadgetMeta{GadgetFamily::Gssp, n, +1, Rational(), inst.epsilon};
  NodeId s = g.net.addNode(Rational(), "s");
  NodeId t = g.net.addNode(Rational(), "t");
  g.roles["s"] = s;
  g.roles["t"] = t;

  Rational eps5 = inst.epsilon / Rational(5);
  Chains plus = add_chain_nodes(g.net, g.roles, n, "+");
  add_labeled_arc(g.net, plus.s[0], plus.t[0], eps5, Capacity(1));
  add_ssp_levels(g.net, plus, signed_values(inst, +1), n);
  Chains minus = add_chain_nodes(g.net, g.roles, n, "-");
  add_labeled_arc(g.net, minus.s[0], minus.t[0], eps5, Capacity(1));
  add_ssp_levels(g.net, minus, signed_values(inst, -1), n);

  Capacity connectorCap(rational_pow2(n));
  add_labeled_arc(g.net, s, plus.s[static_cast<size_t>(n)], Rational(), connectorCap);
  add_labeled_arc(g.net, plus.t[static_cast<size_t>(n)], t, Rational(), connectorCap);
  add_labeled_arc(g.net, s, minus.s[static_cast<size_t>(n)], Rational(), connectorCap);
  add_labeled_arc(g.net, minus.t[static_cast<size_t>(n)], t, Rational(), connectorCap);

  ArcId e = g.net.addArc(plus.s[0], minus.t[0], Rational(), Capacity(1), "e");
  g.watched.push_back(e);

  g.net.source = s;
  g.net.sink = t;
  g.initialFlow = Flow::zero(g.net);
  return g;
}

GadgetNetwork build_counting_ns(const PartitionInstance& inst, int sign, const Rational& r,
                                int level) {
  check_level(inst, level, 0);
  check_r(inst, r);
  std::vector<Rational> v = signed_values(inst, sign);

  GadgetNetwork g;
  g.meta = GadgetMeta{GadgetFamily::CountingNs, level, sign, r, inst.epsilon};
  Chains c = add_chain_nodes(g.net, g.roles, level, "");
  add_labeled_arc(g.net, c.s[0], c.t[0], Rational(), Capacity(1));
  NsLevelArcs levels = add_ns_levels(g.net, c, v, r, level, Rational());

  g.net.nodes[static_cast<size_t>(c.s[static_cast<size_t>(level)])].balance += Rational(1);
  g.net.nodes[static_cast<size_t>(c.t[0])].balance += Rational(1);
  g.net.nodes[static_cast<size_t>(c.s[0])].balance -= Rational(1);
  g.net.nodes[static_cast<size_t>(c.t[static_cast<size_t>(level)])].balance -= Rational(1);

  g.initialFlow = Flow::zero(g.net);
  for (ArcId id : levels.sChain) g.initialFlow.on(id) = Rational(1);
  for (ArcId id : levels.tChain) g.initialFlow.on(id) = Rational(1);
  return g;
}

GadgetNetwork build_ns_harness(const PartitionInstance& inst, int sign, const Rational& r,
                               int level) {
  check_level(inst, level, 1);
  check_r(inst, r);
  std::vector<Rational> v = signed_values(inst, sign);
  Rational x = x_of(level);
  Rational boundary = Rational(2) * x + Rational(2);  // throughput plus the two unit paths

  GadgetNetwork g;
  g.meta = GadgetMeta{GadgetFamily::NsHarness, level, sign, r, inst.epsilon};
  NodeId s = g.net.addNode(boundary, "s");
  NodeId t = g.net.addNode(-boundary, "t");
  g.roles["s"] = s;
  g.roles["t"] = t;

  Chains c = add_chain_nodes(g.net, g.roles, level, "");
  ArcId innermost = add_labeled_arc(g.net, c.s[0], c.t[0], Rational(), Capacity(1));
  NsLevelArcs levels = add_ns_levels(g.net, c, v, r, level, Rational());
  g.net.nodes[static_cast<size_t>(c.t[0])].balance += Rational(1);
  g.net.nodes[static_cast<size_t>(c.s[0])].balance -= Rational(1);

  NodeId sTop = c.s[static_cast<size_t>(level)];
  NodeId tTop = c.t[static_cast<size_t>(level)];
  ArcId srcLink = add_labeled_arc(g.net, s, sTop, Rational(), Capacity::unbounded());
  ArcId sinkLink = add_labeled_arc(g.net, tTop, t, Rational(), Capacity::unbounded());
  ArcId backbone = add_labeled_arc(g.net, s, t, rational_pow2(level + 1) + Rational(1),
                                   Capacity::unbounded());

  g.initialFlow = Flow::zero(g.net);
  for (ArcId id : levels.sChain) g.initialFlow.on(id) = Rational(1);
  for (ArcId id : levels.tChain) g.initialFlow.on(id) = Rational(1);
  g.initialFlow.on(srcLink) = Rational(1);
  g.initialFlow.on(sinkLink) = Rational(1);
  g.initialFlow.on(backbone) = Rational(2) * x + Rational(1);

  TreeBasis basis;
  basis.root = s;
  basis.treeArcs = {srcLink, sinkLink, backbone};
  for (ArcId id : levels.sChain) basis.treeArcs.push_back(id);
  for (ArcId id : levels.tChain) basis.treeArcs.push_back(id);
  basis.atLower.push_back(innermost);
  for (const Arc& a : g.net.arcs) {
    bool inTree = false;
    for (ArcId id : basis.treeArcs)
      if (id == a.id) inTree = true;
    if (!inTree && a.id != innermost) basis.atLower.push_back(a.id);
  }
  g.initialBasis = std::move(basis);
  return g;
}

GadgetNetwork build_gns(const PartitionInstance& inst, bool perturbMinusGadget) {
  // the reduction assumes a leading zero element
  std::vector<Rational> vPlus{Rational()};
  for (const Rational& a : inst.normalized) vPlus.push_back(a);
  std::vector<Rational> vMinus{Rational()};
  for (const Rational& a : inst.normalized) vMinus.push_back(-a);
  int n = static_cast<int>(vPlus.size());
  Rational r(1, 3);
  Rational x = x_of(n);
  Rational eps5 = inst.epsilon / Rational(5);
  Rational fourX = Rational(4) * x;

  GadgetNetwork g;
  g.meta = GadgetMeta{GadgetFamily::Gns, n, +1, r, inst.epsilon};
  NodeId s = g.net.addNode(fourX + Rational(2), "s");
  NodeId t = g.net.addNode(-(fourX + Rational(2)), "t");
  g.roles["s"] = s;
  g.roles["t"] = t;

  Chains plus = add_chain_nodes(g.net, g.roles, n, "+");
  NodeId cPlus = g.net.addNode(Rational(-1), "c+");
  g.roles["c+"] = cPlus;
  ArcId plusIn = add_labeled_arc(g.net, plus.s[0], cPlus, Rational(), Capacity(2));
  ArcId plusOut = add_labeled_arc(g.net, cPlus, plus.t[0], eps5, Capacity(2));
  NsLevelArcs plusLevels = add_ns_levels(g.net, plus, vPlus, r, n, Rational());
  g.net.nodes[static_cast<size_t>(plus.t[0])].balance += Rational(1);

  Chains minus = add_chain_nodes(g.net, g.roles, n, "-");
  NodeId cMinus = g.net.addNode(Rational(1), "c-");
  g.roles["c-"] = cMinus;
  ArcId minusIn = add_labeled_arc(g.net, minus.s[0], cMinus, eps5, Capacity(2));
  ArcId minusOut = add_labeled_arc(g.net, cMinus, minus.t[0], Rational(), Capacity(2));
  Rational perturbStep = perturbMinusGadget ? inst.epsilon / Rational(1000) : Rational();
  NsLevelArcs minusLevels = add_ns_levels(g.net, minus, vMinus, r, n, perturbStep);
  g.net.nodes[static_cast<size_t>(minus.s[0])].balance -= Rational(1);

  ArcId srcPlus = add_labeled_arc(g.net, s, plus.s[static_cast<size_t>(n)], Rational(),
                                  Capacity::unbounded());
  ArcId sinkPlus = add_labeled_arc(g.net, plus.t[static_cast<size_t>(n)], t, Rational(),
                                   Capacity::unbounded());
  ArcId srcMinus = add_labeled_arc(g.net, s, minus.s[static_cast<size_t>(n)], Rational(),
                                   Capacity::unbounded());
  ArcId sinkMinus = add_labeled_arc(g.net, minus.t[static_cast<size_t>(n)], t, Rational(),
                                    Capacity::unbounded());
  ArcId backbone =
      add_labeled_arc(g.net, s, t, rational_pow2(n + 1), Capacity::unbounded());
  ArcId e = g.net.addArc(cPlus, cMinus, Rational(), Capacity(Rational(1, 2)), "e");
  g.watched.push_back(e);

  g.initialFlow = Flow::zero(g.net);
  for (ArcId id : plusLevels.sChain) g.initialFlow.on(id) = Rational(1);
  for (ArcId id : plusLevels.tChain) g.initialFlow.on(id) = Rational(1);
  for (ArcId id : minusLevels.sChain) g.initialFlow.on(id) = Rational(1);
  for (ArcId id : minusLevels.tChain) g.initialFlow.on(id) = Rational(1);
  g.initialFlow.on(plusIn) = Rational(1);
  g.initialFlow.on(minusOut) = Rational(1);
  g.initialFlow.on(srcPlus) = Rational(1);
  g.initialFlow.on(sinkPlus) = Rational(1);
  g.initialFlow.on(srcMinus) = Rational(1);
  g.initialFlow.on(sinkMinus) = Rational(1);
  g.initialFlow.on(backbone) = fourX;

  TreeBasis basis;
  basis.root = s;
  basis.treeArcs = {backbone, srcPlus, sinkPlus, srcMinus, sinkMinus, plusIn, minusOut};
  for (ArcId id : plusLevels.sChain) basis.treeArcs.push_back(id);
  for (ArcId id : plusLevels.tChain) basis.treeArcs.push_back(id);
  for (ArcId id : minusLevels.sChain) basis.treeArcs.push_back(id);
  for (ArcId id : minusLevels.tChain) basis.treeArcs.push_back(id);
  std::vector<char> inTree(g.net.arcs.size(), 0);
  for (ArcId id : basis.treeArcs) inTree[static_cast<size_t>(id)] = 1;
  for (const Arc& a : g.net.arcs)
    if (!inTree[static_cast<size_t>(a.id)]) basis.atLower.push_back(a.id);
  g.initialBasis = std::move(basis);
  (void)plusOut;
  (void)minusIn;
  return g;
}

GadgetNetwork split_watched_arc(const GadgetNetwork& g) {
  if (g.meta.family != GadgetFamily::Gssp || g.watched.size() != 1)
    raise(Errc::WrongFamily, "split_watched_arc applies to unsplit gssp networks only");
  ArcId e = g.watched.front();
  const Arc& old = g.net.arcs[static_cast<size_t>(e)];

  GadgetNetwork out;
  out.meta = g.meta;
  out.roles = g.roles;
  out.net.nodes = g.net.nodes;
  out.net.source = g.net.source;
  out.net.sink = g.net.sink;
  for (const Arc& a : g.net.arcs)
    if (a.id != e) out.net.addArc(a.tail, a.head, a.cost, a.capacity, a.label);
  Rational eps25 = g.meta.epsilon / Rational(25);
  Capacity half(Rational(1, 2));
  out.watched.push_back(out.net.addArc(old.tail, old.head, eps25, half, "e1"));
  out.watched.push_back(
      out.net.addArc(old.tail, old.head, Rational(2) * eps25, half, "e2"));
  out.initialFlow = Flow::zero(out.net);
  return out;
}

}  // namespace flowlab
