#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flowlab/netsimplex.hpp"
#include "flowlab/network.hpp"

namespace flowlab {

// A PARTITION instance brought to the canonical scale: the normalized values
// sum to A = 1/13 and are positive integer multiples of epsilon. Partition
// answers are invariant under the positive rescaling.
struct PartitionInstance {
  std::vector<Rational> raw;
  std::vector<Rational> normalized;
  Rational epsilon;
  Rational total;  // sum of normalized values, always 1/13

  int size() const { return static_cast<int>(normalized.size()); }
};

// j-th bit of k, i.e. floor(k / 2^j) mod 2.
int bit_of(std::uint64_t k, unsigned j);

// Signed partial sum over v[i1+1 .. i2] (1-based), where the sign of v[j] is
// (-1)^(bit j-1 of k). signed_sum(v, 0, i, k) is the full prefix sum v_i^[k];
// i1 == i2 gives 0.
Rational signed_sum(const std::vector<Rational>& v, int i1, int i2, std::uint64_t k);

PartitionInstance normalize_instance(const std::vector<Rational>& raw);

enum class GadgetFamily { CountingSsp, Gssp, CountingNs, NsHarness, Gns };

const char* to_string(GadgetFamily f);
GadgetFamily gadget_family_from_string(std::string_view s);

struct GadgetMeta {
  GadgetFamily family = GadgetFamily::CountingSsp;
  int level = 0;       // recursion depth n of the outermost gadget(s)
  int sign = +1;       // +1 for v = a, -1 for v = -a (single-gadget families)
  Rational r;          // simplex gadget parameter, 0 when unused
  Rational epsilon;    // granularity of the generating instance
};

// A generated network plus everything downstream code needs to drive and
// observe it: role labels, the watched arc(s), the initial flow, and (for the
// simplex families) the initial spanning-tree basis.
struct GadgetNetwork {
  Network net;
  std::map<std::string, NodeId> roles;
  std::vector<ArcId> watched;
  Flow initialFlow;
  std::optional<TreeBasis> initialBasis;
  GadgetMeta meta;

  std::optional<ArcId> watchedArc() const {
    return watched.size() == 1 ? std::optional<ArcId>(watched.front()) : std::nullopt;
  }
};

// Recursive counting gadget for successive shortest paths: level 0 is the
// single unit arc (s0,t0); level i adds s_i, t_i with two cheap arcs of cost
// v_i/2 and two expensive arcs of cost (2^i - 1 - v_i)/2, all of capacity
// 2^(i-1). Source s_level, sink t_level, zero balances.
GadgetNetwork build_counting_ssp(const PartitionInstance& inst, int sign, int level);

// Two counting gadgets for v = a and v = -a behind a common source and sink,
// the watched arc e from s0 of the plus gadget to t0 of the minus gadget, and
// both (s0,t0) costs raised to epsilon/5 for tie-breaking.
GadgetNetwork build_gssp(const PartitionInstance& inst);

// Recursive counting gadget for the network simplex: capacities x_i + 1 with
// x_i = 3*2^(i-1) - 1, diagonal costs split by the parameter r, unit initial
// flow on the two boundary paths (those arcs form the in-gadget part of the
// initial basis). Standalone supplies: +1 at s_level and t0, -1 at s0 and
// t_level. initialBasis is absent: the boundary paths alone do not span.
GadgetNetwork build_counting_ns(const PartitionInstance& inst, int sign, const Rational& r,
                                int level);

// Counting gadget wrapped with source/sink and a permanently available return
// path: backbone (s,t) of cost 2^(level+1)+1 carrying 2*x+1 units initially,
// so the residual tree-path from t_level to s_level costs less than
// -2^(level+1) throughout. Supplies of s_level / t_level move to s / t.
GadgetNetwork build_ns_harness(const PartitionInstance& inst, int sign, const Rational& r,
                               int level);

// Full simplex reduction network: a zero element is prepended to the
// instance, the two gadgets S^{a,1/3} and S^{-a,1/3} hang between s and t,
// the (s0,t0) arcs are split through the new nodes c+ / c-, and the watched
// arc e = (c+,c-) has cost 0 and capacity 1/2. With perturbMinusGadget the
// minus gadget's arc costs receive level-scaled offsets of epsilon/1000 to
// make every pivot unique.
GadgetNetwork build_gns(const PartitionInstance& inst, bool perturbMinusGadget = false);

// Iteration-count reduction variant: replaces the watched arc of a Gssp
// network by two parallel arcs of capacity 1/2 with costs epsilon/25 and
// 2*epsilon/25; both new arcs are watched.
GadgetNetwork split_watched_arc(const GadgetNetwork& g);

}  // namespace flowlab
