#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flowlab/gadgets.hpp"
#include "flowlab/netsimplex.hpp"
#include "support.hpp"

using namespace flowlab;
using testsupport::rationals;

namespace {

Rational R(long long n, long long d = 1) { return Rational(BigInt(n), BigInt(d)); }

const Arc& arc(const GadgetNetwork& g, const std::string& label) {
  auto id = g.net.arcByLabel(label);
  REQUIRE_MESSAGE(id.has_value(), "no arc labeled ", label);
  return g.net.arcs[static_cast<size_t>(*id)];
}

void checkBasicFeasible(const GadgetNetwork& g) {
  validate_network(g.net);
  check_flow(g.net, g.initialFlow, R(0));
  REQUIRE(g.initialBasis.has_value());
  const TreeBasis& basis = *g.initialBasis;
  CHECK(basis.treeArcs.size() + 1 == g.net.nodes.size());
  CHECK_NOTHROW(compute_potentials(g.net, basis));
  for (ArcId id : basis.atLower) CHECK(g.initialFlow.on(id) == R(0));
  for (ArcId id : basis.atUpper)
    CHECK(g.initialFlow.on(id) == g.net.arcs[static_cast<size_t>(id)].capacity.value());
  CHECK(basis.treeArcs.size() + basis.atLower.size() + basis.atUpper.size() ==
        g.net.arcs.size());
}

}  // namespace

TEST_CASE("bit extraction") {
  CHECK(bit_of(5, 0) == 1);
  CHECK(bit_of(5, 1) == 0);
  CHECK(bit_of(5, 2) == 1);
  for (unsigned j : {0u, 1u, 13u, 63u, 80u}) CHECK(bit_of(0, j) == 0);
}

TEST_CASE("signed partial sums") {
  std::vector<Rational> v = rationals({1, 2, 4});
  CHECK(signed_sum(v, 0, 3, 0) == R(7));
  CHECK(signed_sum(v, 0, 3, 5) == R(-3));
  CHECK(signed_sum(v, 2, 2, 9) == R(0));
  CHECK(signed_sum(v, 1, 3, 2) == R(-2 + 4));
  try {
    signed_sum(v, 2, 1, 0);
    FAIL("expected IndexOrder");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::IndexOrder);
  }
}

TEST_CASE("signed sums are antisymmetric under bit complement") {
  testsupport::InstanceSampler sampler(11);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + static_cast<int>(sampler.below(5));
    PartitionInstance inst = normalize_instance(sampler.plantedYes(n));
    std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t k = 0; k < limit; ++k)
      CHECK(signed_sum(inst.normalized, 0, n, k) ==
            -signed_sum(inst.normalized, 0, n, limit - 1 - k));
  }
}

TEST_CASE("normalization fixes the total at 1/13") {
  PartitionInstance inst = normalize_instance(rationals({1, 2, 3}));
  CHECK(inst.normalized == std::vector<Rational>{R(1, 78), R(2, 78), R(3, 78)});
  CHECK(inst.epsilon == R(1, 78));
  CHECK(inst.total == R(1, 13));

  PartitionInstance single = normalize_instance(rationals({5}));
  CHECK(single.normalized == std::vector<Rational>{R(1, 13)});
  CHECK(single.epsilon == R(1, 13));

  PartitionInstance halves = normalize_instance({R(1, 2), R(1, 2)});
  CHECK(halves.normalized == std::vector<Rational>{R(1, 26), R(1, 26)});
  CHECK(halves.epsilon == R(1, 26));
}

TEST_CASE("normalized values are positive multiples of epsilon") {
  testsupport::InstanceSampler sampler(5);
  for (int trial = 0; trial < 50; ++trial) {
    PartitionInstance inst = normalize_instance(sampler.plantedYes(4));
    Rational sum;
    for (const Rational& a : inst.normalized) {
      Rational q = a / inst.epsilon;
      CHECK(q.isInteger());
      CHECK(q.sign() > 0);
      sum += a;
    }
    CHECK(sum == R(1, 13));
  }
}

TEST_CASE("normalization rejects bad input") {
  try {
    normalize_instance({});
    FAIL("expected EmptyInstance");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::EmptyInstance);
  }
  try {
    normalize_instance(rationals({1, -2}));
    FAIL("expected NonPositiveEntry");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NonPositiveEntry);
  }
}

TEST_CASE("ssp counting gadget structure") {
  PartitionInstance inst = normalize_instance(rationals({5}));

  GadgetNetwork g0 = build_counting_ssp(inst, +1, 0);
  CHECK(g0.net.nodes.size() == 2);
  CHECK(g0.net.arcs.size() == 1);
  CHECK(arc(g0, "s0->t0").cost == R(0));
  CHECK(arc(g0, "s0->t0").capacity == Capacity(R(1)));

  GadgetNetwork g1 = build_counting_ssp(inst, +1, 1);
  CHECK(arc(g1, "s1->s0").cost == R(1, 26));
  CHECK(arc(g1, "t0->t1").cost == R(1, 26));
  CHECK(arc(g1, "s1->t0").cost == R(6, 13));
  CHECK(arc(g1, "s0->t1").cost == R(6, 13));
  for (const Arc& a : g1.net.arcs)
    if (a.id != 0) CHECK(a.capacity == Capacity(R(1)));

  PartitionInstance inst3 = normalize_instance(rationals({1, 2, 3}));
  GadgetNetwork g2 = build_counting_ssp(inst3, +1, 2);
  CHECK(g2.net.nodes.size() == 6);
  CHECK(g2.net.arcs.size() == 9);
  CHECK(arc(g2, "s2->s1").capacity == Capacity(R(2)));
}

TEST_CASE("ssp counting gadget closed-form counts up to level 10") {
  testsupport::InstanceSampler sampler(3);
  PartitionInstance inst = normalize_instance(sampler.plantedYes(10));
  for (int level = 0; level <= 10; ++level) {
    GadgetNetwork g = build_counting_ssp(inst, -1, level);
    CHECK(g.net.nodes.size() == size_t(2 * level + 2));
    CHECK(g.net.arcs.size() == size_t(4 * level + 1));
    CHECK_NOTHROW(validate_network(g.net));
  }
}

TEST_CASE("level bounds are enforced") {
  PartitionInstance inst = normalize_instance(rationals({1, 2}));
  for (int level : {-1, 3}) {
    try {
      build_counting_ssp(inst, +1, level);
      FAIL("expected LevelOutOfRange");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::LevelOutOfRange);
    }
  }
}

TEST_CASE("gssp structure") {
  PartitionInstance inst = normalize_instance(rationals({3, 4}));
  GadgetNetwork g = build_gssp(inst);
  CHECK(g.net.nodes.size() == 14);  // 4n+6 at n=2
  CHECK(g.net.arcs.size() == 23);   // 8n+7
  CHECK_NOTHROW(validate_network(g.net));

  const Arc& e = arc(g, "e");
  CHECK(g.watched == std::vector<ArcId>{e.id});
  CHECK(e.cost == R(0));
  CHECK(e.capacity == Capacity(R(1)));

  Rational eps5 = inst.epsilon / R(5);
  CHECK(arc(g, "s0+->t0+").cost == eps5);
  CHECK(arc(g, "s0-->t0-").cost == eps5);
  CHECK(arc(g, "s->s2+").capacity == Capacity(R(4)));
  CHECK(g.roles.at("s") == *g.net.source);
  CHECK(g.roles.at("t") == *g.net.sink);
}

TEST_CASE("ns counting gadget structure and the r parameter") {
  PartitionInstance inst = normalize_instance(rationals({5}));
  Rational r = R(1, 3);
  GadgetNetwork g = build_counting_ns(inst, +1, r, 1);

  // x_1 = 2: every level-1 arc has capacity x_1 + 1 = 3
  CHECK(arc(g, "s1->s0").capacity == Capacity(R(3)));
  CHECK(arc(g, "s1->t0").capacity == Capacity(R(3)));
  CHECK(arc(g, "s0->t0").capacity == Capacity(R(1)));

  // diagonal costs 2^{i-1} - r - v_i/2 and 2^{i-1} - (1-r) - v_i/2
  CHECK(arc(g, "s1->t0").cost == R(1) - r - R(1, 26));   // 49/78
  CHECK(arc(g, "s1->t0").cost == R(49, 78));
  CHECK(arc(g, "s0->t1").cost == R(1) - (R(1) - r) - R(1, 26));
  CHECK(arc(g, "s0->t1").cost == R(23, 78));
  CHECK(arc(g, "s1->s0").cost == R(1, 26));

  // boundary paths carry the initial unit flow
  CHECK(g.initialFlow.on(arc(g, "s1->s0").id) == R(1));
  CHECK(g.initialFlow.on(arc(g, "t0->t1").id) == R(1));
  CHECK(g.initialFlow.on(arc(g, "s0->t0").id) == R(0));
  check_flow(g.net, g.initialFlow, R(0));
  CHECK_FALSE(g.initialBasis.has_value());

  PartitionInstance inst2 = normalize_instance(rationals({1, 3}));
  GadgetNetwork g2 = build_counting_ns(inst2, +1, r, 2);
  CHECK(arc(g2, "s2->s1").capacity == Capacity(R(6)));  // x_2 + 1
}

TEST_CASE("invalid r is rejected") {
  PartitionInstance inst = normalize_instance(rationals({5}));
  for (Rational r : {R(1, 2), R(2, 13), R(11, 13), R(1), R(0)}) {
    try {
      build_counting_ns(inst, +1, r, 1);
      FAIL("expected InvalidR");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::InvalidR);
    }
  }
  CHECK_NOTHROW(build_counting_ns(inst, +1, R(1, 3), 1));
  CHECK_NOTHROW(build_counting_ns(inst, -1, R(2, 5), 1));
}

TEST_CASE("ns harness wraps the gadget with a cheap return path") {
  PartitionInstance inst = normalize_instance(rationals({1, 3}));
  GadgetNetwork g = build_ns_harness(inst, +1, R(1, 3), 2);

  CHECK(g.net.nodes.size() == 8);  // 2*level + 2 gadget nodes plus s, t
  const Arc& backbone = arc(g, "s->t");
  CHECK(backbone.cost == R(9));  // 2^{level+1} + 1
  CHECK(backbone.capacity.isUnbounded());
  CHECK(g.initialFlow.on(backbone.id) == R(11));  // 2*x_2 + 1

  // residual return path t2 -> t -> s -> s2 costs -(2^3+1) < -2^3
  Rational returnCost = arc(g, "t2->t").cost - backbone.cost + arc(g, "s->s2").cost;
  CHECK(returnCost == R(-9));

  checkBasicFeasible(g);

  GadgetNetwork g1 = build_ns_harness(inst, +1, R(1, 3), 1);
  CHECK(g1.net.nodes.size() == 6);
  checkBasicFeasible(g1);

  try {
    build_ns_harness(inst, +1, R(1, 3), 0);
    FAIL("expected LevelOutOfRange");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::LevelOutOfRange);
  }
}

TEST_CASE("gns structure") {
  PartitionInstance inst = normalize_instance(rationals({5}));  // level 2 after the zero prepend
  GadgetNetwork g = build_gns(inst);
  CHECK(g.meta.level == 2);
  CHECK(g.net.nodes.size() == 16);  // 4n+8
  CHECK(g.net.arcs.size() == 26);   // 8n+10

  const Arc& e = arc(g, "e");
  CHECK(e.cost == R(0));
  CHECK(e.capacity == Capacity(R(1, 2)));
  CHECK(g.watched == std::vector<ArcId>{e.id});

  const Arc& backbone = arc(g, "s->t");
  CHECK(backbone.cost == R(8));  // 2^{n+1}
  CHECK(backbone.capacity.isUnbounded());
  CHECK(g.initialFlow.on(backbone.id) == R(20));  // 4*x_2

  Rational eps5 = inst.epsilon / R(5);
  CHECK(arc(g, "s0+->c+").cost == R(0));
  CHECK(arc(g, "c+->t0+").cost == eps5);
  CHECK(arc(g, "s0-->c-").cost == eps5);
  CHECK(arc(g, "c-->t0-").cost == R(0));
  CHECK(arc(g, "s0+->c+").capacity == Capacity(R(2)));

  // the prepended zero element makes both level-1 chain arcs free
  CHECK(arc(g, "s1+->s0+").cost == R(0));
  CHECK(arc(g, "s1-->s0-").cost == R(0));

  CHECK(g.net.nodes[static_cast<size_t>(g.roles.at("s"))].balance == R(22));  // 4x_n + 2
  CHECK(g.net.nodes[static_cast<size_t>(g.roles.at("c+"))].balance == R(-1));
  CHECK(g.net.nodes[static_cast<size_t>(g.roles.at("c-"))].balance == R(1));

  checkBasicFeasible(g);
}

TEST_CASE("gns minus-gadget perturbation keeps the structure valid") {
  PartitionInstance inst = normalize_instance(rationals({2, 3}));
  GadgetNetwork plain = build_gns(inst, false);
  GadgetNetwork perturbed = build_gns(inst, true);
  CHECK(plain.net.arcs.size() == perturbed.net.arcs.size());
  checkBasicFeasible(perturbed);
  Rational step = inst.epsilon / R(1000);
  auto plainCost = arc(plain, "s1-->s0-").cost;
  auto pertCost = arc(perturbed, "s1-->s0-").cost;
  CHECK(pertCost - plainCost == step);
  CHECK(arc(perturbed, "s1+->s0+").cost == arc(plain, "s1+->s0+").cost);
}

TEST_CASE("splitting the watched arc") {
  PartitionInstance inst = normalize_instance(rationals({1, 2, 3}));
  GadgetNetwork g = build_gssp(inst);
  GadgetNetwork split = split_watched_arc(g);

  CHECK(split.net.arcs.size() == g.net.arcs.size() + 1);
  REQUIRE(split.watched.size() == 2);
  const Arc& e1 = split.net.arcs[static_cast<size_t>(split.watched[0])];
  const Arc& e2 = split.net.arcs[static_cast<size_t>(split.watched[1])];
  CHECK(e1.capacity == Capacity(R(1, 2)));
  CHECK(e2.capacity == Capacity(R(1, 2)));
  CHECK(e1.cost == inst.epsilon / R(25));
  CHECK(e2.cost == R(2) * inst.epsilon / R(25));
  CHECK(e1.tail == e2.tail);
  CHECK(e1.head == e2.head);
  CHECK_NOTHROW(validate_network(split.net));

  try {
    split_watched_arc(split_watched_arc(g));
    FAIL("expected WrongFamily");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::WrongFamily);
  }
}

TEST_CASE("r = 1/3 lies in the admissible interval") {
  PartitionInstance inst = normalize_instance(rationals({9, 2, 2, 2}));
  Rational lo = R(2) * inst.total;
  Rational hi = R(1) - lo;
  CHECK(lo < R(1, 3));
  CHECK(R(1, 3) < hi);
}

TEST_CASE("every generated family validates") {
  testsupport::InstanceSampler sampler(99);
  for (int trial = 0; trial < 5; ++trial) {
    PartitionInstance inst = normalize_instance(sampler.plantedYes(3));
    CHECK_NOTHROW(validate_network(build_counting_ssp(inst, +1, 3).net));
    CHECK_NOTHROW(validate_network(build_gssp(inst).net));
    CHECK_NOTHROW(validate_network(build_counting_ns(inst, -1, R(2, 5), 3).net));
    CHECK_NOTHROW(validate_network(build_ns_harness(inst, -1, R(1, 3), 3).net));
    CHECK_NOTHROW(validate_network(build_gns(inst).net));
    CHECK_NOTHROW(validate_network(split_watched_arc(build_gssp(inst)).net));
  }
}
