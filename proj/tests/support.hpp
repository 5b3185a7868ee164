#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <random>
#include <vector>

#include "flowlab/experiments.hpp"
#include "flowlab/network.hpp"

// Test-only oracles and instance samplers. Everything here is independent of
// the algorithm implementations it is used to check.
namespace flowlab::testsupport {

// Minimum cost over all flows sending `value` units source -> sink, by
// exhaustive enumeration of integral flows. With integral capacities and an
// integral value the optimum is attained at an integral flow, so this bounds
// all flows. Only sensible on very small networks.
std::optional<Rational> brute_force_min_cost(const Network& net, const Rational& value);

// Average arrival time by direct integration of the arrival-rate step
// function of unit-rate paths active on [c_j, T].
Rational arrival_by_integration(const std::vector<Rational>& costs, const Rational& horizon);

// Deterministic instance source. Draws are reproducible for a fixed seed;
// no std distribution types, whose sequences vary across standard libraries.
class InstanceSampler {
 public:
  explicit InstanceSampler(std::uint64_t seed) : rng_(seed) {}

  // Guaranteed yes-instance: a random block of values plus a mirrored block
  // with the same total.
  std::vector<Rational> plantedYes(int n);

  // Random instance rejected by the exhaustive oracle.
  std::vector<Rational> randomNo(int n);

  std::uint64_t below(std::uint64_t bound) { return rng_() % bound; }

 private:
  std::mt19937_64 rng_;
  void maybeRescale(std::vector<Rational>& values);
};

std::vector<Rational> rationals(std::initializer_list<long long> ints);

// Arcs strictly inside a counting gadget: neither endpoint is the outer
// source "s" or sink "t".
bool is_gadget_arc(const Network& net, const Arc& arc);

// Per-unit cost contribution of the gadget arcs around a pivot cycle.
Rational in_gadget_cycle_cost(const Network& net, const PivotRecord& rec);

}  // namespace flowlab::testsupport
