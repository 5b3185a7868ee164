#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "flowlab/gadgets.hpp"
#include "flowlab/netsimplex.hpp"
#include "flowlab/ssp.hpp"

namespace flowlab {

// Outcome of an implicit-solve run: the answer, and (when yes) the iteration
// or pivot index where the watched event first occurred.
struct Verdict {
  bool answer = false;
  std::optional<std::int64_t> witness;
  std::optional<std::vector<int>> oracleSubset;
  std::int64_t iterations = 0;
};

// Exhaustive equal-split search; returns the lexicographically smallest
// 0-based index subset, or nullopt. Enumeration is bounded to n <= 24.
std::optional<std::vector<int>> partition_oracle(const PartitionInstance& inst);

// Least k in [0, 2^n) with signed_sum(a, 0, n, k) == 0; presence agrees with
// partition_oracle. n <= 24.
std::optional<std::uint64_t> smallest_zero_k(const PartitionInstance& inst);

// Runs successive shortest paths on the gssp network watching arc e; the
// answer is whether e ever carries positive flow. n <= 14.
Verdict decide_via_ssp(const PartitionInstance& inst);

// Runs the network simplex on the gns network watching e = (c+,c-); the
// answer is whether e enters the basis at some pivot. n <= 12.
Verdict decide_via_ns(const PartitionInstance& inst);

enum class Algo { Ssp, Ns };

struct Census {
  std::int64_t count = 0;
  std::int64_t threshold = 0;
  bool thresholdExceeded = false;
};

// Iteration-count probe: SSP runs the split-arc gssp variant against the
// threshold 2^(n+1); NS runs gns against 4*x_n. Exceeding the threshold is
// equivalent to the instance being solvable.
Census iteration_census(const PartitionInstance& inst, Algo algo);

// Minimum cost as a function of flow value: strictly convex piecewise-linear,
// first breakpoint (0,0), equal-slope segments merged.
struct ParametricCurve {
  std::vector<std::pair<Rational, Rational>> breakpoints;  // (flow value, cumulative cost)
};

ParametricCurve parametric_curve(const SspTrace& trace);

int breakpoint_count(const ParametricCurve& curve);

// Average arrival time of the temporally repeated earliest arrival flow with
// horizon T: path j is active on [c_j, T] at unit rate, so the result is
// (sum_j (T^2 - c_j^2)/2) / (sum_j (T - c_j)). Requires unit amounts and
// T >= max c_j.
Rational average_arrival_time(const SspTrace& trace, const Rational& horizon);

}  // namespace flowlab
