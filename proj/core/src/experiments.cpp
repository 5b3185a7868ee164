#include "flowlab/experiments.hpp"

#include <cassert>

namespace flowlab {

namespace {

constexpr int kOracleLimit = 24;
constexpr int kSspLimit = 14;
constexpr int kNsLimit = 12;

void check_size(const PartitionInstance& inst, int limit, const char* what) {
  if (inst.size() > limit)
    raise(Errc::InstanceTooLarge, std::string(what) + " supports n <= " + std::to_string(limit) +
                                      ", got " + std::to_string(inst.size()));
}

// Integer view of the instance: normalized values divided by epsilon.
std::vector<BigInt> integer_units(const PartitionInstance& inst) {
  std::vector<BigInt> units;
  units.reserve(inst.normalized.size());
  for (const Rational& a : inst.normalized) {
    Rational q = a / inst.epsilon;
    assert(q.isInteger());
    units.push_back(q.num());
  }
  return units;
}

// Depth-first over index sequences in lexicographic order; the first subset
// hitting the target is the lexicographically smallest one. Positive values
// allow pruning on overshoot.
bool subset_search(const std::vector<BigInt>& units, const BigInt& target, size_t next,
                   BigInt sum, std::vector<int>& current) {
  if (sum == target) return true;
  if (sum > target) return false;
  for (size_t j = next; j < units.size(); ++j) {
    current.push_back(static_cast<int>(j));
    if (subset_search(units, target, j + 1, sum + units[j], current)) return true;
    current.pop_back();
  }
  return false;
}

std::int64_t max_iterations_for_level(int level) {
  return std::int64_t{1} << (level + 4);
}

}  // namespace

std::optional<std::vector<int>> partition_oracle(const PartitionInstance& inst) {
  check_size(inst, kOracleLimit, "partition_oracle");
  std::vector<BigInt> units = integer_units(inst);
  BigInt total = 0;
  for (const BigInt& q : units) total += q;
  if (total % 2 != 0) return std::nullopt;
  BigInt target = total / 2;
  std::vector<int> subset;
  if (subset_search(units, target, 0, BigInt(0), subset)) return subset;
  return std::nullopt;
}

std::optional<std::uint64_t> smallest_zero_k(const PartitionInstance& inst) {
  check_size(inst, kOracleLimit, "smallest_zero_k");
  std::vector<BigInt> units = integer_units(inst);
  unsigned n = static_cast<unsigned>(units.size());
  BigInt sum = 0;  // signed sum at k, all signs positive at k = 0
  for (const BigInt& q : units) sum += q;
  std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t k = 0;; ++k) {
    if (sum.is_zero()) return k;
    if (k + 1 == limit) return std::nullopt;
    // incrementing k flips the trailing ones and the lowest zero bit
    std::uint64_t flips = k ^ (k + 1);
    for (unsigned b = 0; flips; ++b, flips >>= 1) {
      BigInt twice = units[b] << 1;
      if (bit_of(k + 1, b))
        sum -= twice;  // sign of a_{b+1} turned negative
      else
        sum += twice;
    }
  }
}

Verdict decide_via_ssp(const PartitionInstance& inst) {
  check_size(inst, kSspLimit, "decide_via_ssp");
  GadgetNetwork g = build_gssp(inst);
  SspTrace trace =
      ssp_run(g.net, g.watchedArc(), max_iterations_for_level(g.meta.level));
  Verdict v;
  v.iterations = static_cast<std::int64_t>(trace.iterations.size());
  for (const SspIteration& it : trace.iterations) {
    if (it.flowOnWatched && it.flowOnWatched->sign() > 0) {
      v.answer = true;
      v.witness = it.index;
      break;
    }
  }
  return v;
}

Verdict decide_via_ns(const PartitionInstance& inst) {
  check_size(inst, kNsLimit, "decide_via_ns");
  GadgetNetwork g = build_gns(inst);
  assert(g.initialBasis);
  std::optional<ArcId> watched = g.watchedArc();
  NsTrace trace = ns_run(g.net, *g.initialBasis, g.initialFlow, watched,
                         max_iterations_for_level(g.meta.level));
  Verdict v;
  v.iterations = static_cast<std::int64_t>(trace.pivots.size());
  for (const PivotRecord& p : trace.pivots) {
    // e enters and immediately exits, so transient basis membership counts
    if (p.enteringArc == *watched || p.watchedInBasis) {
      v.answer = true;
      v.witness = p.index;
      break;
    }
  }
  return v;
}

Census iteration_census(const PartitionInstance& inst, Algo algo) {
  Census census;
  if (algo == Algo::Ssp) {
    check_size(inst, kSspLimit, "iteration_census(ssp)");
    GadgetNetwork g = split_watched_arc(build_gssp(inst));
    SspTrace trace = ssp_run(g.net, std::nullopt, max_iterations_for_level(g.meta.level));
    census.count = static_cast<std::int64_t>(trace.iterations.size());
    census.threshold = std::int64_t{1} << (g.meta.level + 1);
  } else {
    check_size(inst, kNsLimit, "iteration_census(ns)");
    GadgetNetwork g = build_gns(inst);
    NsTrace trace = ns_run(g.net, *g.initialBasis, g.initialFlow, g.watchedArc(),
                           max_iterations_for_level(g.meta.level));
    census.count = static_cast<std::int64_t>(trace.pivots.size());
    census.threshold = 4 * (3 * (std::int64_t{1} << (g.meta.level - 1)) - 1);  // 4 * x_n
  }
  census.thresholdExceeded = census.count > census.threshold;
  return census;
}

ParametricCurve parametric_curve(const SspTrace& trace) {
  ParametricCurve curve;
  curve.breakpoints.emplace_back(Rational(), Rational());
  Rational flowValue, cost;
  std::optional<Rational> slope;
  for (const SspIteration& it : trace.iterations) {
    assert(!slope || *slope <= it.pathCost);
    flowValue += it.amount;
    cost += it.pathCost * it.amount;
    if (slope && *slope == it.pathCost) {
      curve.breakpoints.back() = {flowValue, cost};  // extend the current segment
    } else {
      curve.breakpoints.emplace_back(flowValue, cost);
      slope = it.pathCost;
    }
  }
  return curve;
}

int breakpoint_count(const ParametricCurve& curve) {
  return static_cast<int>(curve.breakpoints.size()) - 1;
}

Rational average_arrival_time(const SspTrace& trace, const Rational& horizon) {
  if (trace.iterations.empty()) raise(Errc::EmptyInput, "average_arrival_time of empty trace");
  Rational weighted, value;
  const Rational half(1, 2);
  for (const SspIteration& it : trace.iterations) {
    if (it.amount != Rational(1))
      raise(Errc::NonUnitAmount, "average_arrival_time requires unit amounts, got " +
                                     it.amount.str() + " at iteration " +
                                     std::to_string(it.index));
    if (horizon < it.pathCost)
      raise(Errc::HorizonTooSmall,
            "horizon " + horizon.str() + " below path cost " + it.pathCost.str());
    weighted += half * (horizon * horizon - it.pathCost * it.pathCost);
    value += horizon - it.pathCost;
  }
  // all paths start exactly at the horizon: everything arrives at time T
  if (value.isZero()) return horizon;
  return weighted / value;
}

}  // namespace flowlab
