#include <benchmark/benchmark.h>

#include "flowlab/experiments.hpp"
#include "flowlab/gadgets.hpp"
#include "flowlab/ssp.hpp"

using namespace flowlab;

namespace {

PartitionInstance instance_of_size(int n) {
  std::vector<Rational> values;
  for (long long i = 1; i <= n; ++i) values.emplace_back(2 * i + 1);
  return normalize_instance(values);
}

void BM_RationalAdd(benchmark::State& state) {
  Rational a(BigInt(355), BigInt(113)), b(BigInt(-217), BigInt(331));
  for (auto _ : state) {
    Rational c = a + b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_RationalAdd);

void BM_RationalCompare(benchmark::State& state) {
  Rational a(BigInt(355), BigInt(113)), b(BigInt(356), BigInt(113));
  for (auto _ : state) {
    bool less = a < b;
    benchmark::DoNotOptimize(less);
  }
}
BENCHMARK(BM_RationalCompare);

void BM_ShortestResidualPath(benchmark::State& state) {
  PartitionInstance inst = instance_of_size(static_cast<int>(state.range(0)));
  GadgetNetwork g = build_counting_ssp(inst, +1, inst.size());
  Flow zero = Flow::zero(g.net);
  for (auto _ : state) {
    auto path = shortest_residual_path(g.net, zero, *g.net.source, *g.net.sink);
    benchmark::DoNotOptimize(path);
  }
}
BENCHMARK(BM_ShortestResidualPath)->Arg(4)->Arg(6)->Arg(8);

void BM_SspCountingRun(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  PartitionInstance inst = instance_of_size(n);
  GadgetNetwork g = build_counting_ssp(inst, +1, n);
  for (auto _ : state) {
    SspTrace trace = ssp_run(g.net, std::nullopt, std::int64_t{1} << (n + 4));
    benchmark::DoNotOptimize(trace);
  }
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_SspCountingRun)->Arg(4)->Arg(6)->Arg(8);

void BM_NsHarnessRun(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  PartitionInstance inst = instance_of_size(n);
  GadgetNetwork g = build_ns_harness(inst, +1, Rational(BigInt(1), BigInt(3)), n);
  for (auto _ : state) {
    NsTrace trace =
        ns_run(g.net, *g.initialBasis, g.initialFlow, std::nullopt, std::int64_t{1} << (n + 4));
    benchmark::DoNotOptimize(trace);
  }
  state.SetItemsProcessed(state.iterations() * (3 * (std::int64_t{1} << n) - 2));
}
BENCHMARK(BM_NsHarnessRun)->Arg(4)->Arg(6)->Arg(8);

void BM_DecideSsp(benchmark::State& state) {
  PartitionInstance inst = instance_of_size(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Verdict v = decide_via_ssp(inst);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_DecideSsp)->Arg(6)->Arg(8)->Arg(10);

void BM_DecideNs(benchmark::State& state) {
  PartitionInstance inst = instance_of_size(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Verdict v = decide_via_ns(inst);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_DecideNs)->Arg(4)->Arg(6)->Arg(8);

void BM_PartitionOracle(benchmark::State& state) {
  PartitionInstance inst = instance_of_size(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto subset = partition_oracle(inst);
    benchmark::DoNotOptimize(subset);
  }
}
BENCHMARK(BM_PartitionOracle)->Arg(12)->Arg(16)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
