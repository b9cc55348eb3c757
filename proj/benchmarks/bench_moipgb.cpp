#include <benchmark/benchmark.h>

#include "moipgb/bench.hpp"
#include "moipgb/lattice.hpp"
#include "moipgb/solver.hpp"

using namespace moipgb;

namespace {

MoipInstance example4() {
  MoipInstance inst;
  inst.A = IntMat{{2, 2, -1, 0, 0}, {0, 2, 0, 1, 0}, {1, 0, 0, 0, 1}};
  inst.b = make_vec({17, 11, 10});
  inst.C = IntMat{{10, 1, 0, 0, 0}, {1, 10, 0, 0, 0}};
  inst.slack_indices = {2, 3, 4};
  return inst;
}

void BM_SolveExample4(benchmark::State& state) {
  const MoipInstance inst = example4();
  for (auto _ : state) benchmark::DoNotOptimize(solve(inst).solutions.size());
}
BENCHMARK(BM_SolveExample4);

void BM_KnapsackBasis(benchmark::State& state) {
  const MoipInstance inst = gen_knapsack(static_cast<std::size_t>(state.range(0)), 2, 7, 10);
  const PartialOrderSpec spec = effective_spec(inst, OrderVariant::Plain);
  for (auto _ : state) benchmark::DoNotOptimize(compute_basis(inst, spec).size());
}
BENCHMARK(BM_KnapsackBasis)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_TransportSolve(benchmark::State& state) {
  const MoipInstance inst = gen_transport(3, 2, 2, 5, 10);
  for (auto _ : state) benchmark::DoNotOptimize(solve(inst).solutions.size());
}
BENCHMARK(BM_TransportSolve)->Unit(benchmark::kMillisecond);

void BM_Lll(benchmark::State& state) {
  std::vector<IntVec> basis{make_vec({1, 0, 0, 0, 31}), make_vec({0, 1, 0, 0, 47}),
                            make_vec({0, 0, 1, 0, 59}), make_vec({0, 0, 0, 1, 97})};
  for (auto _ : state) benchmark::DoNotOptimize(lll_reduce(basis).size());
}
BENCHMARK(BM_Lll);

}  // namespace

BENCHMARK_MAIN();
