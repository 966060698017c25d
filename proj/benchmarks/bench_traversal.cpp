#include <benchmark/benchmark.h>

#include "optic/minilang/codec.hpp"
#include "optic/minilang/plate.hpp"
#include "optic/suites.hpp"

using namespace optic;
using namespace optic::minilang;

namespace {

// A block of `width` assignments whose right-hand sides nest `depth` adds.
StmPtr synthetic_program(int width, int depth) {
  std::vector<StmPtr> stms;
  for (int i = 0; i < width; ++i) {
    ExprPtr e = evar("x");
    for (int d = 0; d < depth; ++d) e = eadd(e, eint(d));
    stms.push_back(sass("x", e));
  }
  return sblock(std::move(stms));
}

void BM_RenameGeneric(benchmark::State& state) {
  Val program = encode(synthetic_program(static_cast<int>(state.range(0)), 8));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rename_pass(program, Sort::Stm));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RenameGeneric)->Arg(4)->Arg(16)->Arg(64);

void BM_RenameNaive(benchmark::State& state) {
  StmPtr program = synthetic_program(static_cast<int>(state.range(0)), 8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(naive_rename(program));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RenameNaive)->Arg(4)->Arg(16)->Arg(64);

void BM_CountNodesFold(benchmark::State& state) {
  Val program = encode(synthetic_program(static_cast<int>(state.range(0)), 8));
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_nodes_fold(program, Sort::Stm));
  }
}
BENCHMARK(BM_CountNodesFold)->Arg(16)->Arg(64);

void BM_CartesianAp(benchmark::State& state) {
  std::vector<Val> stores = enumerate_cartesian_stores(2);
  Val swap = Val::table({{Val::sym("a0"), Val::sym("a1")}, {Val::sym("a1"), Val::sym("a0")}});
  Val fn_store = Val::cs_unit(swap);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cs_ap(fn_store, stores[i++ % stores.size()]));
  }
}
BENCHMARK(BM_CartesianAp);

void BM_StoreSuite(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(store_suite());
  }
}
BENCHMARK(BM_StoreSuite);

}  // namespace

BENCHMARK_MAIN();
