#include <benchmark/benchmark.h>

#include "lsa/baselines.hpp"
#include "lsa/lsa_aux.hpp"
#include "lsa/lsa_tr.hpp"
#include "lsa/problems.hpp"
#include "lsa/submodular.hpp"

namespace {

using namespace lsa;

const BinaryEnergy& deconv_16x16()
{
  static const BinaryEnergy e = build_deconvolution_energy(
      synthesize_deconv_instance(16, 16, ShapeSpec{}, 0.05, 1).observed);
  return e;
}

void bm_eval_energy(benchmark::State& state)
{
  const BinaryEnergy& e = deconv_16x16();
  const Labeling s = Labeling::ones(e.num_vars());
  for (auto _ : state)
    benchmark::DoNotOptimize(eval_energy(e, s));
}
BENCHMARK(bm_eval_energy);

void bm_minimize_submodular(benchmark::State& state)
{
  const BinaryEnergy e = random_energy(static_cast<int>(state.range(0)), 0.3, 0.0, 2.0, 7);
  for (auto _ : state)
    benchmark::DoNotOptimize(minimize_submodular(e).energy);
}
BENCHMARK(bm_minimize_submodular)->Arg(64)->Arg(256);

void bm_lsa_tr(benchmark::State& state)
{
  const BinaryEnergy& e = deconv_16x16();
  const Labeling init = Labeling::ones(e.num_vars());
  for (auto _ : state)
    benchmark::DoNotOptimize(lsa_tr_solve(e, TrustRegionParams{}, init).final_energy);
}
BENCHMARK(bm_lsa_tr);

void bm_lsa_aux(benchmark::State& state)
{
  const BinaryEnergy& e = deconv_16x16();
  const Labeling init = Labeling::ones(e.num_vars());
  for (auto _ : state)
    benchmark::DoNotOptimize(lsa_aux_solve(e, BoundVariant{}, init).final_energy);
}
BENCHMARK(bm_lsa_aux);

void bm_parallel_icm(benchmark::State& state)
{
  const BinaryEnergy& e = deconv_16x16();
  const Labeling init = Labeling::ones(e.num_vars());
  for (auto _ : state)
    benchmark::DoNotOptimize(parallel_icm_solve(e, init).final_energy);
}
BENCHMARK(bm_parallel_icm);

}

BENCHMARK_MAIN();
