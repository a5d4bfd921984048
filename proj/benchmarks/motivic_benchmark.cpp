#include <benchmark/benchmark.h>

#include "motivic/dsl.hpp"
#include "motivic/formulas.hpp"
#include "motivic/realization.hpp"

namespace motivic {
namespace {

// To run: ./build/benchmarks/motivic_benchmarks --benchmark_filter=Moduli

void BM_ModuliDelBano(benchmark::State& state) {
  const auto g = static_cast<Genus>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(moduli_motive_delbano(g));
}
BENCHMARK(BM_ModuliDelBano)->Arg(2)->Arg(10)->Arg(30)->Arg(60);

void BM_ModuliConjectural(benchmark::State& state) {
  const auto g = static_cast<Genus>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(moduli_motive_conjectural(g));
}
BENCHMARK(BM_ModuliConjectural)->Arg(2)->Arg(10)->Arg(30)->Arg(60);

void BM_ProofChainAllIndices(benchmark::State& state) {
  const auto g = static_cast<Genus>(state.range(0));
  const auto delbano = moduli_motive_delbano(g);
  const auto conjectural = moduli_motive_conjectural(g);
  for (auto _ : state) {
    for (std::uint32_t i = 0; i <= static_cast<std::uint32_t>(g); ++i) {
      benchmark::DoNotOptimize(proof_chain(delbano, conjectural, i).holds());
    }
  }
}
BENCHMARK(BM_ProofChainAllIndices)->Arg(10)->Arg(30);

void BM_KeyIdentity(benchmark::State& state) {
  const auto m = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_key_identity(m));
}
BENCHMARK(BM_KeyIdentity)->Arg(10)->Arg(100)->Arg(400);

void BM_AtiyahBott(benchmark::State& state) {
  const auto g = static_cast<Genus>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(atiyah_bott_oracle(g));
}
BENCHMARK(BM_AtiyahBott)->Arg(10)->Arg(30)->Arg(60);

void BM_MacdonaldSeries(benchmark::State& state) {
  const auto g = static_cast<Genus>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(macdonald_series(static_cast<std::uint64_t>(2 * g), g));
}
BENCHMARK(BM_MacdonaldSeries)->Arg(5)->Arg(10)->Arg(20);

void BM_HodgeOfModuli(benchmark::State& state) {
  const auto m = moduli_motive_delbano(static_cast<Genus>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hodge_polynomial(m));
}
BENCHMARK(BM_HodgeOfModuli)->Arg(10)->Arg(30);

void BM_ParseAndPrint(benchmark::State& state) {
  const std::string source = "(1 + L)^3 * lam(2) + Sym(4) * L^2 + (M + Mconj) * (1 + L^5)";
  for (auto _ : state) benchmark::DoNotOptimize(dsl::print(dsl::parse(source)));
}
BENCHMARK(BM_ParseAndPrint);

}  // namespace
}  // namespace motivic

BENCHMARK_MAIN();
