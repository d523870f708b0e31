#include <random>

#include <benchmark/benchmark.h>

#include "ordcalc/completion.hpp"
#include "ordcalc/corpus.hpp"
#include "ordcalc/dynamics.hpp"
#include "ordcalc/fixtures.hpp"
#include "ordcalc/functionals.hpp"
#include "ordcalc/genpair.hpp"
#include "ordcalc/ideals.hpp"

using namespace ordcalc;

namespace {

  WSemigroup square(std::size_t k) {
    auto const n = std::to_string(k);
    return make_fixture("PROD(NBAR(" + n + "),NBAR(" + n + "))").semigroup;
  }

  std::vector<Relation> seeds(WSemigroup const& s, std::size_t count) {
    std::mt19937_64       rng(7);
    std::vector<Relation> out;
    for (std::size_t i = 0; i < count; ++i)
      out.push_back(random_seed(s, rng, 0.05));
    return out;
  }

}  // namespace

static void BM_generate_normal(benchmark::State& state) {
  auto const s  = square(state.range(0));
  auto const rs = seeds(s, 16);
  std::size_t i = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(generate_normal(s, rs[i++ % rs.size()]));
  state.SetLabel("|S|=" + std::to_string(s.size()));
}
BENCHMARK(BM_generate_normal)->DenseRange(1, 6);

static void BM_fixpoint_oracle(benchmark::State& state) {
  auto const s  = square(state.range(0));
  auto const rs = seeds(s, 16);
  std::size_t i = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(fixpoint_oracle(s, rs[i++ % rs.size()], true));
  state.SetLabel("|S|=" + std::to_string(s.size()));
}
BENCHMARK(BM_fixpoint_oracle)->DenseRange(1, 4);

static void BM_dyn_quotient_swap(benchmark::State& state) {
  std::size_t const k = state.range(0);
  auto const        s = square(k);
  auto const        g = validate_action(s, {permute_coordinates(k + 1, {1, 0})});
  for (auto _ : state)
    benchmark::DoNotOptimize(dyn_quotient(s, g));
}
BENCHMARK(BM_dyn_quotient_swap)->DenseRange(1, 6);

static void BM_complete(benchmark::State& state) {
  auto const s = square(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(complete(s));
}
BENCHMARK(BM_complete)->DenseRange(1, 6);

static void BM_closed_ideals(benchmark::State& state) {
  auto const s = make_fixture("LAT(" + std::to_string(state.range(0)) + ")").semigroup;
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_ideals(s, true, 64));
  state.SetLabel("|S|=" + std::to_string(s.size()));
}
BENCHMARK(BM_closed_ideals)->DenseRange(2, 4);

static void BM_functionals(benchmark::State& state) {
  auto const s = make_fixture("LAT(" + std::to_string(state.range(0)) + ")").semigroup;
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_functionals(s, nullptr, 64));
  state.SetLabel("|S|=" + std::to_string(s.size()));
}
BENCHMARK(BM_functionals)->DenseRange(2, 4);

static void BM_strict_comparison(benchmark::State& state) {
  std::size_t const k = state.range(0);
  auto const        s = square(k);
  auto const        g = validate_action(s, {permute_coordinates(k + 1, {1, 0})});
  for (auto _ : state)
    benchmark::DoNotOptimize(dyn_strict_comparison(s, g, 64));
}
BENCHMARK(BM_strict_comparison)->DenseRange(1, 3);
BENCHMARK_MAIN();
