#include <benchmark/benchmark.h>

#include <cstdint>

#include "phikit/basephi.hpp"
#include "phikit/beatty.hpp"
#include "phikit/catalog.hpp"
#include "phikit/golden.hpp"
#include "phikit/graded.hpp"
#include "phikit/morphism.hpp"
#include "phikit/spectrum.hpp"
#include "phikit/zeckendorf.hpp"

namespace {

void bm_zeck_expand(benchmark::State& state) {
  std::int64_t n = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(phikit::zeck_expand(n));
    n = (n + 104729) % 1000000007;
  }
}
BENCHMARK(bm_zeck_expand);

void bm_beta_expand(benchmark::State& state) {
  std::int64_t n = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(phikit::beta_expand(n));
    n = (n + 104729) % 1000000007;
  }
}
BENCHMARK(bm_beta_expand);

void bm_beta_expand_rst(benchmark::State& state) {
  std::int64_t n = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(phikit::beta_expand_rst(n));
    n = (n + 104729) % 1000000;
  }
}
BENCHMARK(bm_beta_expand_rst);

void bm_floor_mul_phi(benchmark::State& state) {
  std::int64_t n = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(phikit::floor_mul_phi(n));
    n = (n + 104729) % (std::int64_t(1) << 60);
  }
}
BENCHMARK(bm_floor_mul_phi);

void bm_fixed_point(benchmark::State& state) {
  const phikit::CatalogEntry* e = phikit::find_catalog("dCbeta");
  for (auto _ : state)
    benchmark::DoNotOptimize(
        phikit::fixed_point(e->morphism, e->seed, std::size_t(state.range(0))));
}
BENCHMARK(bm_fixed_point)->Arg(1000)->Arg(100000);

void bm_graded_digit_sums(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(phikit::graded_decorated_output(
        phikit::gamma_morphism(), phikit::gamma_seed(),
        phikit::gamma_decoration(), std::size_t(state.range(0))));
}
BENCHMARK(bm_graded_digit_sums)->Arg(1000)->Arg(100000);

void bm_merge_union(benchmark::State& state) {
  std::vector<phikit::Gbs> parts = {
      {3, 1, 1, 1}, {4, 3, 2, 0}, {7, 4, 2, 1}, {11, 7, 4, 0}};
  for (auto _ : state)
    benchmark::DoNotOptimize(phikit::merge_union(parts, state.range(0)));
}
BENCHMARK(bm_merge_union)->Arg(100000);

void bm_factor_complexity(benchmark::State& state) {
  phikit::Word w = phikit::g_word("a", "b", 20000);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        phikit::factor_complexity(w, std::size_t(state.range(0))));
}
BENCHMARK(bm_factor_complexity)->Arg(5)->Arg(50);

}  // namespace

BENCHMARK_MAIN();
