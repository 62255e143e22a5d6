#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "divtower/bit_matrix.hpp"
#include "divtower/catalog.hpp"
#include "divtower/css_code.hpp"
#include "divtower/lifting.hpp"
#include "divtower/ortho.hpp"

using namespace divtower;

namespace {

BitMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  BitMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, (rng() & 1) != 0);
  return m;
}

void bm_rank(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const BitMatrix m = random_matrix(n, n, 9);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(bm_rank)->Arg(64)->Arg(256);

void bm_rref(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const BitMatrix m = random_matrix(n, n, 10);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(bm_rref)->Arg(64)->Arg(256);

void bm_orthogonality_check(benchmark::State& state) {
  const OrthoPair h = hcode(6);
  const LiftResult lift = assemble_lift({{h.logical, h.stab, h.coeff}});
  const BitMatrix stacked = BitMatrix::vstack(lift.c_ell, lift.c_out, lift.c_in);
  for (auto _ : state) benchmark::DoNotOptimize(is_nu_orthogonal(stacked, lift.t_lift));
}
BENCHMARK(bm_orthogonality_check);

void bm_lift_7qubit(benchmark::State& state) {
  const OrthoPair st = steane();
  for (auto _ : state)
    benchmark::DoNotOptimize(assemble_lift({{st.logical, st.stab, st.coeff}}));
}
BENCHMARK(bm_lift_7qubit);

void bm_lift_hcode6(benchmark::State& state) {
  const OrthoPair h = hcode(6);
  for (auto _ : state) benchmark::DoNotOptimize(assemble_lift({{h.logical, h.stab, h.coeff}}));
}
BENCHMARK(bm_lift_hcode6);

void bm_distance_z_31(benchmark::State& state) {
  const CssCode code = rm_code(5);
  for (auto _ : state) benchmark::DoNotOptimize(distance_z(code, 5));
}
BENCHMARK(bm_distance_z_31);

void bm_undetected_weight(benchmark::State& state) {
  const OrthoPair st = steane();
  const auto cm = complete_check_matrix({{st.logical, st.stab, st.coeff}});
  for (auto _ : state)
    benchmark::DoNotOptimize(undetected_min_weight(cm.first, cm.second, 4));
}
BENCHMARK(bm_undetected_weight);

}  // namespace

BENCHMARK_MAIN();
