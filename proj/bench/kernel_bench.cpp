// Serial reference versus OpenMP kernels.
#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "pae/kernels/morphology.hpp"
#include "pae/kernels/similarity.hpp"

namespace {

std::vector<std::uint8_t> noise(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<std::uint8_t> v(n);
  for (auto& x : v) x = static_cast<std::uint8_t>(rng());
  return v;
}

std::vector<double> rows(std::size_t n, std::size_t dim, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> v(n * dim);
  for (auto& x : v) x = u(rng);
  return v;
}

template <bool Parallel>
void BM_Grayscale(benchmark::State& state) {
  const auto side = static_cast<std::size_t>(state.range(0));
  const auto rgb = noise(side * side * 3, 1);
  std::vector<std::uint8_t> gray(side * side);
  for (auto _ : state) {
    if constexpr (Parallel)
      pae::kernels::grayscale(rgb, gray);
    else
      pae::kernels::grayscale_serial(rgb, gray);
    benchmark::DoNotOptimize(gray.data());
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * rgb.size()));
}

template <bool Parallel>
void BM_Gradient(benchmark::State& state) {
  const auto side = static_cast<std::size_t>(state.range(0));
  const auto gray = noise(side * side, 2);
  std::vector<std::uint8_t> out(side * side);
  for (auto _ : state) {
    if constexpr (Parallel)
      pae::kernels::morph_gradient(gray, side, side, out, 1, 1);
    else
      pae::kernels::morph_gradient_serial(gray, side, side, out, 1, 1);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * gray.size()));
}

template <bool Parallel>
void BM_CosineMatrix(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const std::size_t dim = 256;
  const auto a = rows(n, dim, 3), b = rows(n, dim, 4);
  for (auto _ : state) {
    auto m = Parallel ? pae::kernels::cosine_matrix(a, b, dim) : pae::kernels::cosine_matrix_serial(a, b, dim);
    benchmark::DoNotOptimize(m.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n * n));
}

}  // namespace

BENCHMARK(BM_Grayscale<false>)->Arg(512)->Arg(1700);
BENCHMARK(BM_Grayscale<true>)->Arg(512)->Arg(1700);
BENCHMARK(BM_Gradient<false>)->Arg(512)->Arg(1700);
BENCHMARK(BM_Gradient<true>)->Arg(512)->Arg(1700);
BENCHMARK(BM_CosineMatrix<false>)->Arg(64)->Arg(256);
BENCHMARK(BM_CosineMatrix<true>)->Arg(64)->Arg(256);

BENCHMARK_MAIN();
