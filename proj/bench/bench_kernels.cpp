// Serial reference vs OpenMP kernels on the larger fixtures.

#include <benchmark/benchmark.h>

#include "icsi/kernels.hpp"
#include "icsi/verify.hpp"

using namespace icsi;

namespace {

const Matrix& rs_generator() {
  static const Matrix g = reed_solomon(15, 5, Field::make(2, 4)).generator();
  return g;
}

const Matrix& hamming_generator() {
  static const Matrix g = [] {
    const auto h = verify::hamming_instance();
    return build_scheme(h, default_choice_vectors(h)).generator();
  }();
  return g;
}

template <auto Kernel>
void weight_counts(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(rs_generator()));
}

template <auto Kernel>
void block_level(benchmark::State& state) {
  const auto t = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(rs_generator(), t));
}

template <auto Kernel>
void posterior(benchmark::State& state) {
  const Matrix& g = hamming_generator();
  const Vector x(g.field(), {1, 0, 1, 1, 0, 1, 1});
  const Vector s = multiply(g, x);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(g, 0b11, x.values(), 0b1100, s.values()));
}

std::size_t serial_block_level(const Matrix& g, std::size_t t) { return kernels::serial::block_level(g, t); }
std::size_t omp_block_level(const Matrix& g, std::size_t t) { return kernels::omp::block_level(g, t); }

}  // namespace

BENCHMARK(weight_counts<kernels::serial::weight_counts>)->Name("weight_counts/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(weight_counts<kernels::omp::weight_counts>)->Name("weight_counts/omp")->Unit(benchmark::kMillisecond);
BENCHMARK(block_level<serial_block_level>)->Name("block_level/serial")->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(block_level<omp_block_level>)->Name("block_level/omp")->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(posterior<kernels::serial::posterior_counts>)->Name("posterior_counts/serial");
BENCHMARK(posterior<kernels::omp::posterior_counts>)->Name("posterior_counts/omp");

BENCHMARK_MAIN();
