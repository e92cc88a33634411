#include <benchmark/benchmark.h>

#include "dyck/kernels.hpp"
#include "dyck/sampling.hpp"

using namespace dyck;

namespace {

std::vector<ShapeClass> classes(std::size_t n) {
  std::vector<ShapeClass> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto rng = sampling::rng_for(101, i);
    out.push_back(sampling::random_nondegenerate_class(rng));
  }
  return out;
}

template <auto Kernel>
void class_batch(benchmark::State& state) {
  const auto cs = classes(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(Kernel(cs));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void sample_atlas(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(Kernel(n, 7, kDefaultTol));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void level_curves(benchmark::State& state) {
  const std::vector<double> levels{0.05, 0.1, 0.2, 0.3, 0.4, 0.45};
  const auto grid = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(Kernel(levels, grid));
  state.SetItemsProcessed(state.iterations() * state.range(0) * static_cast<std::int64_t>(levels.size()));
}

template <auto Kernel>
void eval_schedule(benchmark::State& state) {
  const Family f = constant_angle_family(reduce_mod_pi(1.0));
  std::vector<double> ts;
  for (std::int64_t i = 1; i <= state.range(0); ++i)
    ts.push_back(1.0 / static_cast<double>(i));
  for (auto _ : state)
    benchmark::DoNotOptimize(Kernel(f, ts));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

} // namespace

BENCHMARK(class_batch<kernels::serial::sphere_batch>)->Name("sphere_batch/serial")->Range(1 << 10, 1 << 16);
BENCHMARK(class_batch<kernels::omp::sphere_batch>)->Name("sphere_batch/omp")->Range(1 << 10, 1 << 16)->UseRealTime();
BENCHMARK(class_batch<kernels::serial::torus_batch>)->Name("torus_batch/serial")->Range(1 << 10, 1 << 16);
BENCHMARK(class_batch<kernels::omp::torus_batch>)->Name("torus_batch/omp")->Range(1 << 10, 1 << 16)->UseRealTime();
BENCHMARK(sample_atlas<kernels::serial::sample_atlas>)->Name("sample_atlas/serial")->Range(1 << 10, 1 << 14);
BENCHMARK(sample_atlas<kernels::omp::sample_atlas>)->Name("sample_atlas/omp")->Range(1 << 10, 1 << 14)->UseRealTime();
BENCHMARK(level_curves<kernels::serial::level_curves>)->Name("level_curves/serial")->Range(1 << 8, 1 << 14);
BENCHMARK(level_curves<kernels::omp::level_curves>)->Name("level_curves/omp")->Range(1 << 8, 1 << 14)->UseRealTime();
BENCHMARK(eval_schedule<kernels::serial::eval_schedule>)->Name("eval_schedule/serial")->Range(1 << 8, 1 << 14);
BENCHMARK(eval_schedule<kernels::omp::eval_schedule>)->Name("eval_schedule/omp")->Range(1 << 8, 1 << 14)->UseRealTime();

BENCHMARK_MAIN();
