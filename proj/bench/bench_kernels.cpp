#include <benchmark/benchmark.h>

#include "vanish/catalog.hpp"
#include "vanish/factcheck.hpp"
#include "vanish/kernels.hpp"

using namespace vanish;

namespace {

const CatalogEntry& pick(const std::string& name) {
  static const auto catalog = load_catalog("default");
  return find_entry(catalog, name);
}

template <class Fn>
void classes_kernel(benchmark::State& state, Fn fn, const char* name) {
  const auto& g = pick(name).group;
  const auto cls = conjugacy_classes(g);
  for (auto _ : state) benchmark::DoNotOptimize(fn(g, cls));
}

template <class Fn>
void core_kernel(benchmark::State& state, Fn fn, const char* name) {
  const auto f = pick(name).factorisations.at(0);
  for (auto _ : state) benchmark::DoNotOptimize(fn(f));
}

template <class Fn>
void permutability_kernel(benchmark::State& state, Fn fn, const char* name) {
  const auto f = pick(name).factorisations.at(0);
  for (auto _ : state) benchmark::DoNotOptimize(fn(f, kDefaultSubgroupCap));
}

}  // namespace

BENCHMARK_CAPTURE(classes_kernel, class_coefficients_s5_serial, &class_coefficients_serial, "s5");
BENCHMARK_CAPTURE(classes_kernel, class_coefficients_s5_parallel, &class_coefficients, "s5");
BENCHMARK_CAPTURE(classes_kernel, class_coefficients_psl27_serial, &class_coefficients_serial, "psl(2,7)");
BENCHMARK_CAPTURE(classes_kernel, class_coefficients_psl27_parallel, &class_coefficients, "psl(2,7)");
BENCHMARK_CAPTURE(classes_kernel, class_normal_closures_s5_serial, &class_normal_closures_serial, "s5");
BENCHMARK_CAPTURE(classes_kernel, class_normal_closures_s5_parallel, &class_normal_closures, "s5");
BENCHMARK_CAPTURE(classes_kernel, power_maps_psl27_serial, &power_maps_serial, "psl(2,7)");
BENCHMARK_CAPTURE(classes_kernel, power_maps_psl27_parallel, &power_maps, "psl(2,7)");
BENCHMARK_CAPTURE(core_kernel, is_core_factorisation_example24_serial, &is_core_factorisation_serial, "example-2.4");
BENCHMARK_CAPTURE(core_kernel, is_core_factorisation_example24_parallel, &is_core_factorisation, "example-2.4");
BENCHMARK_CAPTURE(permutability_kernel, permutability_example24_serial, &permutability_serial, "example-2.4");
BENCHMARK_CAPTURE(permutability_kernel, permutability_example24_parallel, &permutability, "example-2.4");
BENCHMARK_CAPTURE(permutability_kernel, permutability_s5_serial, &permutability_serial, "s5");
BENCHMARK_CAPTURE(permutability_kernel, permutability_s5_parallel, &permutability, "s5");

BENCHMARK_MAIN();
