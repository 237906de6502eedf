#include <benchmark/benchmark.h>

#include "hestondist/distance.hpp"
#include "hestondist/geodesic.hpp"
#include "hestondist/grushin.hpp"
#include "hestondist/ldpsim.hpp"

namespace {

using namespace hdist;

void BM_DistanceC(benchmark::State& state) {
  const HestonPoint a(0.0, 1.0), b(static_cast<double>(state.range(0)), 4.0);
  for (auto _ : state) benchmark::DoNotOptimize(heston_distance(a, b, Method::C));
}
BENCHMARK(BM_DistanceC)->Arg(1)->Arg(10)->Arg(100);

void BM_DistanceDelta(benchmark::State& state) {
  const HestonPoint a(0.0, 1.0), b(static_cast<double>(state.range(0)), 4.0);
  for (auto _ : state) benchmark::DoNotOptimize(heston_distance(a, b, Method::Delta));
}
BENCHMARK(BM_DistanceDelta)->Arg(1)->Arg(10)->Arg(100);

void BM_Boundary(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(heston_distance(HestonPoint(0.0, 0.0), HestonPoint(4.0, 0.0)));
  }
}
BENCHMARK(BM_Boundary);

void BM_LambdaStar(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(lambda_star(0.3, 1.2, 1.1, -0.7));
}
BENCHMARK(BM_LambdaStar);

void BM_Geodesic(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(geodesic_path(HestonPoint(0.0, 1.0), HestonPoint(10.0, 4.0), n));
  }
}
BENCHMARK(BM_Geodesic)->Arg(11)->Arg(1001);

void BM_SimulateTerminal(benchmark::State& state) {
  SimConfig c;
  c.t = 0.5;
  c.n_paths = static_cast<std::size_t>(state.range(0));
  c.n_steps = 400;
  c.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(simulate_terminal(c));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SimulateTerminal)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
