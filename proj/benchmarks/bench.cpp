// Microbenchmarks for the hot paths: propagator assembly, concurrence,
// outcome enumeration, and the time optimizer.
#include <benchmark/benchmark.h>

#include <spinnet/entanglement.hpp>
#include <spinnet/graph.hpp>
#include <spinnet/hamiltonian.hpp>
#include <spinnet/linalg.hpp>
#include <spinnet/protocol.hpp>

#include <random>
#include <vector>

using namespace spinnet;

namespace {

constexpr double kPi = 3.14159265358979323846;
const CouplingModel kHalfXY{Coupling::XY, 0.5};

std::vector<PairSpec> all_pure(int n, double theta) {
  return std::vector<PairSpec>(static_cast<size_t>(n), PairSpec::pure(theta));
}

void bench_propagator(benchmark::State& state) {
  const Graph g = Graph::cycle(static_cast<int>(state.range(0)));
  const HermitianOperator h = build_hamiltonian(g, kHalfXY);
  const EigenSystem eig = hermitian_eig(h);
  double t = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(propagator(eig, t).matrix());
    t += 0.1;
  }
}
BENCHMARK(bench_propagator)->Arg(4)->Arg(6)->Arg(8);

void bench_concurrence(benchmark::State& state) {
  std::mt19937 rng(7);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<TwoQubitDensity> densities;
  for (int k = 0; k < 64; ++k) {
    Eigen::Matrix4cd m;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m(i, j) = Complex(gauss(rng), gauss(rng));
    Eigen::Matrix4cd rho = m * m.adjoint();
    rho /= rho.trace().real();
    densities.emplace_back(rho);
  }
  size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(concurrence(densities[k % densities.size()]));
    ++k;
  }
}
BENCHMARK(bench_concurrence);

void bench_outcomes(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  ProtocolEngine engine(Graph::path(n), kHalfXY, all_pure(n, 0.9));
  double t = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(engine.outcomes_at(t));
    t += 0.05;
  }
}
BENCHMARK(bench_outcomes)->Arg(3)->Arg(5);

void bench_efficiency_pure(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  ProtocolEngine engine(Graph::path(n), kHalfXY, all_pure(n, 0.9));
  double t = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(engine.efficiency_at(t));
    t += 0.05;
  }
}
BENCHMARK(bench_efficiency_pure)->Arg(3)->Arg(5);

void bench_efficiency_mixed(benchmark::State& state) {
  ProtocolEngine engine(Graph::complete(3), kHalfXY,
                        std::vector<PairSpec>(3, PairSpec::werner(0.9)));
  double t = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(engine.efficiency_at(t));
    t += 0.05;
  }
}
BENCHMARK(bench_efficiency_mixed);

void bench_optimize(benchmark::State& state) {
  const Graph g = Graph::path(3);
  const std::vector<PairSpec> specs = all_pure(3, kPi / 6.0);
  OptimizeOptions opts;
  opts.grid_points = 200;
  for (auto _ : state) {
    benchmark::DoNotOptimize(optimize_time(g, kHalfXY, specs, opts));
  }
}
BENCHMARK(bench_optimize);

}  // namespace

BENCHMARK_MAIN();
