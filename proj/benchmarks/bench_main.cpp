#include <benchmark/benchmark.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "lagcd/agcd.hpp"
#include "lagcd/cluster.hpp"
#include "lagcd/matching.hpp"
#include "lagcd/rootfind.hpp"

namespace {

using lagcd::Complex;

std::vector<Complex> chebyshev(std::size_t count) {
  std::vector<Complex> out(count);
  for (std::size_t j = 0; j < count; ++j) {
    out[j] = std::cos((2.0 * static_cast<double>(j) + 1.0) * std::numbers::pi / (2.0 * static_cast<double>(count)));
  }
  return out;
}

lagcd::RootList unitSquare(std::size_t n, std::uint64_t seed, int maxMult = 1) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> mult(1, maxMult);
  std::vector<lagcd::Root> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back({Complex(u(gen), u(gen)), mult(gen)});
  return lagcd::RootList(std::move(out));
}

void BM_FindRoots(benchmark::State& state) {
  const auto degree = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 gen(1);
  std::normal_distribution<double> nd;
  std::vector<Complex> values(degree + 1);
  for (auto& v : values) v = nd(gen);
  const lagcd::LagrangePoly p(chebyshev(degree + 1), values);
  for (auto _ : state) benchmark::DoNotOptimize(lagcd::findRoots(p));
  state.SetComplexityN(static_cast<benchmark::IterationCount>(degree));
}
BENCHMARK(BM_FindRoots)->RangeMultiplier(2)->Range(8, 256)->Complexity(benchmark::oNCubed)->Unit(benchmark::kMicrosecond);

void BM_ClusterDnC(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto q = unitSquare(n, 2);
  const double sigma = 0.5 / std::sqrt(static_cast<double>(n));
  lagcd::DncStats stats;
  for (auto _ : state) {
    stats = {};
    benchmark::DoNotOptimize(lagcd::clusterRootsDnC(q, sigma, &stats));
  }
  state.counters["comparisons"] = static_cast<double>(stats.comparisons);
  state.SetComplexityN(static_cast<benchmark::IterationCount>(n));
}
BENCHMARK(BM_ClusterDnC)->RangeMultiplier(4)->Range(1 << 8, 1 << 16)->Complexity(benchmark::oNLogN)->Unit(benchmark::kMillisecond);

void BM_ClusterHeuristic(benchmark::State& state) {
  const auto q = unitSquare(static_cast<std::size_t>(state.range(0)), 3);
  lagcd::ClusterParams params;
  params.sigma = 1e-3;
  params.strategy = lagcd::ClusterStrategy::SymmetryHeuristic;
  for (auto _ : state) benchmark::DoNotOptimize(lagcd::clusterRoots(q, params));
}
BENCHMARK(BM_ClusterHeuristic)->Arg(12)->Arg(20)->Arg(64)->Unit(benchmark::kMicrosecond);

void BM_Matching(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = lagcd::buildGraph(unitSquare(n, 4, 5), unitSquare(n, 5, 5), 1.5 / std::sqrt(static_cast<double>(n)));
  const bool exact = state.range(1) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(exact ? lagcd::exactMWM(g) : lagcd::greedyMWM(g));
  state.SetLabel(exact ? "exact" : "greedy");
}
BENCHMARK(BM_Matching)->ArgsProduct({{8, 32, 100}, {0, 1}})->Unit(benchmark::kMicrosecond);

void BM_Pipeline(benchmark::State& state) {
  // Roots drawn from well-spaced points near the node interval, so the
  // samples determine them to working accuracy. P and Q share half.
  const auto degree = static_cast<std::size_t>(state.range(0));
  std::vector<Complex> pool(2 * degree);
  for (std::size_t j = 0; j < pool.size(); ++j) {
    const double t = std::numbers::pi * (static_cast<double>(j) + 0.5) / static_cast<double>(pool.size());
    pool[j] = Complex(0.9 * std::cos(t), 0.02 * ((j % 3) - 1.0));
  }
  std::mt19937_64 gen(6);
  std::shuffle(pool.begin(), pool.end(), gen);
  const std::size_t shared = degree / 2;
  std::vector<Complex> pr(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(degree));
  std::vector<Complex> qr(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(shared));
  qr.insert(qr.end(), pool.begin() + static_cast<std::ptrdiff_t>(degree),
            pool.begin() + static_cast<std::ptrdiff_t>(2 * degree - shared));
  const auto p = lagcd::fromRoots(lagcd::RootList::simple(pr), chebyshev(degree + 1));
  const auto q = lagcd::fromRoots(lagcd::RootList::simple(qr), chebyshev(degree + 1));
  lagcd::AgcdOptions opts;
  opts.cluster.sigma = 1e-4;
  int gcdDegree = 0;
  for (auto _ : state) {
    const auto r = lagcd::approximateGcd(p, q, opts);
    gcdDegree = r.degree();
    benchmark::DoNotOptimize(gcdDegree);
  }
  state.counters["gcd_degree"] = gcdDegree;
}
BENCHMARK(BM_Pipeline)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
