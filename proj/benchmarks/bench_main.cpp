#include <benchmark/benchmark.h>

#include "gaugeball/circumcenter.hpp"
#include "gaugeball/exactlp.hpp"
#include "gaugeball/fixtures.hpp"
#include "gaugeball/oracle.hpp"

namespace {

using namespace gaugeball;

// n = 4 with state.range(0) random tangent constraints.
void BM_SolveLp(benchmark::State& state) {
  Rng rng(1);
  LinearProgram lp;
  lp.objective = rng.vector(4, 10, 3);
  while (lp.constraints.size() < static_cast<std::size_t>(state.range(0))) {
    QVector u = rng.vector(4, 20, 1);
    if (!u.is_zero()) lp.constraints.push_back({u, Rational(rng.between(10, 30)), Sense::LessEqual});
  }
  for (auto _ : state) benchmark::DoNotOptimize(solve_lp(lp));
}
BENCHMARK(BM_SolveLp)->Arg(50)->Arg(200)->Arg(500)->Unit(benchmark::kMillisecond);

void BM_Circumradius(benchmark::State& state) {
  const auto family = fixture_family();
  const NamedGauge& g = family[static_cast<std::size_t>(state.range(0))];
  Rng rng(2);
  PointSet pts;
  for (std::size_t i = 0; i <= g.gauge.dim(); ++i) pts.push_back(rng.vector(g.gauge.dim()));
  state.SetLabel(g.name);
  for (auto _ : state) benchmark::DoNotOptimize(circumradius(pts, g.gauge));
}
BENCHMARK(BM_Circumradius)->DenseRange(0, 7)->Unit(benchmark::kMillisecond);

void BM_Certificate(benchmark::State& state) {
  const GaugeBody c = cross_polytope_gauge(3);
  Rng rng(3);
  PointSet pts;
  for (int i = 0; i < 4; ++i) pts.push_back(rng.vector(3));
  const CircumResult res = circumradius(pts, c);
  for (auto _ : state) benchmark::DoNotOptimize(extract_certificate(pts, c, res));
}
BENCHMARK(BM_Certificate)->Unit(benchmark::kMillisecond);

void BM_EnumerateFaces(benchmark::State& state) {
  const auto family = fixture_family();
  const NamedGauge& g = family[static_cast<std::size_t>(state.range(0))];
  state.SetLabel(g.name);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_faces(g.gauge, static_cast<int>(g.gauge.dim())));
}
BENCHMARK(BM_EnumerateFaces)->DenseRange(0, 7)->Unit(benchmark::kMillisecond);

void BM_WitnessSearch(benchmark::State& state) {
  const auto family = fixture_family();
  const NamedGauge& g = family[static_cast<std::size_t>(state.range(0))];
  state.SetLabel(g.name);
  for (auto _ : state) benchmark::DoNotOptimize(witness_search(g.gauge, 0));
}
BENCHMARK(BM_WitnessSearch)->DenseRange(0, 7)->Unit(benchmark::kMillisecond);

void BM_WitnessSearchRandom3d(benchmark::State& state) {
  Rng rng(static_cast<std::uint64_t>(state.range(0)));
  const GaugeBody c = random_vrep_gauge(rng, 3);
  for (auto _ : state) benchmark::DoNotOptimize(witness_search(c, 0));
}
BENCHMARK(BM_WitnessSearchRandom3d)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_GridRadius(benchmark::State& state) {
  const GaugeBody c = simplex_gauge(2);
  PointSet pts = {QVector(2), QVector(2)};
  pts[1][0] = 1;
  pts[1][1] = 1;
  const Rational res(1, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(grid_radius(pts, c, res));
}
BENCHMARK(BM_GridRadius)->Arg(8)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
