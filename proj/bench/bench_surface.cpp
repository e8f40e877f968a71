#include <benchmark/benchmark.h>

#include "helixforge/curves/construct.hpp"
#include "helixforge/surface/surface.hpp"

using namespace helixforge;
using namespace helixforge::surface;

namespace {

const SurfaceEvaluator& example_surface() {
  static const SurfaceEvaluator S = [] {
    using field::Polynomial;
    auto p = [](std::initializer_list<long> c) {
      std::vector<SurdScalar> v;
      for (long x : c) v.emplace_back(x);
      return RatFun(Polynomial(std::move(v)));
    };
    RVF3 t = curves::stereographic_tangent(p({0, 1}), p({-1, 1}));
    helix::RationalHelix h = helix::helix_from_a3(curves::rational_bezier3(1, 2, 0, 0, Rational(1, 2), 1), t);
    rmf::RmfApproximation a = rmf::approximate_rmf(h, 3, 3);
    return SurfaceEvaluator(sweep(h, a.pieces.at(0), ProfileCurve::line(Rational(-1, 5), 5, 10, Rational(-1, 2))));
  }();
  return S;
}

void curvature(benchmark::State& state, Exec exec) {
  const SurfaceEvaluator& S = example_surface();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(curvature_grid(S, n, n, exec));
  state.SetItemsProcessed(state.iterations() * n * n);
}

void mesh(benchmark::State& state, Exec exec) {
  const SurfaceEvaluator& S = example_surface();
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sample_mesh(S, n, n, true, exec));
  state.SetItemsProcessed(state.iterations() * n * n);
}

}  // namespace

BENCHMARK_CAPTURE(curvature, serial, Exec::Serial)->Arg(25)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(curvature, parallel, Exec::Parallel)->Arg(25)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(mesh, serial, Exec::Serial)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(mesh, parallel, Exec::Parallel)->Arg(50)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
