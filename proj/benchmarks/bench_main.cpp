#include <benchmark/benchmark.h>

#include "rectdt/delaunay.hpp"
#include "rectdt/proof_path.hpp"
#include "rectdt/sampling.hpp"
#include "rectdt/spanner.hpp"

namespace {

using namespace rectdt;

const AspectRatio& aspect() {
  static const AspectRatio a = AspectRatio::parse("3/2");
  return a;
}

// Single-pair edge predicate on the raw point set (no triangulation).
void BM_HasEdgePredicate(benchmark::State& state) {
  const PointSet ps = generate_points(static_cast<std::size_t>(state.range(0)), 11);
  const Rational a = aspect().value;
  VertexId v = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(has_edge(ps, a, 0, v));
    v = v + 1 < ps.size() ? v + 1 : 1;
  }
}
BENCHMARK(BM_HasEdgePredicate)->Arg(50)->Arg(200)->Arg(800);

void BM_BuildTriangulation(benchmark::State& state) {
  const PointSet ps = generate_points(static_cast<std::size_t>(state.range(0)), 12);
  for (auto _ : state) benchmark::DoNotOptimize(build_triangulation(ps, aspect()));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildTriangulation)->RangeMultiplier(2)->Range(32, 256)->Complexity()->Unit(benchmark::kMillisecond);

void BM_AllPairsStretch(benchmark::State& state) {
  const Triangulation t = build_triangulation(generate_points(static_cast<std::size_t>(state.range(0)), 13), aspect());
  for (auto _ : state) benchmark::DoNotOptimize(all_pairs_stretch(t));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AllPairsStretch)->RangeMultiplier(2)->Range(32, 256)->Complexity()->Unit(benchmark::kMillisecond);

// Every ordered pair, reusing one extractor so shortest paths are shared.
void BM_ExtractAllPairs(benchmark::State& state) {
  const Triangulation t = build_triangulation(generate_points(static_cast<std::size_t>(state.range(0)), 14), aspect());
  for (auto _ : state) {
    ProofExtractor ex(t);
    for (VertexId u = 0; u < t.size(); ++u)
      for (VertexId v = 0; v < t.size(); ++v)
        if (u != v) benchmark::DoNotOptimize(ex.extract(u, v));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * (state.range(0) - 1));
}
BENCHMARK(BM_ExtractAllPairs)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
