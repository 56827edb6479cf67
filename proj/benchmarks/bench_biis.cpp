// Microbenchmarks for the hot paths: subdivision growth, counting
// recurrences, indistinguishability-graph synthesis, protocol simulation,
// isomorphism search, and the approximate-agreement loop.

#include <benchmark/benchmark.h>

#include <vector>

#include "biis/agreement.hpp"
#include "biis/complex.hpp"
#include "biis/fvector_calculus.hpp"
#include "biis/generators.hpp"
#include "biis/indist.hpp"
#include "biis/protocol.hpp"
#include "biis/subdivision.hpp"

namespace {

using namespace biis;

void BM_IterateSubdivide(benchmark::State& state) {
  const auto base = standard_simplex(2);
  const int rounds = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto c = iterate_subdivide(base, rounds);
    benchmark::DoNotOptimize(c);
  }
  state.counters["facets"] =
      static_cast<double>(iterate_subdivide(base, rounds).facets().size());
}
BENCHMARK(BM_IterateSubdivide)->DenseRange(1, 3);

void BM_CornerStarCount(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto t = f_star_ch_delta(n, n);  // deepest diagonal entry
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_CornerStarCount)->RangeMultiplier(2)->Range(4, 64);

void BM_FvecSubdivisionChain(benchmark::State& state) {
  const auto table = interior_table_by_enumeration(2);
  const FVector base = standard_simplex(2).f_vector();
  const int rounds = static_cast<int>(state.range(0));
  for (auto _ : state) {
    FVector f = base;
    for (int t = 0; t < rounds; ++t) f = fvec_subdivision(f, table);
    benchmark::DoNotOptimize(f);
  }
}
BENCHMARK(BM_FvecSubdivisionChain)->DenseRange(4, 16, 4);

void BM_IndistGraphs(benchmark::State& state) {
  const auto c = iterate_subdivide(standard_simplex(2),
                                   static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (Color p = 0; p < c.num_processes(); ++p) {
      auto g = indist_graph(c, p);
      benchmark::DoNotOptimize(g);
    }
  }
}
BENCHMARK(BM_IndistGraphs)->DenseRange(1, 2);

void BM_SynthEncodingSchedule(benchmark::State& state) {
  const auto base = standard_simplex(2);
  const int rounds = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto s = synth_encoding_schedule(base, rounds);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_SynthEncodingSchedule)->DenseRange(1, 3);

void BM_BoundedSimulation(benchmark::State& state) {
  const auto base = standard_simplex(2);
  const int rounds = static_cast<int>(state.range(0));
  const auto sched = synth_encoding_schedule(base, rounds);
  std::vector<Encoding> encs;
  for (const auto& r : sched.rounds) encs.push_back(r.encoding);
  for (auto _ : state) {
    auto run = iterate_protocol(base, rounds, ProtocolMode::kBounded, &encs);
    benchmark::DoNotOptimize(run);
  }
  state.counters["facets"] = static_cast<double>(
      iterate_protocol(base, rounds, ProtocolMode::kBounded, &encs)
          .levels.back()
          .complex.facets()
          .size());
}
BENCHMARK(BM_BoundedSimulation)->DenseRange(1, 2);

void BM_ChromaticIso(benchmark::State& state) {
  const auto c = iterate_subdivide(standard_simplex(2),
                                   static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto res = chromatic_iso(c, c);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_ChromaticIso)->DenseRange(1, 2);

void BM_ApproxAgreement(benchmark::State& state) {
  const int rounds = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto rep = run_agreement(rounds);
    benchmark::DoNotOptimize(rep);
  }
  state.counters["edges"] =
      run_agreement(rounds).eps_edges.convert_to<double>();
}
BENCHMARK(BM_ApproxAgreement)->DenseRange(2, 6, 2);

}  // namespace

BENCHMARK_MAIN();
