#include <benchmark/benchmark.h>

#include "tpcells/braid.hpp"
#include "tpcells/poset.hpp"
#include "tpcells/toric.hpp"

using namespace tpcells;

namespace {

CartanPtr A(int r) { return CartanData::make('A', r); }

void BM_PositiveSubexpression(benchmark::State& state) {
  const auto c = A(static_cast<int>(state.range(0)));
  const auto w0 = WeylElement::longest(c);
  const auto W = enumerate(c);
  for (auto _ : state)
    for (const auto& v : W) benchmark::DoNotOptimize(positive_subexpression(c, w0.word(), v));
}
BENCHMARK(BM_PositiveSubexpression)->Arg(2)->Arg(3)->Arg(4);

void BM_CertifyBigCell(benchmark::State& state) {
  const auto c = A(static_cast<int>(state.range(0)));
  const auto w0 = WeylElement::longest(c);
  const auto pse = positive_subexpression(c, w0.word(), WeylElement::identity(c));
  for (auto _ : state) benchmark::DoNotOptimize(certify_positive(pse));
}
BENCHMARK(BM_CertifyBigCell)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_HullBigCell(benchmark::State& state) {
  const auto c = A(static_cast<int>(state.range(0)));
  const auto w0 = WeylElement::longest(c);
  const auto pse = positive_subexpression(c, w0.word(), WeylElement::identity(c));
  const auto es = build_exponent_set(certify_positive(pse).coords);
  for (auto _ : state) benchmark::DoNotOptimize(LatticePolytope::hull(es.points));
}
BENCHMARK(BM_HullBigCell)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_EulerianCheck(benchmark::State& state) {
  const auto p = enumerate_full_flag_cells(A(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(eulerian_check(p.poset));
}
BENCHMARK(BM_EulerianCheck)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_BoundaryScanA2(benchmark::State& state) {
  const auto c = A(2);
  const auto w0 = WeylElement::longest(c);
  const auto pse = positive_subexpression(c, w0.word(), WeylElement::identity(c));
  for (auto _ : state) benchmark::DoNotOptimize(boundary_scan(pse));
}
BENCHMARK(BM_BoundaryScanA2)->Unit(benchmark::kMillisecond);

void BM_TransportA3(benchmark::State& state) {
  const auto c = A(3);
  const auto w0 = WeylElement::longest(c);
  const auto pse = positive_subexpression(c, w0.word(), WeylElement::identity(c));
  const auto target = reduced_words(w0).back();
  const auto path = word_path(c, w0.word(), target);
  for (auto _ : state) {
    auto fw = factored_word(pse);
    for (const auto& m : path) fw = apply_move(c, fw, m);
    benchmark::DoNotOptimize(fw);
  }
}
BENCHMARK(BM_TransportA3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
