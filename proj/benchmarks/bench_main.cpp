#include <benchmark/benchmark.h>

#include "rdiag/bounds.hpp"
#include "rdiag/cumulants.hpp"
#include "rdiag/mehler.hpp"
#include "rdiag/noncrossing.hpp"
#include "rdiag/normlab.hpp"
#include "rdiag/semigroup.hpp"

using namespace rdiag;

namespace {

void BM_CountNc2Alternating(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto s = StarString::alternating({n}, {n}).repeat(8 / n + 1);
  for (auto _ : state) benchmark::DoNotOptimize(count_nc2(s));
  state.SetLabel(std::to_string(s.length()) + " letters");
}
BENCHMARK(BM_CountNc2Alternating)->Arg(1)->Arg(2)->Arg(4);

void BM_CountNc2ByLength(benchmark::State& state) {
  const auto len = static_cast<std::size_t>(state.range(0));
  const auto s = StarString::alternating({1}, {1}).repeat(len / 2);
  for (auto _ : state) benchmark::DoNotOptimize(count_nc2(s));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CountNc2ByLength)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void BM_HaarMoment(benchmark::State& state) {
  const auto s = parse_string("1^3 *^2 1 *^2 1^2 *^2 1 *");
  const auto spec = CumulantSpec::haar_unitary(s.length());
  for (auto _ : state) benchmark::DoNotOptimize(rdiag_moment(spec, s));
}
BENCHMARK(BM_HaarMoment);

void BM_VerifyBounds(benchmark::State& state) {
  const auto max_len = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_bounds(max_len));
}
BENCHMARK(BM_VerifyBounds)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);

void BM_MarkovTt(benchmark::State& state) {
  MeasureMap measures{{1, semicircle_moments(24)}, {2, semicircle_moments(24)}};
  const auto w = parse_word("a1* a1 a1* a2^2 a1* a2 a1");
  for (auto _ : state) benchmark::DoNotOptimize(markov_Tt(w, measures));
}
BENCHMARK(BM_MarkovTt);

void BM_CircularScan(benchmark::State& state) {
  ScanConfig cfg;
  cfg.t_grid = log_grid(0.005, 0.05, 10);
  for (auto _ : state) benchmark::DoNotOptimize(ultracontractive_scan(cfg));
}
BENCHMARK(BM_CircularScan)->Unit(benchmark::kMillisecond);

}  // namespace
