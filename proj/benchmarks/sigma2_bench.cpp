// Hot-path microbenchmarks. Run ./sigma2_bench --benchmark_filter=... to
// narrow; all inputs are deterministic.

#include <benchmark/benchmark.h>

#include <cstdint>

#include "sigma2/coding.hpp"
#include "sigma2/distance.hpp"
#include "sigma2/logistic.hpp"
#include "sigma2/pwl.hpp"
#include "sigma2/systems.hpp"
#include "sigma2/tau.hpp"
#include "sigma2/turbulence.hpp"

namespace {

using namespace sigma2;

void BM_ChampernowneBit(benchmark::State& state) {
  BitStream c = BitStream::champernowne();
  std::uint64_t n = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(c.bit(n));
    n = (n + 2654435761u) % (1u << 30);
  }
}
BENCHMARK(BM_ChampernowneBit);

void BM_TauBitSmall(benchmark::State& state) {
  TauParams p = TauParams::defaults(5);
  std::uint64_t n = 0;
  const std::uint64_t limit = factorial(9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tau_bit(p, n));
    n = (n + 2654435761u) % limit;
  }
}
BENCHMARK(BM_TauBitSmall);

void BM_TauBitDeep(benchmark::State& state) {
  TauParams p = TauParams::defaults(5);
  std::uint64_t n = 0;
  const std::uint64_t limit = factorial(19);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tau_bit(p, n));
    n = (n + 6364136223846793005ull) % limit;
  }
}
BENCHMARK(BM_TauBitDeep);

void BM_TauPrefixStage(benchmark::State& state) {
  TauParams p = TauParams::defaults(5);
  const std::uint64_t len = factorial(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tau_prefix(p, len));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * len));
}
BENCHMARK(BM_TauPrefixStage)->Arg(8)->Arg(9)->Arg(10);

void BM_TruncatedDistance(benchmark::State& state) {
  TauParams p = TauParams::defaults(5);
  BitStream x = tau_stream(p);
  BitStream y = complement(shift(x, 7));
  const unsigned precision = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(truncated_distance(x, y, precision));
  }
}
BENCHMARK(BM_TruncatedDistance)->Arg(64)->Arg(512);

void BM_DistanceSeries(benchmark::State& state) {
  TauParams p = TauParams::defaults(5);
  BitStream x = tau_stream(p);
  BitStream y = complement(shift(x, 7));
  const unsigned threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(distance_series(x, y, 512, 64, threads));
  }
}
BENCHMARK(BM_DistanceSeries)->Arg(1)->Arg(4);

void BM_TentOrbit(benchmark::State& state) {
  IntervalMap tent = IntervalMap::pwl(make_tent(), "tent");
  const Rat x0(3, 10);
  for (auto _ : state) {
    Rat v = x0;
    for (int i = 0; i < 256; ++i) v = tent.eval(v);
    benchmark::DoNotOptimize(v);
  }
  state.SetItemsProcessed(state.iterations() * 256);
}
BENCHMARK(BM_TentOrbit);

void BM_LogisticOrbitDepth(benchmark::State& state) {
  const Rat mu(5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        lambda_membership_depth(mu, Rat(1, 3), static_cast<unsigned>(state.range(0))));
  }
}
BENCHMARK(BM_LogisticOrbitDepth)->Arg(4)->Arg(8);

void BM_TurbulenceCheck(benchmark::State& state) {
  PwlMap hh = pwl_compose(make_h(), make_h());
  for (auto _ : state) {
    benchmark::DoNotOptimize(turbulence_check(hh));
  }
}
BENCHMARK(BM_TurbulenceCheck);

}  // namespace

BENCHMARK_MAIN();
