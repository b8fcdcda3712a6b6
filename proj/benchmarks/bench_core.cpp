#include <benchmark/benchmark.h>

#include <cmath>

#include "recon/channel.hpp"
#include "recon/decoder.hpp"
#include "recon/llr.hpp"
#include "recon/peg.hpp"
#include "recon/rng.hpp"

namespace {

void BM_BiawgnCapacity(benchmark::State& state) {
    const double s = 0.17 / state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(recon::biawgn_capacity(s));
}
BENCHMARK(BM_BiawgnCapacity)->Arg(1)->Arg(100)->Arg(1000);

void BM_RepeatedCrossover(benchmark::State& state) {
    const unsigned m = static_cast<unsigned>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(recon::repeated_crossover(0.48, m));
}
BENCHMARK(BM_RepeatedCrossover)->Arg(11)->Arg(1001)->Arg(100001);

void BM_BpDecodeRateHalf(benchmark::State& state) {
    const auto h = recon::fixture_rate_half_4096();
    recon::BpDecoder decoder(h);
    const double s = 2.5;
    recon::Rng rng(7);
    std::vector<double> y(h.n_cols);
    for (auto& v : y) v = 1.0 + rng.next_gaussian() / std::sqrt(s);
    const auto llr = recon::llr_biawgn(y, s);
    const recon::Bits zero(h.n_rows(), 0);
    for (auto _ : state) {
        auto res = decoder.decode(llr, zero);
        benchmark::DoNotOptimize(res);
    }
}
BENCHMARK(BM_BpDecodeRateHalf);

} // namespace

BENCHMARK_MAIN();
