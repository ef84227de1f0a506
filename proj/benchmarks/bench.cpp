#include <benchmark/benchmark.h>

#include "coc/decoder.hpp"
#include "coc/harness.hpp"
#include "coc/spread.hpp"

namespace {

coc::CyclicOrbitCode primitive_code(std::size_t n, std::size_t k, std::uint64_t seed) {
  coc::Rng rng(seed);
  const coc::Poly p = coc::least_primitive(coc::PrimeField(2), n);
  return coc::CyclicOrbitCode(coc::ElementaryDivisorSpec{2, {{p, 1}}}, coc::random_subspace(2, k, n, rng));
}

void BM_AnalyzeNaive(benchmark::State& state) {
  const auto code = primitive_code(static_cast<std::size_t>(state.range(0)), 3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(coc::analyze_naive(code));
}
BENCHMARK(BM_AnalyzeNaive)->DenseRange(6, 12, 2);

void BM_AnalyzePrimitive(benchmark::State& state) {
  const auto code = primitive_code(static_cast<std::size_t>(state.range(0)), 3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(coc::analyze_primitive(code));
}
BENCHMARK(BM_AnalyzePrimitive)->DenseRange(6, 12, 2);

void BM_AnalyzeReducibleBlocks(benchmark::State& state) {
  coc::Rng rng(2);
  const coc::ElementaryDivisorSpec spec{2, {{coc::Poly::parse(2, "1 1 0 0 1"), 1}, {coc::Poly::parse(2, "1 1 0 0 0 0 1"), 1}}};
  const coc::CyclicOrbitCode code(spec, coc::random_subspace(2, 2, 10, rng));
  const bool naive = state.range(0) == 0;
  for (auto _ : state) benchmark::DoNotOptimize(naive ? coc::analyze_naive(code) : coc::analyze_reducible_blocks(code));
  state.SetLabel(naive ? "naive" : "fast");
}
BENCHMARK(BM_AnalyzeReducibleBlocks)->Arg(0)->Arg(1);

struct DecodeFixture {
  coc::OrbitDecoder decoder;
  std::vector<coc::Subspace> received;
};

DecodeFixture decode_fixture(std::size_t n, std::size_t k) {
  DecodeFixture fx{coc::OrbitDecoder(coc::build_spread({2, k, n, std::nullopt})), {}};
  for (std::uint64_t s = 0; s < 32; ++s) {
    coc::Rng rng(coc::trial_seed(3, s));
    const auto& sent = fx.decoder.codeword(rng.below(fx.decoder.cardinality()));
    fx.received.push_back(coc::transmit(sent, {0, 1, rng.next()}));
  }
  return fx;
}

void BM_DecodeExhaustive(benchmark::State& state) {
  const auto fx = decode_fixture(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(fx.decoder.decode_exhaustive(fx.received[i++ % fx.received.size()]));
}
BENCHMARK(BM_DecodeExhaustive)->Args({6, 3})->Args({8, 4})->Args({10, 5})->Args({12, 6});

void BM_DecodeLf(benchmark::State& state) {
  const auto fx = decode_fixture(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(fx.decoder.decode_lf(fx.received[i++ % fx.received.size()]));
}
BENCHMARK(BM_DecodeLf)->Args({6, 3})->Args({8, 4})->Args({10, 5})->Args({12, 6});

}  // namespace

BENCHMARK_MAIN();
