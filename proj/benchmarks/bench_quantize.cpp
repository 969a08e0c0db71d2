// Throughput of the projection + sign quantization path.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "hrpb/projection.hpp"
#include "hrpb/synthetic.hpp"

namespace {

void BM_HrpQuantize(benchmark::State& state) {
  const auto dim = static_cast<std::uint32_t>(state.range(0));
  const auto bits = static_cast<std::uint32_t>(state.range(1));
  const auto corpus = hrpb::synthetic::gaussian_corpus(dim, 64, 1);
  const hrpb::ProjectionMatrix w(2, dim, bits);

  std::size_t next = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hrpb::hrp_quantize(corpus[next], w));
    next = (next + 1) % corpus.size();
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()));
  state.counters["mac/s"] = benchmark::Counter(
      static_cast<double>(state.iterations()) * dim * bits,
      benchmark::Counter::kIsRate);
}

void BM_BatchQuantize(benchmark::State& state) {
  const auto count = static_cast<std::size_t>(state.range(0));
  const std::uint32_t dim = 768;
  const std::uint32_t bits = 256;
  const auto corpus = hrpb::synthetic::gaussian_corpus(dim, count, 3);
  const hrpb::CompressionConfig config{hrpb::Method::hrp, dim, bits, 4};

  for (auto _ : state) {
    benchmark::DoNotOptimize(hrpb::batch_quantize(corpus, config));
  }
  state.SetItemsProcessed(
      static_cast<std::int64_t>(state.iterations() * count));
}

void BM_SigmoidQuantize(benchmark::State& state) {
  const auto dim = static_cast<std::uint32_t>(state.range(0));
  const auto corpus = hrpb::synthetic::gaussian_corpus(dim, 64, 5);

  std::size_t next = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hrpb::sigmoid_quantize(corpus[next]));
    next = (next + 1) % corpus.size();
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()));
}

}  // namespace

BENCHMARK(BM_HrpQuantize)
    ->Args({768, 256})
    ->Args({768, 1024})
    ->Args({768, 2048})
    ->Args({1024, 2048});
BENCHMARK(BM_BatchQuantize)->Arg(100)->Arg(1000);
BENCHMARK(BM_SigmoidQuantize)->Arg(768)->Arg(4096);

BENCHMARK_MAIN();
