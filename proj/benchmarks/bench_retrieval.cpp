// Hamming kernel and exact search throughput.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "hrpb/binary_vector.hpp"
#include "hrpb/retrieval.hpp"
#include "hrpb/rng.hpp"
#include "hrpb/store.hpp"

namespace {

std::vector<std::uint8_t> random_bits(std::size_t n,
                                      hrpb::Xoshiro256PlusPlus& rng) {
  std::vector<std::uint8_t> bits(n);
  for (auto& b : bits) b = static_cast<std::uint8_t>(rng.next() & 1u);
  return bits;
}

void BM_Hamming(benchmark::State& state) {
  const auto width = static_cast<std::uint32_t>(state.range(0));
  hrpb::Xoshiro256PlusPlus rng(1);
  const auto a = hrpb::BinaryEmbedding::from_bits(random_bits(width, rng));
  const auto b = hrpb::BinaryEmbedding::from_bits(random_bits(width, rng));

  for (auto _ : state) {
    benchmark::DoNotOptimize(hrpb::hamming(a, b));
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) * 2 *
                          static_cast<std::int64_t>(a.byte_count()));
}

void BM_Knn(benchmark::State& state) {
  const auto count = static_cast<std::size_t>(state.range(0));
  const auto k = static_cast<std::size_t>(state.range(1));
  const std::uint32_t width = 256;

  hrpb::Xoshiro256PlusPlus rng(2);
  std::vector<hrpb::BinaryEmbedding> codes;
  codes.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    codes.push_back(hrpb::BinaryEmbedding::from_bits(random_bits(width, rng)));
  }
  const hrpb::CompressionConfig config{hrpb::Method::hrp, 768, width, 3};
  const hrpb::BinaryStore store(config, codes);
  const auto query = hrpb::BinaryEmbedding::from_bits(random_bits(width, rng));

  for (auto _ : state) {
    benchmark::DoNotOptimize(hrpb::knn(store, query, k));
  }
  state.SetItemsProcessed(
      static_cast<std::int64_t>(state.iterations() * count));
}

}  // namespace

BENCHMARK(BM_Hamming)->Arg(256)->Arg(1024)->Arg(4096);
BENCHMARK(BM_Knn)->Args({1000, 10})->Args({10000, 10})->Args({10000, 100});

BENCHMARK_MAIN();
