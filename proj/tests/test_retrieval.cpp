#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <tuple>
#include <vector>

#include "helpers.hpp"
#include "hrpb/error.hpp"
#include "hrpb/retrieval.hpp"
#include "hrpb/rng.hpp"
#include "hrpb/store.hpp"

using namespace hrpb;

namespace {

constexpr std::uint32_t kWidth = 256;

BinaryStore random_store(std::size_t count, std::uint64_t seed,
                         std::vector<std::uint64_t> ids = {}) {
  Xoshiro256PlusPlus rng(seed);
  std::vector<BinaryEmbedding> codes;
  codes.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    codes.push_back(testutil::random_code(kWidth, rng));
  }
  const CompressionConfig config{Method::hrp, 768, kWidth, seed};
  return BinaryStore(config, codes, std::move(ids));
}

// Full-sort reference: every candidate ranked by (distance, id, position).
std::vector<SearchHit> sorted_scan(const BinaryStore& store,
                                   const BinaryEmbedding& query,
                                   std::size_t k) {
  std::vector<std::tuple<std::uint32_t, std::uint64_t, std::size_t>> all;
  for (std::size_t i = 0; i < store.size(); ++i) {
    all.emplace_back(
        static_cast<std::uint32_t>(hamming(store.embedding(i), query)),
        store.id(i), i);
  }
  std::sort(all.begin(), all.end());
  if (k < all.size()) all.resize(k);
  std::vector<SearchHit> hits;
  hits.reserve(all.size());
  for (const auto& [distance, id, position] : all) {
    hits.push_back(SearchHit{id, distance});
  }
  return hits;
}

}  // namespace

TEST_CASE("knn equals a full sorted scan") {
  const auto store = random_store(500, 1);
  Xoshiro256PlusPlus rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const auto query = testutil::random_code(kWidth, rng);
    for (const std::size_t k : {std::size_t{1}, std::size_t{7},
                                std::size_t{100}, std::size_t{500},
                                std::size_t{1000}}) {
      CHECK(knn(store, query, k) == sorted_scan(store, query, k));
    }
  }
}

TEST_CASE("knn results are sorted and the member of the store ranks first") {
  const auto store = random_store(300, 3);
  const auto query = store.embedding(123);
  const auto hits = knn(store, query, 10);
  REQUIRE(hits.size() == 10);
  CHECK(hits[0].id == 123);
  CHECK(hits[0].distance == 0);
  for (std::size_t i = 1; i < hits.size(); ++i) {
    const bool ordered =
        hits[i - 1].distance < hits[i].distance ||
        (hits[i - 1].distance == hits[i].distance && hits[i - 1].id < hits[i].id);
    CHECK(ordered);
  }
}

TEST_CASE("a larger k extends the result without reshuffling the prefix") {
  const auto store = random_store(200, 4);
  Xoshiro256PlusPlus rng(5);
  const auto query = testutil::random_code(kWidth, rng);
  const auto more = knn(store, query, 50);
  for (const std::size_t k : {std::size_t{1}, std::size_t{10}, std::size_t{49}}) {
    const auto fewer = knn(store, query, k);
    REQUIRE(fewer.size() == k);
    CHECK(std::equal(fewer.begin(), fewer.end(), more.begin()));
  }
}

TEST_CASE("knn is invariant under permuting the store") {
  Xoshiro256PlusPlus rng(6);
  std::vector<BinaryEmbedding> codes;
  for (int i = 0; i < 150; ++i) codes.push_back(testutil::random_code(kWidth, rng));
  const CompressionConfig config{Method::hrp, 768, kWidth, 6};

  std::vector<std::uint64_t> order(codes.size());
  std::iota(order.begin(), order.end(), 0);
  Xoshiro256PlusPlus shuffle_rng(99);
  seeded_shuffle(order, shuffle_rng);

  std::vector<BinaryEmbedding> shuffled;
  std::vector<std::uint64_t> shuffled_ids;
  for (const auto i : order) {
    shuffled.push_back(codes[i]);
    shuffled_ids.push_back(i);
  }

  const BinaryStore original(config, codes);
  const BinaryStore permuted(config, shuffled, shuffled_ids);

  const auto query = testutil::random_code(kWidth, rng);
  CHECK(knn(original, query, 20) == knn(permuted, query, 20));
}

TEST_CASE("reported distances are re-verifiable against the codes") {
  const auto store = random_store(100, 7);
  Xoshiro256PlusPlus rng(8);
  const auto query = testutil::random_code(kWidth, rng);
  for (const auto& hit : knn(store, query, 25)) {
    // Default ids are positions, so the hit id addresses its code directly.
    CHECK(hamming(store.embedding(hit.id), query) == hit.distance);
  }
}

TEST_CASE("duplicate ids resolve by store position") {
  // Two identical codes sharing an id: both appear, in store order.
  const auto code = testutil::make_code({1, 0, 1, 1, 0, 0, 0, 0});
  const auto other = testutil::make_code({0, 1, 0, 0, 1, 1, 1, 1});
  const CompressionConfig config{Method::hrp, 16, 8, 0};
  const BinaryStore store(config,
                          std::vector<BinaryEmbedding>{code, code, other},
                          {5, 5, 2});
  const auto hits = knn(store, code, 3);
  REQUIRE(hits.size() == 3);
  CHECK(hits[0] == SearchHit{5, 0});
  CHECK(hits[1] == SearchHit{5, 0});
  CHECK(hits[2] == SearchHit{2, 8});
}

TEST_CASE("k of zero and empty stores give empty results") {
  const auto store = random_store(10, 9);
  Xoshiro256PlusPlus rng(10);
  const auto query = testutil::random_code(kWidth, rng);
  CHECK(knn(store, query, 0).empty());

  const CompressionConfig config{Method::hrp, 768, kWidth, 0};
  const BinaryStore empty(config, std::vector<std::uint8_t>{}, 0);
  CHECK(knn(empty, query, 5).empty());
  CHECK(range_search(empty, query, kWidth).empty());
}

TEST_CASE("query width must match the store") {
  const auto store = random_store(10, 11);
  const auto narrow = testutil::make_code({1, 0, 1});
  CHECK_THROWS_AS((void)knn(store, narrow, 3), ShapeError);
  CHECK_THROWS_AS((void)range_search(store, narrow, 1), ShapeError);
}

TEST_CASE("range search returns exactly the codes within the radius") {
  const auto store = random_store(400, 12);
  Xoshiro256PlusPlus rng(13);
  const auto query = testutil::random_code(kWidth, rng);

  // Radius near the distance median keeps both sides populated.
  const std::uint32_t radius = kWidth / 2;
  const auto hits = range_search(store, query, radius);

  std::vector<SearchHit> expected;
  for (std::size_t i = 0; i < store.size(); ++i) {
    const auto d =
        static_cast<std::uint32_t>(hamming(store.embedding(i), query));
    if (d <= radius) expected.push_back(SearchHit{store.id(i), d});
  }
  std::sort(expected.begin(), expected.end(),
            [](const SearchHit& a, const SearchHit& b) {
              return std::tie(a.distance, a.id) < std::tie(b.distance, b.id);
            });
  CHECK(hits == expected);
  CHECK(!hits.empty());
  CHECK(hits.size() < store.size());

  // Radius equal to the width admits everything.
  CHECK(range_search(store, query, kWidth).size() == store.size());
}

TEST_CASE("store validates shapes, ids, and padding") {
  const CompressionConfig config{Method::hrp, 768, 13, 0};
  const auto code = BinaryEmbedding::from_bits(
      std::vector<std::uint8_t>{1, 0, 1, 1, 0, 0, 0, 0, 1, 1, 0, 1, 0});

  // Width mismatch between config and codes.
  const auto wrong = testutil::make_code({1, 0});
  CHECK_THROWS_AS(BinaryStore(config, std::vector<BinaryEmbedding>{wrong}),
                  ShapeError);

  // Id list must match the code count when present.
  CHECK_THROWS_AS(BinaryStore(config, std::vector<BinaryEmbedding>{code},
                              {1, 2}),
                  ShapeError);

  // Payload length must be count * code_bytes.
  CHECK_THROWS_AS(BinaryStore(config, std::vector<std::uint8_t>{0x01}, 1),
                  ShapeError);

  // Nonzero padding inside the payload is corruption.
  std::vector<std::uint8_t> payload{0xFF, 0xFF};  // width 13: top 3 bits pad
  CHECK_THROWS_AS(BinaryStore(config, payload, 1), CorruptionError);

  // A valid store exposes its pieces coherently.
  const BinaryStore store(config, std::vector<BinaryEmbedding>{code});
  CHECK(store.size() == 1);
  CHECK(store.width() == 13);
  CHECK(store.code_bytes() == 2);
  CHECK(store.payload().size() == 2);
  CHECK(store.embedding(0) == code);
  CHECK(store.id(0) == 0);
}
