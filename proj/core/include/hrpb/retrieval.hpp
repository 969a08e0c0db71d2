#pragma once

#include <cstdint>
#include <vector>

#include "hrpb/binary_vector.hpp"
#include "hrpb/store.hpp"

namespace hrpb {

struct SearchHit {
  std::uint64_t id = 0;
  std::uint32_t distance = 0;

  friend bool operator==(const SearchHit&, const SearchHit&) = default;
};

// Exact k-nearest-neighbor scan in Hamming space. Returns the k closest
// codes (all of them when k exceeds the store size), sorted by ascending
// (distance, id); equal (distance, id) pairs keep store order. k of zero
// yields an empty result, as does an empty store.
std::vector<SearchHit> knn(const BinaryStore& store,
                           const BinaryEmbedding& query, std::size_t k);

// Every code within `radius` Hamming distance of the query, sorted by
// ascending (distance, id).
std::vector<SearchHit> range_search(const BinaryStore& store,
                                    const BinaryEmbedding& query,
                                    std::uint32_t radius);

}  // namespace hrpb
