#include "hrpb/retrieval.hpp"

#include <algorithm>
#include <queue>
#include <string>
#include <tuple>

#include "hrpb/error.hpp"

namespace hrpb {

namespace {

void require_width(const BinaryStore& store, const BinaryEmbedding& query) {
  if (query.width() != store.width()) {
    throw ShapeError("query width " + std::to_string(query.width()) +
                     " does not match store width " +
                     std::to_string(store.width()));
  }
}

// (distance, id, position): position makes ordering total even when
// external ids collide.
using Candidate = std::tuple<std::uint32_t, std::uint64_t, std::size_t>;

std::vector<SearchHit> to_hits(std::vector<Candidate> candidates) {
  std::sort(candidates.begin(), candidates.end());
  std::vector<SearchHit> hits;
  hits.reserve(candidates.size());
  for (const auto& [distance, id, pos] : candidates) {
    hits.push_back(SearchHit{id, distance});
  }
  return hits;
}

}  // namespace

std::vector<SearchHit> knn(const BinaryStore& store,
                           const BinaryEmbedding& query, std::size_t k) {
  require_width(store, query);
  if (k == 0 || store.empty()) return {};

  // Max-heap of the k best candidates seen so far; a new candidate enters
  // only when it beats the current worst.
  std::priority_queue<Candidate> heap;
  const std::uint8_t* q = query.bytes().data();
  const std::size_t code_bytes = store.code_bytes();

  for (std::size_t i = 0; i < store.size(); ++i) {
    const auto distance = static_cast<std::uint32_t>(
        hamming_bytes(q, store.code(i), code_bytes));
    Candidate c{distance, store.id(i), i};
    if (heap.size() < k) {
      heap.push(c);
    } else if (c < heap.top()) {
      heap.pop();
      heap.push(c);
    }
  }

  std::vector<Candidate> candidates;
  candidates.reserve(heap.size());
  while (!heap.empty()) {
    candidates.push_back(heap.top());
    heap.pop();
  }
  return to_hits(std::move(candidates));
}

std::vector<SearchHit> range_search(const BinaryStore& store,
                                    const BinaryEmbedding& query,
                                    std::uint32_t radius) {
  require_width(store, query);
  std::vector<Candidate> candidates;
  const std::uint8_t* q = query.bytes().data();
  const std::size_t code_bytes = store.code_bytes();

  for (std::size_t i = 0; i < store.size(); ++i) {
    const auto distance = static_cast<std::uint32_t>(
        hamming_bytes(q, store.code(i), code_bytes));
    if (distance <= radius) {
      candidates.emplace_back(distance, store.id(i), i);
    }
  }
  return to_hits(std::move(candidates));
}

}  // namespace hrpb
