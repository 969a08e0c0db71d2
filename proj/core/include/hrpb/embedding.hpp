#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hrpb/error.hpp"

namespace hrpb {

// Dense 32-bit float embedding. Construction validates once (positive
// dimension, every entry finite), so downstream code can assume both.
class FloatEmbedding {
 public:
  explicit FloatEmbedding(std::vector<float> values) : values_(std::move(values)) {
    if (values_.empty()) {
      throw InvalidArgumentError("embedding dimension must be positive");
    }
    if (values_.size() > std::numeric_limits<std::uint32_t>::max()) {
      throw InvalidArgumentError("embedding dimension exceeds 32-bit range");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (!std::isfinite(values_[i])) {
        throw InvalidArgumentError("embedding entry " + std::to_string(i) +
                                   " is not finite");
      }
    }
  }

  std::uint32_t dim() const noexcept {
    return static_cast<std::uint32_t>(values_.size());
  }
  std::span<const float> values() const noexcept { return values_; }
  const float* data() const noexcept { return values_.data(); }
  float operator[](std::size_t i) const noexcept { return values_[i]; }

  friend bool operator==(const FloatEmbedding&, const FloatEmbedding&) = default;

 private:
  std::vector<float> values_;
};

}  // namespace hrpb
