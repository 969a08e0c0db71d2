#include "hrpb/store.hpp"

#include <cstring>
#include <string>

#include "hrpb/error.hpp"

namespace hrpb {

namespace {

std::uint8_t padding_mask(std::uint32_t width) noexcept {
  const unsigned rem = width % 8;
  return rem == 0 ? 0u : static_cast<std::uint8_t>(~((1u << rem) - 1u));
}

}  // namespace

BinaryStore::BinaryStore(CompressionConfig config,
                         std::span<const BinaryEmbedding> codes,
                         std::vector<std::uint64_t> ids)
    : config_(config),
      count_(codes.size()),
      code_bytes_(packed_size(config.target_bits)),
      ids_(std::move(ids)) {
  config_.validate();
  if (!ids_.empty() && ids_.size() != count_) {
    throw ShapeError("id count " + std::to_string(ids_.size()) +
                     " does not match code count " + std::to_string(count_));
  }
  payload_.resize(count_ * code_bytes_);
  for (std::size_t i = 0; i < count_; ++i) {
    if (codes[i].width() != config_.target_bits) {
      throw ShapeError("code " + std::to_string(i) + " has width " +
                       std::to_string(codes[i].width()) + ", expected " +
                       std::to_string(config_.target_bits));
    }
    std::memcpy(payload_.data() + i * code_bytes_, codes[i].bytes().data(),
                code_bytes_);
  }
}

BinaryStore::BinaryStore(CompressionConfig config,
                         std::vector<std::uint8_t> payload, std::uint64_t count,
                         std::vector<std::uint64_t> ids)
    : config_(config),
      payload_(std::move(payload)),
      count_(static_cast<std::size_t>(count)),
      code_bytes_(packed_size(config.target_bits)),
      ids_(std::move(ids)) {
  config_.validate();
  if (!ids_.empty() && ids_.size() != count_) {
    throw ShapeError("id count " + std::to_string(ids_.size()) +
                     " does not match code count " + std::to_string(count_));
  }
  if (payload_.size() != count_ * code_bytes_) {
    throw ShapeError("payload of " + std::to_string(payload_.size()) +
                     " bytes does not hold " + std::to_string(count_) +
                     " codes of " + std::to_string(code_bytes_) + " bytes");
  }
  validate_payload();
}

void BinaryStore::validate_payload() const {
  const std::uint8_t mask = padding_mask(config_.target_bits);
  if (mask == 0) return;
  for (std::size_t i = 0; i < count_; ++i) {
    if ((code(i)[code_bytes_ - 1] & mask) != 0) {
      throw CorruptionError("nonzero padding bits in code " +
                            std::to_string(i));
    }
  }
}

BinaryEmbedding BinaryStore::embedding(std::size_t i) const {
  std::vector<std::uint8_t> bytes(code(i), code(i) + code_bytes_);
  return BinaryEmbedding(std::move(bytes), config_.target_bits);
}

}  // namespace hrpb
