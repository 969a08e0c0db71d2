#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hrpb/binary_vector.hpp"
#include "hrpb/projection.hpp"

namespace hrpb {

// Immutable collection of equally wide binary codes plus the config that
// produced them. Codes live in one contiguous payload, count * code_bytes()
// bytes, each code obeying the zero-padding rule. Ids are optional external
// identifiers; when absent, code i has id i.
class BinaryStore {
 public:
  // From individual codes; every width must equal config.target_bits.
  BinaryStore(CompressionConfig config, std::span<const BinaryEmbedding> codes,
              std::vector<std::uint64_t> ids = {});

  // From a raw payload of count contiguous codes (the storage path).
  // Validates payload length and per-code padding.
  BinaryStore(CompressionConfig config, std::vector<std::uint8_t> payload,
              std::uint64_t count, std::vector<std::uint64_t> ids = {});

  std::size_t size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }
  std::uint32_t width() const noexcept { return config_.target_bits; }
  std::size_t code_bytes() const noexcept { return code_bytes_; }
  const CompressionConfig& config() const noexcept { return config_; }
  std::span<const std::uint8_t> payload() const noexcept { return payload_; }

  const std::uint8_t* code(std::size_t i) const noexcept {
    return payload_.data() + i * code_bytes_;
  }
  BinaryEmbedding embedding(std::size_t i) const;
  std::uint64_t id(std::size_t i) const noexcept {
    return ids_.empty() ? static_cast<std::uint64_t>(i) : ids_[i];
  }

  friend bool operator==(const BinaryStore&, const BinaryStore&) = default;

 private:
  void validate_payload() const;

  CompressionConfig config_;
  std::vector<std::uint8_t> payload_;
  std::size_t count_ = 0;
  std::size_t code_bytes_ = 0;
  std::vector<std::uint64_t> ids_;
};

}  // namespace hrpb
