#include "hrpb/binary_vector.hpp"

#include <bit>
#include <cstring>
#include <string>

namespace hrpb {

namespace {

// Mask selecting the payload bits of the final byte; 0xFF when the width
// fills it completely.
std::uint8_t last_byte_mask(std::uint32_t width) noexcept {
  const unsigned rem = width % 8;
  return rem == 0 ? 0xFFu : static_cast<std::uint8_t>((1u << rem) - 1u);
}

}  // namespace

std::vector<std::uint8_t> pack_bits(std::span<const std::uint8_t> bits) {
  std::vector<std::uint8_t> packed(packed_size(bits.size()), 0u);
  for (std::size_t j = 0; j < bits.size(); ++j) {
    const std::uint8_t b = bits[j];
    if (b > 1u) {
      throw InvalidArgumentError("bit " + std::to_string(j) +
                                 " is not 0 or 1");
    }
    packed[j / 8] |= static_cast<std::uint8_t>(b << (j % 8));
  }
  return packed;
}

std::vector<std::uint8_t> unpack_bits(std::span<const std::uint8_t> bytes,
                                      std::size_t bit_count) {
  if (bytes.size() != packed_size(bit_count)) {
    throw ShapeError("packed length " + std::to_string(bytes.size()) +
                     " does not hold " + std::to_string(bit_count) + " bits");
  }
  std::vector<std::uint8_t> bits(bit_count);
  for (std::size_t j = 0; j < bit_count; ++j) {
    bits[j] = (bytes[j / 8] >> (j % 8)) & 1u;
  }
  return bits;
}

std::size_t hamming_bytes(const std::uint8_t* a, const std::uint8_t* b,
                          std::size_t byte_count) noexcept {
  std::size_t distance = 0;
  std::size_t i = 0;
  for (; i + 8 <= byte_count; i += 8) {
    std::uint64_t wa, wb;
    std::memcpy(&wa, a + i, 8);
    std::memcpy(&wb, b + i, 8);
    distance += static_cast<std::size_t>(std::popcount(wa ^ wb));
  }
  if (i < byte_count) {
    std::uint64_t wa = 0, wb = 0;
    std::memcpy(&wa, a + i, byte_count - i);
    std::memcpy(&wb, b + i, byte_count - i);
    distance += static_cast<std::size_t>(std::popcount(wa ^ wb));
  }
  return distance;
}

BinaryEmbedding::BinaryEmbedding(std::vector<std::uint8_t> packed,
                                 std::uint32_t width)
    : packed_(std::move(packed)), width_(width) {
  if (width_ == 0) {
    throw InvalidArgumentError("binary embedding width must be positive");
  }
  if (packed_.size() != packed_size(width_)) {
    throw ShapeError("packed length " + std::to_string(packed_.size()) +
                     " does not hold " + std::to_string(width_) + " bits");
  }
  if ((packed_.back() & ~last_byte_mask(width_)) != 0) {
    throw CorruptionError("nonzero padding bits in final byte");
  }
}

BinaryEmbedding BinaryEmbedding::from_bits(std::span<const std::uint8_t> bits) {
  if (bits.empty()) {
    throw InvalidArgumentError("binary embedding width must be positive");
  }
  return BinaryEmbedding(pack_bits(bits),
                         static_cast<std::uint32_t>(bits.size()));
}

bool BinaryEmbedding::bit(std::uint32_t j) const {
  if (j >= width_) {
    throw InvalidArgumentError("bit index " + std::to_string(j) +
                               " out of range for width " +
                               std::to_string(width_));
  }
  return ((packed_[j / 8] >> (j % 8)) & 1u) != 0;
}

std::vector<std::uint8_t> BinaryEmbedding::to_bits() const {
  return unpack_bits(packed_, width_);
}

BinaryEmbedding BinaryEmbedding::complement() const {
  std::vector<std::uint8_t> flipped(packed_.size());
  for (std::size_t i = 0; i < packed_.size(); ++i) {
    flipped[i] = static_cast<std::uint8_t>(~packed_[i]);
  }
  flipped.back() &= last_byte_mask(width_);
  return BinaryEmbedding(std::move(flipped), width_);
}

std::uint32_t hamming(const BinaryEmbedding& a, const BinaryEmbedding& b) {
  if (a.width() != b.width()) {
    throw ShapeError("width mismatch: " + std::to_string(a.width()) +
                     " vs " + std::to_string(b.width()));
  }
  return static_cast<std::uint32_t>(
      hamming_bytes(a.bytes().data(), b.bytes().data(), a.byte_count()));
}

}  // namespace hrpb
