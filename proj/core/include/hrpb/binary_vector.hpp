#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hrpb/error.hpp"

namespace hrpb {

// Bit layout used everywhere in this library: bit j of a width-w vector is
// stored at byte j / 8, bit position j % 8 (LSB first). The final byte of a
// vector whose width is not a multiple of 8 is padded with zero bits; that
// padding is an invariant, not a suggestion, because Hamming distances are
// computed on whole words.

inline constexpr std::size_t packed_size(std::size_t bit_count) noexcept {
  return (bit_count + 7) / 8;
}

// Packs a sequence of 0/1 values into bytes, LSB first, zero padding.
std::vector<std::uint8_t> pack_bits(std::span<const std::uint8_t> bits);

// Inverse of pack_bits. bytes.size() must equal packed_size(bit_count).
std::vector<std::uint8_t> unpack_bits(std::span<const std::uint8_t> bytes,
                                      std::size_t bit_count);

// Number of differing bits between two equally long byte ranges.
std::size_t hamming_bytes(const std::uint8_t* a, const std::uint8_t* b,
                          std::size_t byte_count) noexcept;

// Bit-packed binary embedding of known width.
class BinaryEmbedding {
 public:
  // Takes ownership of packed bytes. Verifies the byte count matches the
  // width and that every padding bit is zero.
  BinaryEmbedding(std::vector<std::uint8_t> packed, std::uint32_t width);

  // Packs a 0/1 sequence; width becomes bits.size().
  static BinaryEmbedding from_bits(std::span<const std::uint8_t> bits);

  std::uint32_t width() const noexcept { return width_; }
  std::span<const std::uint8_t> bytes() const noexcept { return packed_; }
  std::size_t byte_count() const noexcept { return packed_.size(); }

  bool bit(std::uint32_t j) const;
  std::vector<std::uint8_t> to_bits() const;

  // Same width, every bit flipped, padding still zero.
  BinaryEmbedding complement() const;

  friend bool operator==(const BinaryEmbedding&, const BinaryEmbedding&) = default;

 private:
  std::vector<std::uint8_t> packed_;
  std::uint32_t width_;
};

// Hamming distance between two embeddings of equal width.
std::uint32_t hamming(const BinaryEmbedding& a, const BinaryEmbedding& b);

}  // namespace hrpb
