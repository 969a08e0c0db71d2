#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "hrpb/embedding.hpp"
#include "hrpb/store.hpp"

namespace hrpb::io {

// On-disk container for binary codes. Little-endian throughout:
//   bytes  0..3   magic "HRPB"
//   bytes  4..5   format version (u16, currently 1)
//   byte   6      method (u8: 0 = hrp, 1 = sigmoid)
//   bytes  7..10  source dimension d_s (u32)
//   bytes 11..14  code width d_t in bits (u32)
//   bytes 15..22  projection seed (u64)
//   bytes 23..30  code count (u64)
// followed by count payloads of ceil(d_t/8) bytes, LSB-first bit order.
inline constexpr std::uint16_t kHrpbVersion = 1;
inline constexpr std::size_t kHrpbHeaderSize = 31;

// fvecs interchange: repeated records of (u32 dimension, dimension f32
// values), all little-endian, every record sharing one dimension.

// Decodes an fvecs file in record order. Empty file decodes to an empty
// sequence. Inconsistent dimensions, a zero dimension, or a truncated
// record raise ParseError carrying the byte offset.
std::vector<FloatEmbedding> read_fvecs(const std::filesystem::path& path);

// Encodes embeddings (which must share one dimension) and returns the byte
// count written: count * 4 * (dim + 1).
std::uint64_t write_fvecs(const std::filesystem::path& path,
                          std::span<const FloatEmbedding> xs);

// One vector per line, decimal values separated by spaces or tabs; blank
// lines and lines starting with '#' are skipped.
std::vector<FloatEmbedding> read_vectors_text(const std::filesystem::path& path);

// Dispatches on extension: ".fvecs" binary, anything else text.
std::vector<FloatEmbedding> read_vectors(const std::filesystem::path& path);

// One decimal score per line (same blank/comment rules).
std::vector<double> read_scalars_text(const std::filesystem::path& path);

// One integer label per line (same blank/comment rules).
std::vector<std::int32_t> read_labels_text(const std::filesystem::path& path);

void write_hrpb(const std::filesystem::path& path, const BinaryStore& store);
BinaryStore read_hrpb(const std::filesystem::path& path);

}  // namespace hrpb::io
