#pragma once

// Shared fixtures for the test binaries: a self-cleaning temp directory and
// small independent oracles the fast paths are checked against.

#include <unistd.h>

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "hrpb/binary_vector.hpp"
#include "hrpb/rng.hpp"

namespace testutil {

class TempDir {
 public:
  TempDir() {
    const auto base = std::filesystem::temp_directory_path();
    for (int i = 0;; ++i) {
      path_ = base / ("hrpb_test_" + std::to_string(::getpid()) + "_" +
                      std::to_string(counter_++) + "_" + std::to_string(i));
      std::error_code ec;
      if (std::filesystem::create_directory(path_, ec)) break;
    }
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::filesystem::path file(const std::string& name) const {
    return path_ / name;
  }
  const std::filesystem::path& path() const { return path_; }

 private:
  static inline int counter_ = 0;
  std::filesystem::path path_;
};

inline std::vector<std::uint8_t> read_file_bytes(
    const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::vector<std::uint8_t>(std::istreambuf_iterator<char>(in),
                                   std::istreambuf_iterator<char>());
}

inline void write_file_bytes(const std::filesystem::path& p,
                             const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
}

// Bit-at-a-time Hamming distance: the oracle the word-popcount kernel must
// agree with.
inline std::size_t naive_hamming(const hrpb::BinaryEmbedding& a,
                                 const hrpb::BinaryEmbedding& b) {
  std::size_t d = 0;
  for (std::uint32_t j = 0; j < a.width(); ++j) {
    d += (a.bit(j) != b.bit(j)) ? 1 : 0;
  }
  return d;
}

// from_bits takes a span, which a braced literal cannot bind to; this
// forwarder keeps short hand-written codes readable at call sites.
inline hrpb::BinaryEmbedding make_code(
    std::initializer_list<std::uint8_t> bits) {
  return hrpb::BinaryEmbedding::from_bits(
      std::span<const std::uint8_t>(bits.begin(), bits.size()));
}

inline std::vector<std::uint8_t> random_bits(std::size_t n,
                                             hrpb::Xoshiro256PlusPlus& rng) {
  std::vector<std::uint8_t> bits(n);
  for (auto& b : bits) b = static_cast<std::uint8_t>(rng.next() & 1u);
  return bits;
}

inline hrpb::BinaryEmbedding random_code(std::uint32_t width,
                                         hrpb::Xoshiro256PlusPlus& rng) {
  return hrpb::BinaryEmbedding::from_bits(random_bits(width, rng));
}

}  // namespace testutil
