#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hrpb/binary_vector.hpp"
#include "hrpb/embedding.hpp"

namespace hrpb {

// Quantization method. Values are the on-disk tags, do not reorder.
enum class Method : std::uint8_t {
  hrp = 0,      // seeded random projection, then sign
  sigmoid = 1,  // per-coordinate sign, width preserved
};

const char* method_name(Method m) noexcept;

// Everything needed to reproduce a compression run.
struct CompressionConfig {
  Method method = Method::hrp;
  std::uint32_t source_dim = 0;
  std::uint32_t target_bits = 0;
  std::uint64_t seed = 0;

  // Throws InvalidArgumentError unless dimensions are positive and, for
  // the sigmoid method, target_bits == source_dim.
  void validate() const;

  friend bool operator==(const CompressionConfig&,
                         const CompressionConfig&) = default;
};

// Gaussian projection matrix, row-major source_dim x target_bits. Entries
// are a pure function of (seed, source_dim, target_bits): the fixed
// generator chain in rng.hpp fills the matrix in row-major order, so equal
// arguments give bit-identical matrices.
class ProjectionMatrix {
 public:
  ProjectionMatrix(std::uint64_t seed, std::uint32_t source_dim,
                   std::uint32_t target_bits);

  std::uint32_t source_dim() const noexcept { return source_dim_; }
  std::uint32_t target_bits() const noexcept { return target_bits_; }
  std::uint64_t seed() const noexcept { return seed_; }

  std::span<const float> entries() const noexcept { return entries_; }

  // Row i: the target_bits weights applied to source coordinate i.
  const float* row(std::uint32_t i) const noexcept {
    return entries_.data() + static_cast<std::size_t>(i) * target_bits_;
  }

 private:
  std::vector<float> entries_;
  std::uint32_t source_dim_;
  std::uint32_t target_bits_;
  std::uint64_t seed_;
};

ProjectionMatrix init_projection(std::uint64_t seed, std::uint32_t source_dim,
                                 std::uint32_t target_bits);

// Unit step with H(0) = 1. Ties at zero always quantize to 1; -0.0 compares
// equal to zero, so it lands on 1 as well. NaN is rejected.
int heaviside(double z);

// x * W with 64-bit accumulation, returned as doubles.
std::vector<double> project(const FloatEmbedding& x, const ProjectionMatrix& w);

// heaviside(project(...)), packed.
BinaryEmbedding hrp_quantize(const FloatEmbedding& x, const ProjectionMatrix& w);

// bit i = (x_i >= 0); width equals the source dimension.
BinaryEmbedding sigmoid_quantize(const FloatEmbedding& x);

// Quantizes a batch under one config, building the projection matrix once.
// Every input must match config.source_dim; a mismatch names the offending
// index. Output order matches input order.
std::vector<BinaryEmbedding> batch_quantize(std::span<const FloatEmbedding> xs,
                                            const CompressionConfig& config);

}  // namespace hrpb
