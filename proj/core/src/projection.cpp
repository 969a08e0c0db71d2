#include "hrpb/projection.hpp"

#include <cmath>
#include <string>

#include "hrpb/error.hpp"
#include "hrpb/rng.hpp"

namespace hrpb {

namespace {

// acc[j] = sum_i x[i] * w[i][j], accumulated in doubles, i ascending.
// The accumulation order is part of the reproducibility contract.
void project_into(const float* x, const ProjectionMatrix& w, double* acc) {
  const std::uint32_t target = w.target_bits();
  for (std::uint32_t j = 0; j < target; ++j) acc[j] = 0.0;
  for (std::uint32_t i = 0; i < w.source_dim(); ++i) {
    const double xi = static_cast<double>(x[i]);
    const float* row = w.row(i);
    for (std::uint32_t j = 0; j < target; ++j) {
      acc[j] += xi * static_cast<double>(row[j]);
    }
  }
}

// Packs signs straight from the accumulator; z >= 0 maps to 1.
std::vector<std::uint8_t> pack_signs(const double* acc, std::uint32_t width) {
  std::vector<std::uint8_t> packed(packed_size(width), 0u);
  for (std::uint32_t j = 0; j < width; ++j) {
    if (acc[j] >= 0.0) {
      packed[j / 8] |= static_cast<std::uint8_t>(1u << (j % 8));
    }
  }
  return packed;
}

}  // namespace

const char* method_name(Method m) noexcept {
  return m == Method::hrp ? "hrp" : "sigmoid";
}

void CompressionConfig::validate() const {
  if (source_dim == 0) {
    throw InvalidArgumentError("source dimension must be positive");
  }
  if (target_bits == 0) {
    throw InvalidArgumentError("target width must be positive");
  }
  if (method == Method::sigmoid && target_bits != source_dim) {
    throw InvalidArgumentError(
        "sigmoid quantization preserves width: target_bits " +
        std::to_string(target_bits) + " != source_dim " +
        std::to_string(source_dim));
  }
}

ProjectionMatrix::ProjectionMatrix(std::uint64_t seed,
                                   std::uint32_t source_dim,
                                   std::uint32_t target_bits)
    : source_dim_(source_dim), target_bits_(target_bits), seed_(seed) {
  if (source_dim == 0 || target_bits == 0) {
    throw InvalidArgumentError("projection dimensions must be positive");
  }
  const std::size_t total =
      static_cast<std::size_t>(source_dim) * target_bits;
  entries_.resize(total);
  GaussianSampler gaussian(seed);
  for (std::size_t k = 0; k < total; ++k) {
    entries_[k] = static_cast<float>(gaussian.next());
  }
}

ProjectionMatrix init_projection(std::uint64_t seed, std::uint32_t source_dim,
                                 std::uint32_t target_bits) {
  return ProjectionMatrix(seed, source_dim, target_bits);
}

int heaviside(double z) {
  if (std::isnan(z)) {
    throw InvalidArgumentError("heaviside is undefined for NaN");
  }
  return z >= 0.0 ? 1 : 0;
}

std::vector<double> project(const FloatEmbedding& x, const ProjectionMatrix& w) {
  if (x.dim() != w.source_dim()) {
    throw ShapeError("embedding dimension " + std::to_string(x.dim()) +
                     " does not match projection source dimension " +
                     std::to_string(w.source_dim()));
  }
  std::vector<double> acc(w.target_bits());
  project_into(x.data(), w, acc.data());
  return acc;
}

BinaryEmbedding hrp_quantize(const FloatEmbedding& x,
                             const ProjectionMatrix& w) {
  if (x.dim() != w.source_dim()) {
    throw ShapeError("embedding dimension " + std::to_string(x.dim()) +
                     " does not match projection source dimension " +
                     std::to_string(w.source_dim()));
  }
  std::vector<double> acc(w.target_bits());
  project_into(x.data(), w, acc.data());
  return BinaryEmbedding(pack_signs(acc.data(), w.target_bits()),
                         w.target_bits());
}

BinaryEmbedding sigmoid_quantize(const FloatEmbedding& x) {
  const std::uint32_t width = x.dim();
  std::vector<std::uint8_t> packed(packed_size(width), 0u);
  for (std::uint32_t j = 0; j < width; ++j) {
    if (x[j] >= 0.0f) {
      packed[j / 8] |= static_cast<std::uint8_t>(1u << (j % 8));
    }
  }
  return BinaryEmbedding(std::move(packed), width);
}

std::vector<BinaryEmbedding> batch_quantize(std::span<const FloatEmbedding> xs,
                                            const CompressionConfig& config) {
  config.validate();
  std::vector<BinaryEmbedding> out;
  out.reserve(xs.size());

  for (std::size_t n = 0; n < xs.size(); ++n) {
    if (xs[n].dim() != config.source_dim) {
      throw ShapeError("embedding " + std::to_string(n) + " has dimension " +
                       std::to_string(xs[n].dim()) + ", expected " +
                       std::to_string(config.source_dim));
    }
  }

  if (config.method == Method::sigmoid) {
    for (const FloatEmbedding& x : xs) out.push_back(sigmoid_quantize(x));
    return out;
  }

  const ProjectionMatrix w(config.seed, config.source_dim, config.target_bits);
  std::vector<double> acc(config.target_bits);
  for (const FloatEmbedding& x : xs) {
    project_into(x.data(), w, acc.data());
    out.emplace_back(pack_signs(acc.data(), config.target_bits),
                     config.target_bits);
  }
  return out;
}

}  // namespace hrpb
