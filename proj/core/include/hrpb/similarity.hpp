#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hrpb/binary_vector.hpp"
#include "hrpb/embedding.hpp"
#include "hrpb/projection.hpp"

namespace hrpb {

// Exact cosine similarity, accumulated in doubles and clamped to [-1, 1].
// A zero vector has no direction and is rejected.
double cosine(const FloatEmbedding& a, const FloatEmbedding& b);

// Angle estimate from packed codes: pi * hamming(a, b) / width, in radians.
// For sign quantization the expected value is the true angle between the
// source vectors, which is what makes Hamming distance a similarity proxy.
double estimate_angle(const BinaryEmbedding& a, const BinaryEmbedding& b);

// cos(estimate_angle(a, b)).
double estimate_cosine(const BinaryEmbedding& a, const BinaryEmbedding& b);

// Ranks with ties broken by averaging (1-based; the mean of the positions
// a tied run occupies).
std::vector<double> average_ranks(std::span<const double> values);

// Spearman rank correlation with average ranks for ties. Requires equal
// lengths, at least two observations, finite values, and variation in both
// sequences; a constant sequence has no defined rank correlation.
double spearman(std::span<const double> xs, std::span<const double> ys);

// Storage cost of a binary code relative to the 32-bit float embedding it
// replaces: rate = binary_bits / (32 * source_dim). Sigmoid codes keep the
// source width, so their rate is always 1/32.
struct MemoryReport {
  std::uint32_t source_dim = 0;
  std::uint32_t binary_bits = 0;
  double rate = 0.0;
  double reduction_percent = 0.0;  // 100 * (1 - rate)
};

MemoryReport memory_consumption_rate(std::uint32_t source_dim,
                                     std::uint32_t binary_bits, Method method);

}  // namespace hrpb
