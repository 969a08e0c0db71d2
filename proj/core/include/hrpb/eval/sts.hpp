#pragma once

#include <span>

#include "hrpb/embedding.hpp"
#include "hrpb/projection.hpp"

namespace hrpb::eval {

struct StsResult {
  double rho_float = 0.0;   // spearman(cosine(a_i, b_i), gold)
  double rho_binary = 0.0;  // spearman(estimate_cosine of quantized pairs, gold)
};

// Similarity-benchmark evaluation: how well do float cosines, and Hamming
// estimates over codes quantized under `config`, rank-correlate with the
// gold scores? Both sides of a pair go through the same projection matrix.
StsResult sts_eval(std::span<const FloatEmbedding> a,
                   std::span<const FloatEmbedding> b,
                   std::span<const double> gold,
                   const CompressionConfig& config);

}  // namespace hrpb::eval
