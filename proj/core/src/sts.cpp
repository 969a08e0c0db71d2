#include "hrpb/eval/sts.hpp"

#include <string>
#include <vector>

#include "hrpb/binary_vector.hpp"
#include "hrpb/error.hpp"
#include "hrpb/similarity.hpp"

namespace hrpb::eval {

StsResult sts_eval(std::span<const FloatEmbedding> a,
                   std::span<const FloatEmbedding> b,
                   std::span<const double> gold,
                   const CompressionConfig& config) {
  if (a.size() != b.size() || a.size() != gold.size()) {
    throw ShapeError("pair/gold length mismatch: " + std::to_string(a.size()) +
                     " vs " + std::to_string(b.size()) + " vs " +
                     std::to_string(gold.size()));
  }
  if (a.size() < 2) {
    throw InvalidArgumentError("need at least two pairs");
  }
  config.validate();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].dim() != config.source_dim || b[i].dim() != config.source_dim) {
      throw ShapeError("pair " + std::to_string(i) +
                       " does not match source dimension " +
                       std::to_string(config.source_dim));
    }
  }

  std::vector<double> float_scores(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    float_scores[i] = cosine(a[i], b[i]);
  }

  std::vector<double> binary_scores(a.size());
  if (config.method == Method::sigmoid) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      binary_scores[i] =
          estimate_cosine(sigmoid_quantize(a[i]), sigmoid_quantize(b[i]));
    }
  } else {
    const ProjectionMatrix w(config.seed, config.source_dim,
                             config.target_bits);
    for (std::size_t i = 0; i < a.size(); ++i) {
      binary_scores[i] =
          estimate_cosine(hrp_quantize(a[i], w), hrp_quantize(b[i], w));
    }
  }

  StsResult result;
  result.rho_float = spearman(float_scores, gold);
  result.rho_binary = spearman(binary_scores, gold);
  return result;
}

}  // namespace hrpb::eval
