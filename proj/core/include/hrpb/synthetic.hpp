#pragma once

#include <cstdint>
#include <vector>

#include "hrpb/embedding.hpp"
#include "hrpb/eval/dataset.hpp"
#include "hrpb/rng.hpp"

namespace hrpb::synthetic {

// Deterministic synthetic inputs for experiments and tests. Each generator
// salts its stream, so a corpus and a projection built from the same user
// seed stay statistically independent.

// count i.i.d. standard-normal embeddings of the given dimension.
std::vector<FloatEmbedding> gaussian_corpus(std::uint32_t dim,
                                            std::size_t count,
                                            std::uint64_t seed);

// Unit-vector pair with a prescribed angle, plus that angle's exact values.
struct AngledPair {
  FloatEmbedding a;
  FloatEmbedding b;
  double angle = 0.0;   // radians
  double cosine = 0.0;  // cos(angle)
};

// a is a random Gaussian direction; b = cos(angle)*a + sin(angle)*w for a
// unit vector w drawn orthogonal to a. Requires dim >= 2.
AngledPair pair_with_angle(std::uint32_t dim, double angle,
                           GaussianSampler& gaussian);

// Pairs whose angles are uniform on (0, pi): similarity spread over the
// whole range, the regime similarity benchmarks operate in.
std::vector<AngledPair> angled_pairs(std::uint32_t dim, std::size_t count,
                                     std::uint64_t seed);

// Linearly separable classification data with noise: each class center sits
// at distance `separation` from the origin along its own random direction,
// and points scatter around centers with unit Gaussian noise per coordinate.
// Rows are grouped by class; rows [k*per_class, (k+1)*per_class) have label k.
eval::Dataset gaussian_blobs(std::uint32_t dim, std::size_t classes,
                             std::size_t per_class, double separation,
                             std::uint64_t seed);

}  // namespace hrpb::synthetic
