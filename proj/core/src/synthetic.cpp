#include "hrpb/synthetic.hpp"

#include <cmath>
#include <numbers>

#include "hrpb/error.hpp"

namespace hrpb::synthetic {

namespace {

constexpr std::uint64_t kCorpusSalt = 0x636f7270;
constexpr std::uint64_t kPairDirectionSalt = 0x70616972;
constexpr std::uint64_t kPairAngleSalt = 0x616e676c;
constexpr std::uint64_t kBlobSalt = 0x626c6f62;

// Gaussian direction of unit length, in doubles.
std::vector<double> unit_direction(std::uint32_t dim,
                                   GaussianSampler& gaussian) {
  std::vector<double> v(dim);
  for (;;) {
    double ss = 0.0;
    for (auto& x : v) {
      x = gaussian.next();
      ss += x * x;
    }
    if (ss > 1e-24) {
      const double inv = 1.0 / std::sqrt(ss);
      for (auto& x : v) x *= inv;
      return v;
    }
  }
}

FloatEmbedding to_embedding(const std::vector<double>& v) {
  std::vector<float> f(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) f[i] = static_cast<float>(v[i]);
  return FloatEmbedding(std::move(f));
}

}  // namespace

std::vector<FloatEmbedding> gaussian_corpus(std::uint32_t dim,
                                            std::size_t count,
                                            std::uint64_t seed) {
  if (dim == 0) throw InvalidArgumentError("dimension must be positive");
  GaussianSampler gaussian(mix_seed(seed, kCorpusSalt));
  std::vector<FloatEmbedding> out;
  out.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    std::vector<float> values(dim);
    for (auto& v : values) v = static_cast<float>(gaussian.next());
    out.emplace_back(std::move(values));
  }
  return out;
}

AngledPair pair_with_angle(std::uint32_t dim, double angle,
                           GaussianSampler& gaussian) {
  if (dim < 2) {
    throw InvalidArgumentError("angled pairs need dimension >= 2");
  }
  if (!(angle >= 0.0) || angle > std::numbers::pi) {
    throw InvalidArgumentError("angle must lie in [0, pi]");
  }

  const std::vector<double> a = unit_direction(dim, gaussian);

  // Orthonormalize a second direction against a; retry on the measure-zero
  // event that it is parallel.
  std::vector<double> w(dim);
  for (;;) {
    std::vector<double> g = unit_direction(dim, gaussian);
    double dot = 0.0;
    for (std::uint32_t i = 0; i < dim; ++i) dot += g[i] * a[i];
    double ss = 0.0;
    for (std::uint32_t i = 0; i < dim; ++i) {
      w[i] = g[i] - dot * a[i];
      ss += w[i] * w[i];
    }
    if (ss > 1e-24) {
      const double inv = 1.0 / std::sqrt(ss);
      for (auto& x : w) x *= inv;
      break;
    }
  }

  const double c = std::cos(angle);
  const double s = std::sin(angle);
  std::vector<double> b(dim);
  for (std::uint32_t i = 0; i < dim; ++i) b[i] = c * a[i] + s * w[i];

  AngledPair pair{to_embedding(a), to_embedding(b), angle, c};
  return pair;
}

std::vector<AngledPair> angled_pairs(std::uint32_t dim, std::size_t count,
                                     std::uint64_t seed) {
  GaussianSampler gaussian(mix_seed(seed, kPairDirectionSalt));
  Xoshiro256PlusPlus angles(mix_seed(seed, kPairAngleSalt));
  std::vector<AngledPair> out;
  out.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    const double angle = angles.uniform() * std::numbers::pi;
    out.push_back(pair_with_angle(dim, angle, gaussian));
  }
  return out;
}

eval::Dataset gaussian_blobs(std::uint32_t dim, std::size_t classes,
                             std::size_t per_class, double separation,
                             std::uint64_t seed) {
  if (dim == 0) throw InvalidArgumentError("dimension must be positive");
  if (classes < 2) throw InvalidArgumentError("need at least two classes");
  if (per_class == 0) throw InvalidArgumentError("need points per class");
  if (!(separation >= 0.0)) {
    throw InvalidArgumentError("separation must be non-negative");
  }

  GaussianSampler gaussian(mix_seed(seed, kBlobSalt));

  std::vector<std::vector<double>> centers;
  centers.reserve(classes);
  for (std::size_t k = 0; k < classes; ++k) {
    std::vector<double> c = unit_direction(dim, gaussian);
    for (auto& x : c) x *= separation;
    centers.push_back(std::move(c));
  }

  const std::size_t n = classes * per_class;
  std::vector<float> features;
  features.reserve(n * dim);
  std::vector<std::int32_t> labels;
  labels.reserve(n);

  for (std::size_t k = 0; k < classes; ++k) {
    for (std::size_t p = 0; p < per_class; ++p) {
      for (std::uint32_t i = 0; i < dim; ++i) {
        features.push_back(
            static_cast<float>(centers[k][i] + gaussian.next()));
      }
      labels.push_back(static_cast<std::int32_t>(k));
    }
  }
  return eval::Dataset(std::move(features), dim, std::move(labels));
}

}  // namespace hrpb::synthetic
