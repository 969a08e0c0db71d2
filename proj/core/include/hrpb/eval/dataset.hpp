#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hrpb/binary_vector.hpp"
#include "hrpb/embedding.hpp"
#include "hrpb/error.hpp"

namespace hrpb::eval {

// Row-major feature matrix with integer class labels. Class count is
// max(label) + 1; construction requires at least two classes, every class
// present at least once, and at least as many rows as classes.
class Dataset {
 public:
  Dataset(std::vector<float> features, std::size_t dim,
          std::vector<std::int32_t> labels)
      : features_(std::move(features)),
        labels_(std::move(labels)),
        dim_(dim) {
    if (dim_ == 0) throw InvalidArgumentError("feature dimension must be positive");
    if (labels_.empty()) throw InvalidArgumentError("dataset has no rows");
    if (features_.size() != labels_.size() * dim_) {
      throw ShapeError("feature matrix of " + std::to_string(features_.size()) +
                       " values does not hold " + std::to_string(labels_.size()) +
                       " rows of dimension " + std::to_string(dim_));
    }
    std::int32_t max_label = 0;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i] < 0) {
        throw InvalidArgumentError("negative label at row " + std::to_string(i));
      }
      if (labels_[i] > max_label) max_label = labels_[i];
    }
    classes_ = static_cast<std::size_t>(max_label) + 1;
    if (classes_ < 2) throw InvalidArgumentError("need at least two classes");
    if (labels_.size() < classes_) {
      throw InvalidArgumentError("fewer rows than classes");
    }
    std::vector<bool> seen(classes_, false);
    for (const std::int32_t y : labels_) seen[static_cast<std::size_t>(y)] = true;
    for (std::size_t c = 0; c < classes_; ++c) {
      if (!seen[c]) {
        throw InvalidArgumentError("class " + std::to_string(c) +
                                   " has no examples");
      }
    }
  }

  static Dataset from_embeddings(std::span<const FloatEmbedding> xs,
                                 std::vector<std::int32_t> labels) {
    if (xs.empty()) throw InvalidArgumentError("dataset has no rows");
    std::vector<float> features;
    features.reserve(xs.size() * xs[0].dim());
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (xs[i].dim() != xs[0].dim()) {
        throw ShapeError("embedding " + std::to_string(i) +
                         " has dimension " + std::to_string(xs[i].dim()) +
                         ", expected " + std::to_string(xs[0].dim()));
      }
      features.insert(features.end(), xs[i].values().begin(),
                      xs[i].values().end());
    }
    return Dataset(std::move(features), xs[0].dim(), std::move(labels));
  }

  // Binary codes enter the classifier as {0.0, 1.0} features.
  static Dataset from_binary(std::span<const BinaryEmbedding> codes,
                             std::vector<std::int32_t> labels) {
    if (codes.empty()) throw InvalidArgumentError("dataset has no rows");
    std::vector<float> features;
    features.reserve(codes.size() * codes[0].width());
    for (std::size_t i = 0; i < codes.size(); ++i) {
      if (codes[i].width() != codes[0].width()) {
        throw ShapeError("code " + std::to_string(i) + " has width " +
                         std::to_string(codes[i].width()) + ", expected " +
                         std::to_string(codes[0].width()));
      }
      for (std::uint32_t j = 0; j < codes[i].width(); ++j) {
        features.push_back(codes[i].bit(j) ? 1.0f : 0.0f);
      }
    }
    return Dataset(std::move(features), codes[0].width(), std::move(labels));
  }

  std::size_t rows() const noexcept { return labels_.size(); }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t num_classes() const noexcept { return classes_; }

  const float* row(std::size_t i) const noexcept {
    return features_.data() + i * dim_;
  }
  std::int32_t label(std::size_t i) const noexcept { return labels_[i]; }
  std::span<const float> features() const noexcept { return features_; }
  std::span<const std::int32_t> labels() const noexcept { return labels_; }

 private:
  std::vector<float> features_;
  std::vector<std::int32_t> labels_;
  std::size_t dim_ = 0;
  std::size_t classes_ = 0;
};

}  // namespace hrpb::eval
