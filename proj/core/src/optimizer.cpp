#include "hrpb/eval/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hrpb/error.hpp"

namespace hrpb::eval {

namespace {

void check_sizes(std::vector<double>& state, std::span<double> params,
                 std::span<const double> grads) {
  if (params.size() != grads.size()) {
    throw ShapeError("parameter count " + std::to_string(params.size()) +
                     " does not match gradient count " +
                     std::to_string(grads.size()));
  }
  if (state.empty()) {
    state.assign(params.size(), 0.0);
  } else if (state.size() != params.size()) {
    throw ShapeError("optimizer state holds " + std::to_string(state.size()) +
                     " entries, step got " + std::to_string(params.size()));
  }
}

}  // namespace

Optimizer::~Optimizer() = default;

const char* optimizer_name(OptimizerKind kind) noexcept {
  return kind == OptimizerKind::rmsprop ? "rmsprop" : "amsgrad";
}

RmsProp::RmsProp(double learning_rate, double decay, double epsilon)
    : lr_(learning_rate), decay_(decay), eps_(epsilon) {
  if (learning_rate < 0.0) {
    throw InvalidArgumentError("learning rate must be non-negative");
  }
  if (decay < 0.0 || decay >= 1.0) {
    throw InvalidArgumentError("decay must lie in [0, 1)");
  }
}

void RmsProp::step(std::span<double> params, std::span<const double> grads) {
  check_sizes(v_, params, grads);
  for (std::size_t i = 0; i < params.size(); ++i) {
    const double g = grads[i];
    v_[i] = decay_ * v_[i] + (1.0 - decay_) * g * g;
    params[i] -= lr_ * g / (std::sqrt(v_[i]) + eps_);
  }
}

AmsGrad::AmsGrad(double learning_rate, double beta1, double beta2,
                 double epsilon)
    : lr_(learning_rate), beta1_(beta1), beta2_(beta2), eps_(epsilon) {
  if (learning_rate < 0.0) {
    throw InvalidArgumentError("learning rate must be non-negative");
  }
  if (beta1 < 0.0 || beta1 >= 1.0 || beta2 < 0.0 || beta2 >= 1.0) {
    throw InvalidArgumentError("betas must lie in [0, 1)");
  }
}

void AmsGrad::step(std::span<double> params, std::span<const double> grads) {
  check_sizes(v_, params, grads);
  if (m_.empty()) m_.assign(params.size(), 0.0);
  if (vhat_.empty()) vhat_.assign(params.size(), 0.0);
  for (std::size_t i = 0; i < params.size(); ++i) {
    const double g = grads[i];
    m_[i] = beta1_ * m_[i] + (1.0 - beta1_) * g;
    v_[i] = beta2_ * v_[i] + (1.0 - beta2_) * g * g;
    vhat_[i] = std::max(vhat_[i], v_[i]);
    params[i] -= lr_ * m_[i] / (std::sqrt(vhat_[i]) + eps_);
  }
}

std::unique_ptr<Optimizer> make_optimizer(OptimizerKind kind,
                                          double learning_rate) {
  if (kind == OptimizerKind::rmsprop) {
    return std::make_unique<RmsProp>(learning_rate);
  }
  return std::make_unique<AmsGrad>(learning_rate);
}

}  // namespace hrpb::eval
