#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace hrpb::eval {

enum class OptimizerKind : std::uint8_t { rmsprop, amsgrad };

const char* optimizer_name(OptimizerKind kind) noexcept;

// Stateful elementwise parameter updater. State is sized on the first step;
// every later call must pass spans of the same length.
class Optimizer {
 public:
  virtual ~Optimizer();
  virtual void step(std::span<double> params, std::span<const double> grads) = 0;
};

// v <- decay*v + (1-decay)*g^2 ;  p <- p - lr * g / (sqrt(v) + eps)
class RmsProp final : public Optimizer {
 public:
  explicit RmsProp(double learning_rate, double decay = 0.9,
                   double epsilon = 1e-8);
  void step(std::span<double> params, std::span<const double> grads) override;

  std::span<const double> second_moment() const noexcept { return v_; }

 private:
  double lr_, decay_, eps_;
  std::vector<double> v_;
};

// m <- b1*m + (1-b1)*g ;  v <- b2*v + (1-b2)*g^2 ;  vhat <- max(vhat, v) ;
// p <- p - lr * m / (sqrt(vhat) + eps). No bias correction: the running
// maximum replaces it in the original formulation.
class AmsGrad final : public Optimizer {
 public:
  explicit AmsGrad(double learning_rate, double beta1 = 0.9,
                   double beta2 = 0.999, double epsilon = 1e-8);
  void step(std::span<double> params, std::span<const double> grads) override;

  std::span<const double> max_second_moment() const noexcept { return vhat_; }

 private:
  double lr_, beta1_, beta2_, eps_;
  std::vector<double> m_, v_, vhat_;
};

std::unique_ptr<Optimizer> make_optimizer(OptimizerKind kind,
                                          double learning_rate);

}  // namespace hrpb::eval
