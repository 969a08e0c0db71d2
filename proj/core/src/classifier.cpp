#include "hrpb/eval/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "hrpb/error.hpp"
#include "hrpb/rng.hpp"

namespace hrpb::eval {

namespace {

// Salts for the independent seeded streams used here.
constexpr std::uint64_t kBatchShuffleSalt = 0x62617463;  // minibatch order
constexpr std::uint64_t kFoldShuffleSalt = 0x666f6c64;   // fold assignment

void require_rows(const Dataset& data, std::span<const std::uint32_t> rows) {
  if (rows.empty()) {
    throw InvalidArgumentError("row selection is empty");
  }
  for (const std::uint32_t r : rows) {
    if (r >= data.rows()) {
      throw InvalidArgumentError("row index " + std::to_string(r) +
                                 " out of range");
    }
  }
}

void require_dim(const LinearModel& model, std::size_t dim) {
  if (model.dim != dim) {
    throw ShapeError("model expects dimension " + std::to_string(model.dim) +
                     ", got " + std::to_string(dim));
  }
}

// Writes softmax(z) over z into probs and returns log(sum(exp(z))), both
// computed max-shifted for stability.
double softmax_into(std::span<const double> z, std::span<double> probs) {
  const double zmax = *std::max_element(z.begin(), z.end());
  double sum = 0.0;
  for (std::size_t c = 0; c < z.size(); ++c) {
    probs[c] = std::exp(z[c] - zmax);
    sum += probs[c];
  }
  for (std::size_t c = 0; c < z.size(); ++c) probs[c] /= sum;
  return zmax + std::log(sum);
}

void logits_into(const LinearModel& model, const float* x,
                 std::span<double> z) {
  const std::size_t C = model.classes;
  for (std::size_t c = 0; c < C; ++c) z[c] = model.bias[c];
  for (std::size_t d = 0; d < model.dim; ++d) {
    const double xd = static_cast<double>(x[d]);
    if (xd == 0.0) continue;
    const double* wrow = model.weights.data() + d * C;
    for (std::size_t c = 0; c < C; ++c) z[c] += xd * wrow[c];
  }
}

double l2_penalty(const LinearModel& model, double l2) {
  if (l2 == 0.0) return 0.0;
  double ss = 0.0;
  for (const double w : model.weights) ss += w * w;
  return 0.5 * l2 * ss;
}

// Runs the minibatch loop, invoking on_epoch(model, epoch) after each
// epoch's updates and divergence check; a false return stops training.
template <typename EpochFn>
LinearModel train_loop(const Dataset& data, std::span<const std::uint32_t> rows,
                       const TrainConfig& cfg, EpochFn on_epoch) {
  cfg.validate();
  require_rows(data, rows);

  LinearModel model = LinearModel::zeros(data.dim(), data.num_classes());
  auto opt_w = make_optimizer(cfg.optimizer, cfg.learning_rate);
  auto opt_b = make_optimizer(cfg.optimizer, cfg.learning_rate);

  std::vector<std::uint32_t> order(rows.begin(), rows.end());
  Xoshiro256PlusPlus shuffle_rng(mix_seed(cfg.seed, kBatchShuffleSalt));

  for (std::size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
    seeded_shuffle(order, shuffle_rng);
    for (std::size_t start = 0; start < order.size();
         start += cfg.batch_size) {
      const std::size_t len = std::min(cfg.batch_size, order.size() - start);
      const std::span<const std::uint32_t> batch(order.data() + start, len);
      const Gradient g = gradient_of_loss(model, data, batch, cfg.l2);
      opt_w->step(model.weights, g.weights);
      opt_b->step(model.bias, g.bias);
    }
    const double epoch_loss = loss(model, data, rows, cfg.l2);
    if (!std::isfinite(epoch_loss)) {
      throw TrainingDivergedError("training loss is not finite", epoch);
    }
    if (!on_epoch(model, epoch)) break;
  }
  return model;
}

}  // namespace

TrainConfig TrainConfig::senteval() {
  TrainConfig cfg;
  cfg.optimizer = OptimizerKind::rmsprop;
  cfg.batch_size = 128;
  cfg.tenacity = 3;
  cfg.epochs = 2;
  cfg.folds = 5;
  return cfg;
}

TrainConfig TrainConfig::seeg() {
  TrainConfig cfg;
  cfg.optimizer = OptimizerKind::amsgrad;
  cfg.batch_size = 128;
  cfg.epochs = 500;
  // A bad streak can never exceed the epoch count, so no fold stops early.
  cfg.tenacity = 500;
  cfg.folds = 5;
  return cfg;
}

void TrainConfig::validate() const {
  if (batch_size == 0) throw InvalidArgumentError("batch size must be positive");
  if (epochs == 0) throw InvalidArgumentError("epoch count must be positive");
  if (folds < 2) throw InvalidArgumentError("fold count must be at least 2");
  if (!(learning_rate >= 0.0) || !std::isfinite(learning_rate)) {
    throw InvalidArgumentError("learning rate must be finite and non-negative");
  }
  if (!(l2 >= 0.0) || !std::isfinite(l2)) {
    throw InvalidArgumentError("l2 must be finite and non-negative");
  }
}

LinearModel LinearModel::zeros(std::size_t dim, std::size_t classes) {
  if (dim == 0 || classes < 2) {
    throw InvalidArgumentError("model needs positive dimension and >= 2 classes");
  }
  LinearModel m;
  m.dim = dim;
  m.classes = classes;
  m.weights.assign(dim * classes, 0.0);
  m.bias.assign(classes, 0.0);
  return m;
}

std::vector<double> logits(const LinearModel& model, std::span<const float> x) {
  require_dim(model, x.size());
  std::vector<double> z(model.classes);
  logits_into(model, x.data(), z);
  return z;
}

std::int32_t predict(const LinearModel& model, std::span<const float> x) {
  const std::vector<double> z = logits(model, x);
  std::size_t best = 0;
  for (std::size_t c = 1; c < z.size(); ++c) {
    if (z[c] > z[best]) best = c;
  }
  return static_cast<std::int32_t>(best);
}

double loss(const LinearModel& model, const Dataset& data,
            std::span<const std::uint32_t> rows, double l2) {
  require_dim(model, data.dim());
  require_rows(data, rows);
  const std::size_t C = model.classes;
  std::vector<double> z(C), probs(C);
  double total = 0.0;
  for (const std::uint32_t r : rows) {
    logits_into(model, data.row(r), z);
    const double lse = softmax_into(z, probs);
    total += lse - z[static_cast<std::size_t>(data.label(r))];
  }
  return total / static_cast<double>(rows.size()) + l2_penalty(model, l2);
}

Gradient gradient_of_loss(const LinearModel& model, const Dataset& data,
                          std::span<const std::uint32_t> rows, double l2) {
  require_dim(model, data.dim());
  require_rows(data, rows);
  const std::size_t C = model.classes;
  const std::size_t D = model.dim;

  Gradient g;
  g.weights.assign(D * C, 0.0);
  g.bias.assign(C, 0.0);

  std::vector<double> z(C), probs(C);
  for (const std::uint32_t r : rows) {
    const float* x = data.row(r);
    logits_into(model, x, z);
    softmax_into(z, probs);
    probs[static_cast<std::size_t>(data.label(r))] -= 1.0;
    for (std::size_t c = 0; c < C; ++c) g.bias[c] += probs[c];
    for (std::size_t d = 0; d < D; ++d) {
      const double xd = static_cast<double>(x[d]);
      if (xd == 0.0) continue;
      double* grow = g.weights.data() + d * C;
      for (std::size_t c = 0; c < C; ++c) grow[c] += xd * probs[c];
    }
  }

  const double scale = 1.0 / static_cast<double>(rows.size());
  for (double& v : g.bias) v *= scale;
  if (l2 == 0.0) {
    for (double& v : g.weights) v *= scale;
  } else {
    for (std::size_t k = 0; k < g.weights.size(); ++k) {
      g.weights[k] = g.weights[k] * scale + l2 * model.weights[k];
    }
  }
  return g;
}

double accuracy(const LinearModel& model, const Dataset& data,
                std::span<const std::uint32_t> rows) {
  require_dim(model, data.dim());
  require_rows(data, rows);
  std::size_t correct = 0;
  std::vector<double> z(model.classes);
  for (const std::uint32_t r : rows) {
    logits_into(model, data.row(r), z);
    std::size_t best = 0;
    for (std::size_t c = 1; c < z.size(); ++c) {
      if (z[c] > z[best]) best = c;
    }
    if (static_cast<std::int32_t>(best) == data.label(r)) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(rows.size());
}

LinearModel train(const Dataset& data, std::span<const std::uint32_t> rows,
                  const TrainConfig& cfg) {
  return train_loop(data, rows, cfg, [](const LinearModel&, std::size_t) {
    return true;
  });
}

LinearModel train(const Dataset& data, const TrainConfig& cfg) {
  std::vector<std::uint32_t> rows(data.rows());
  std::iota(rows.begin(), rows.end(), 0u);
  return train(data, rows, cfg);
}

CrossValidationResult cross_validate(const Dataset& data,
                                     const TrainConfig& cfg) {
  cfg.validate();
  const std::size_t n = data.rows();
  if (cfg.folds > n) {
    throw InvalidArgumentError("fold count " + std::to_string(cfg.folds) +
                               " exceeds row count " + std::to_string(n));
  }

  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  Xoshiro256PlusPlus fold_rng(mix_seed(cfg.seed, kFoldShuffleSalt));
  seeded_shuffle(order, fold_rng);

  CrossValidationResult result;
  result.fold_accuracies.reserve(cfg.folds);

  for (std::size_t f = 0; f < cfg.folds; ++f) {
    const std::size_t begin = f * n / cfg.folds;
    const std::size_t end = (f + 1) * n / cfg.folds;

    std::vector<std::uint32_t> heldout(order.begin() + begin,
                                       order.begin() + end);
    std::vector<std::uint32_t> train_rows;
    train_rows.reserve(n - heldout.size());
    train_rows.insert(train_rows.end(), order.begin(), order.begin() + begin);
    train_rows.insert(train_rows.end(), order.begin() + end, order.end());

    std::vector<bool> seen(data.num_classes(), false);
    for (const std::uint32_t r : train_rows) {
      seen[static_cast<std::size_t>(data.label(r))] = true;
    }
    for (std::size_t c = 0; c < seen.size(); ++c) {
      if (!seen[c]) {
        result.warnings.push_back("fold " + std::to_string(f) +
                                  ": training split lacks class " +
                                  std::to_string(c));
      }
    }

    double best = -std::numeric_limits<double>::infinity();
    std::size_t bad_streak = 0;
    train_loop(data, train_rows, cfg,
               [&](const LinearModel& model, std::size_t) {
                 const double acc = accuracy(model, data, heldout);
                 if (acc > best) {
                   best = acc;
                   bad_streak = 0;
                 } else {
                   ++bad_streak;
                 }
                 return bad_streak <= cfg.tenacity;
               });
    result.fold_accuracies.push_back(best);
  }

  result.mean_accuracy =
      std::accumulate(result.fold_accuracies.begin(),
                      result.fold_accuracies.end(), 0.0) /
      static_cast<double>(result.fold_accuracies.size());
  return result;
}

}  // namespace hrpb::eval
