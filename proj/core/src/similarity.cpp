#include "hrpb/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "hrpb/error.hpp"

namespace hrpb {

double cosine(const FloatEmbedding& a, const FloatEmbedding& b) {
  if (a.dim() != b.dim()) {
    throw ShapeError("dimension mismatch: " + std::to_string(a.dim()) +
                     " vs " + std::to_string(b.dim()));
  }
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::uint32_t i = 0; i < a.dim(); ++i) {
    const double ai = a[i];
    const double bi = b[i];
    dot += ai * bi;
    na += ai * ai;
    nb += bi * bi;
  }
  if (na == 0.0 || nb == 0.0) {
    throw InvalidArgumentError("cosine similarity of a zero vector");
  }
  return std::clamp(dot / (std::sqrt(na) * std::sqrt(nb)), -1.0, 1.0);
}

double estimate_angle(const BinaryEmbedding& a, const BinaryEmbedding& b) {
  const double h = hamming(a, b);
  return std::numbers::pi * h / static_cast<double>(a.width());
}

double estimate_cosine(const BinaryEmbedding& a, const BinaryEmbedding& b) {
  return std::cos(estimate_angle(a, b));
}

std::vector<double> average_ranks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) {
                     return values[i] < values[j];
                   });

  std::vector<double> ranks(n);
  std::size_t run_start = 0;
  while (run_start < n) {
    std::size_t run_end = run_start + 1;
    while (run_end < n &&
           values[order[run_end]] == values[order[run_start]]) {
      ++run_end;
    }
    // Positions run_start+1 .. run_end (1-based) share their mean rank.
    const double mean_rank =
        (static_cast<double>(run_start + 1) + static_cast<double>(run_end)) /
        2.0;
    for (std::size_t k = run_start; k < run_end; ++k) {
      ranks[order[k]] = mean_rank;
    }
    run_start = run_end;
  }
  return ranks;
}

double spearman(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw ShapeError("length mismatch: " + std::to_string(xs.size()) +
                     " vs " + std::to_string(ys.size()));
  }
  const std::size_t n = xs.size();
  if (n < 2) {
    throw InvalidArgumentError("rank correlation needs at least two pairs");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(xs[i]) || !std::isfinite(ys[i])) {
      throw InvalidArgumentError("rank correlation input " +
                                 std::to_string(i) + " is not finite");
    }
  }

  const std::vector<double> rx = average_ranks(xs);
  const std::vector<double> ry = average_ranks(ys);

  const double mean = (static_cast<double>(n) + 1.0) / 2.0;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = rx[i] - mean;
    const double dy = ry[i] - mean;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw UndefinedCorrelationError(
        "rank correlation is undefined for a constant sequence");
  }
  return std::clamp(sxy / (std::sqrt(sxx) * std::sqrt(syy)), -1.0, 1.0);
}

MemoryReport memory_consumption_rate(std::uint32_t source_dim,
                                     std::uint32_t binary_bits,
                                     Method method) {
  if (source_dim == 0 || binary_bits == 0) {
    throw InvalidArgumentError("dimensions must be positive");
  }
  if (method == Method::sigmoid && binary_bits != source_dim) {
    throw InvalidArgumentError(
        "sigmoid codes keep the source width: " + std::to_string(binary_bits) +
        " != " + std::to_string(source_dim));
  }
  MemoryReport report;
  report.source_dim = source_dim;
  report.binary_bits = binary_bits;
  report.rate = static_cast<double>(binary_bits) /
                (32.0 * static_cast<double>(source_dim));
  report.reduction_percent = 100.0 * (1.0 - report.rate);
  return report;
}

}  // namespace hrpb
