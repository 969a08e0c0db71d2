#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "hrpb/embedding.hpp"
#include "hrpb/error.hpp"
#include "hrpb/projection.hpp"
#include "hrpb/rng.hpp"
#include "hrpb/synthetic.hpp"

using namespace hrpb;

namespace {

// Projection matrix with hand-picked entries, bypassing the seeded fill.
// ProjectionMatrix is always generator-filled, so hand examples go through
// project() with a matrix whose entries we recompute and compare against a
// direct naive product instead.
std::vector<double> naive_project(const FloatEmbedding& x,
                                  const ProjectionMatrix& w) {
  std::vector<double> out(w.target_bits(), 0.0);
  for (std::uint32_t j = 0; j < w.target_bits(); ++j) {
    double acc = 0.0;
    for (std::uint32_t i = 0; i < w.source_dim(); ++i) {
      acc += static_cast<double>(x[i]) * static_cast<double>(w.row(i)[j]);
    }
    out[j] = acc;
  }
  return out;
}

}  // namespace

TEST_CASE("heaviside is 1 at and above zero, 0 below") {
  CHECK(heaviside(0.3) == 1);
  CHECK(heaviside(0.0) == 1);
  CHECK(heaviside(-0.0) == 1);
  CHECK(heaviside(-1e-300) == 0);
  CHECK(heaviside(-2.5) == 0);
  CHECK(heaviside(std::numeric_limits<double>::infinity()) == 1);
  CHECK(heaviside(-std::numeric_limits<double>::infinity()) == 0);
  CHECK_THROWS_AS(heaviside(std::numeric_limits<double>::quiet_NaN()),
                  InvalidArgumentError);
}

TEST_CASE("projection matrix entries look standard normal") {
  const ProjectionMatrix w(42, 500, 500);
  double sum = 0.0, sum_sq = 0.0;
  for (const float v : w.entries()) {
    sum += v;
    sum_sq += static_cast<double>(v) * v;
  }
  const double n = 500.0 * 500.0;
  const double mean = sum / n;
  const double var = sum_sq / n - mean * mean;
  CHECK(std::abs(mean) < 0.011);
  CHECK(var > 0.9);
  CHECK(var < 1.1);
}

TEST_CASE("projection matrix is a pure function of its arguments") {
  const ProjectionMatrix a(7, 32, 64);
  const ProjectionMatrix b(7, 32, 64);
  REQUIRE(a.entries().size() == b.entries().size());
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    CHECK(a.entries()[i] == b.entries()[i]);
  }

  // A different seed, source_dim, or target_bits changes the entries.
  const ProjectionMatrix c(8, 32, 64);
  bool differs = false;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    differs = differs || (a.entries()[i] != c.entries()[i]);
  }
  CHECK(differs);
}

TEST_CASE("row pointers view the row-major entry buffer") {
  const ProjectionMatrix w(1, 3, 5);
  for (std::uint32_t i = 0; i < 3; ++i) {
    for (std::uint32_t j = 0; j < 5; ++j) {
      CHECK(w.row(i)[j] == w.entries()[i * 5 + j]);
    }
  }
}

TEST_CASE("project matches a naive double-precision product") {
  GaussianSampler noise(5);
  const ProjectionMatrix w(9, 24, 40);
  std::vector<float> values(24);
  for (auto& v : values) v = static_cast<float>(noise.next());
  const FloatEmbedding x(values);

  const auto fast = project(x, w);
  const auto slow = naive_project(x, w);
  REQUIRE(fast.size() == slow.size());
  for (std::size_t j = 0; j < fast.size(); ++j) {
    CHECK(fast[j] == doctest::Approx(slow[j]).epsilon(1e-12));
  }
}

TEST_CASE("projection of known 2x1 and 3x2 systems") {
  // z_j = sum_i x_i * w_ij with hand-checked numbers. The seeded matrix
  // cannot hold chosen entries, so verify through the accumulation routine
  // indirectly: a two-coordinate input against a 1-bit matrix must land on
  // x0*w00 + x1*w10 exactly (one fused-free double accumulation).
  const ProjectionMatrix w(3, 2, 1);
  const FloatEmbedding x(std::vector<float>{0.5f, 0.2f});
  const auto z = project(x, w);
  REQUIRE(z.size() == 1);
  // The inputs are floats; the oracle must widen the same stored values
  // (0.2f != 0.2 once widened to double).
  const double expected =
      static_cast<double>(0.5f) * static_cast<double>(w.row(0)[0]) +
      static_cast<double>(0.2f) * static_cast<double>(w.row(1)[0]);
  CHECK(z[0] == expected);
}

TEST_CASE("project rejects dimension mismatches") {
  const ProjectionMatrix w(3, 4, 8);
  const FloatEmbedding x(std::vector<float>{1.f, 2.f, 3.f});
  CHECK_THROWS_AS((void)project(x, w), ShapeError);
}

TEST_CASE("hrp codes of x and -x are complements") {
  // Gaussian projections are almost surely nonzero, so the sign of every
  // z_j flips with the input and the two codes disagree in every bit.
  GaussianSampler noise(21);
  const ProjectionMatrix w(11, 16, 64);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<float> values(16);
    for (auto& v : values) v = static_cast<float>(noise.next());
    const FloatEmbedding x(values);
    std::vector<float> negated(16);
    for (std::size_t i = 0; i < 16; ++i) negated[i] = -values[i];
    const FloatEmbedding nx(negated);

    const auto cx = hrp_quantize(x, w);
    const auto cnx = hrp_quantize(nx, w);
    CHECK(hamming(cx, cnx) == 64);
    CHECK(cx.complement() == cnx);
  }
}

TEST_CASE("hrp codes are invariant under positive scaling") {
  GaussianSampler noise(22);
  const ProjectionMatrix w(12, 16, 96);
  std::vector<float> values(16);
  for (auto& v : values) v = static_cast<float>(noise.next());
  const FloatEmbedding x(values);
  const auto base = hrp_quantize(x, w);

  for (const float c : {0.001f, 0.5f, 3.0f, 1000.0f}) {
    std::vector<float> scaled(16);
    for (std::size_t i = 0; i < 16; ++i) scaled[i] = c * values[i];
    CHECK(hrp_quantize(FloatEmbedding(scaled), w) == base);
  }
}

TEST_CASE("sigmoid quantization thresholds each coordinate at zero") {
  const FloatEmbedding x(std::vector<float>{0.0f, -1.0f, 2.0f});
  const auto code = sigmoid_quantize(x);
  CHECK(code.width() == 3);
  CHECK(code.to_bits() == std::vector<std::uint8_t>{1, 0, 1});
  // -0.0f >= 0 holds, so it quantizes to 1 like +0.0f.
  const auto zero = sigmoid_quantize(FloatEmbedding(std::vector<float>{-0.0f}));
  CHECK(zero.bit(0) == 1);
}

TEST_CASE("batch quantization equals per-vector quantization") {
  GaussianSampler noise(23);
  const CompressionConfig config{Method::hrp, 16, 40, 77};
  std::vector<FloatEmbedding> xs;
  for (int i = 0; i < 3; ++i) {
    std::vector<float> values(16);
    for (auto& v : values) v = static_cast<float>(noise.next());
    xs.emplace_back(values);
  }

  const auto batch = batch_quantize(xs, config);
  REQUIRE(batch.size() == 3);
  const ProjectionMatrix w(77, 16, 40);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    CHECK(batch[i] == hrp_quantize(xs[i], w));
  }

  const CompressionConfig sig{Method::sigmoid, 16, 16, 77};
  const auto sigs = batch_quantize(xs, sig);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    CHECK(sigs[i] == sigmoid_quantize(xs[i]));
  }
}

TEST_CASE("batch quantization names the first mismatched input") {
  const CompressionConfig config{Method::hrp, 4, 8, 1};
  std::vector<FloatEmbedding> xs{
      FloatEmbedding(std::vector<float>{1, 2, 3, 4}),
      FloatEmbedding(std::vector<float>{1, 2, 3}),
  };
  CHECK_THROWS_WITH_AS((void)batch_quantize(xs, config),
                       doctest::Contains("embedding 1"), ShapeError);
}

TEST_CASE("config validation rejects bad shapes") {
  CHECK_THROWS_AS((CompressionConfig{Method::hrp, 0, 8, 1}.validate()),
                  InvalidArgumentError);
  CHECK_THROWS_AS((CompressionConfig{Method::hrp, 8, 0, 1}.validate()),
                  InvalidArgumentError);
  CHECK_THROWS_AS((CompressionConfig{Method::sigmoid, 8, 16, 1}.validate()),
                  InvalidArgumentError);
  CHECK_NOTHROW((CompressionConfig{Method::sigmoid, 8, 8, 1}.validate()));
  CHECK_NOTHROW((CompressionConfig{Method::hrp, 768, 256, 0}.validate()));
}

TEST_CASE("embeddings reject non-finite coordinates by index") {
  CHECK_THROWS_WITH_AS(
      FloatEmbedding(std::vector<float>{
          1.0f, std::numeric_limits<float>::quiet_NaN(), 2.0f}),
      doctest::Contains("entry 1"), InvalidArgumentError);
  CHECK_THROWS_AS(FloatEmbedding(std::vector<float>{
                      std::numeric_limits<float>::infinity()}),
                  InvalidArgumentError);
  CHECK_THROWS_AS(FloatEmbedding(std::vector<float>{}), InvalidArgumentError);
}

TEST_CASE("method names match the on-disk vocabulary") {
  CHECK(std::string(method_name(Method::hrp)) == "hrp");
  CHECK(std::string(method_name(Method::sigmoid)) == "sigmoid");
}
