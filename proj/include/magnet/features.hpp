#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace magnet {

// Nodal features for a batch of samples: values[(s * nodes + i) * channels + b].
// A single sample is a batch of one.
struct FeatureMatrix {
  std::size_t batch = 1;
  std::size_t nodes = 0;
  std::size_t channels = 0;
  std::vector<double> values;

  FeatureMatrix() = default;
  FeatureMatrix(std::size_t n, std::size_t c) : FeatureMatrix(1, n, c) {}
  FeatureMatrix(std::size_t b, std::size_t n, std::size_t c)
      : batch(b), nodes(n), channels(c), values(b * n * c, 0.0) {}

  double &operator()(std::size_t i, std::size_t ch) { return values[i * channels + ch]; }
  double operator()(std::size_t i, std::size_t ch) const { return values[i * channels + ch]; }
  double &at(std::size_t s, std::size_t i, std::size_t ch) { return values[(s * nodes + i) * channels + ch]; }
  double at(std::size_t s, std::size_t i, std::size_t ch) const { return values[(s * nodes + i) * channels + ch]; }

  std::span<double> row(std::size_t s, std::size_t i) { return {values.data() + (s * nodes + i) * channels, channels}; }
  std::span<const double> row(std::size_t s, std::size_t i) const {
    return {values.data() + (s * nodes + i) * channels, channels};
  }
  std::span<double> sample(std::size_t s) { return {values.data() + s * nodes * channels, nodes * channels}; }
  std::span<const double> sample(std::size_t s) const {
    return {values.data() + s * nodes * channels, nodes * channels};
  }

  bool same_shape(const FeatureMatrix &o) const {
    return batch == o.batch && nodes == o.nodes && channels == o.channels;
  }
  bool all_finite() const;
};

// Stacks single-sample matrices of identical shape into one batch.
FeatureMatrix stack(std::span<const FeatureMatrix *const> samples);
FeatureMatrix slice(const FeatureMatrix &batch, std::size_t s);

} // namespace magnet
