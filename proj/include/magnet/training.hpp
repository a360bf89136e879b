#pragma once

#include "magnet/features.hpp"
#include "magnet/network.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace magnet {

struct Sample {
  FeatureMatrix f;  // N x dim nodal forces, N
  FeatureMatrix u;  // N x dim nodal displacements, m
};

struct Dataset {
  std::uint64_t mesh_digest = 0;
  std::size_t nodes = 0;
  std::size_t dim = 2;
  std::vector<Sample> samples;
  // Filled by split_dataset: indices into `samples`.
  std::vector<std::size_t> train;
  std::vector<std::size_t> test;
  double split_ratio = 0.0;

  std::size_t size() const { return samples.size(); }
};

// Seeded random permutation; first floor(ratio * M) samples train, the
// rest test. Throws ArgumentError for ratio outside (0, 1) or M < 2.
Dataset split_dataset(std::vector<Sample> samples, double ratio, std::uint64_t seed, std::uint64_t mesh_digest = 0);
// Assigns train/test in place on an existing dataset.
void split_in_place(Dataset &dataset, double ratio, std::uint64_t seed);

// Header `N dim M_total mesh_digest`, then one line per sample with
// 2 * N * dim values (forces then displacements), %.17e.
void write_dataset(std::ostream &out, const Dataset &dataset);
void write_dataset_file(const std::string &path, const Dataset &dataset);
Dataset read_dataset(std::istream &in);
Dataset read_dataset_file(const std::string &path);

struct LossAndGradient {
  double loss = 0.0;
  std::vector<double> gradient;
};

// L = (1/B) sum_m ||G(f_m) - u_m||^2, squared Euclidean norm over all dofs.
LossAndGradient mse_loss(const Model &model, std::span<const Sample *const> batch);
double mse_loss_value(const Model &model, std::span<const Sample *const> batch);

struct AdamState {
  std::vector<double> m;
  std::vector<double> v;
  std::uint64_t t = 0;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-7;

  explicit AdamState(std::size_t size = 0) : m(size, 0.0), v(size, 0.0) {}
};

// m <- b1 m + (1-b1) g, v <- b2 v + (1-b2) g^2,
// theta <- theta - lr * m_hat / (sqrt(v_hat) + eps).
// Throws TrainingError (state untouched) on a non-finite gradient.
void adam_step(AdamState &state, std::span<double> theta, std::span<const double> grad, double lr);

struct TrainConfig {
  int batch_size = 4;
  double lr_start = 1e-4;
  double lr_end = 1e-6;
  int epochs = 100;
  std::uint64_t seed = 0;
  bool double_precision = true;
  int epoch_budget = 0;  // epochs to run in one call; 0 runs to `epochs`

  void validate() const;
};

// Linear decay over optimizer steps: step 0 uses lr_start, the last one lr_end.
double scheduled_lr(const TrainConfig &config, std::uint64_t step, std::uint64_t total_steps);

struct EpochRecord {
  int epoch = 0;
  double mean_loss = 0.0;  // sample-weighted mean of the batch loss
  double lr = 0.0;         // learning rate of the epoch's last step
};

struct TrainReport {
  std::vector<EpochRecord> epochs;
  std::uint64_t steps = 0;
  std::uint64_t total_steps = 0;
};

// Everything needed to continue a run: optimizer state and position.
struct TrainState {
  AdamState adam;
  std::uint64_t step = 0;
  int epoch = 0;
  std::uint64_t total_steps = 0;
};

void save_train_state(std::ostream &out, const TrainState &state);
TrainState load_train_state(std::istream &in);

using EpochCallback = std::function<void(const EpochRecord &)>;

// Shuffled mini-batches over dataset.train for config.epochs epochs.
// Throws UsageError when the dataset is bound to another mesh digest
// (expected_digest != 0) and TrainingError on a non-finite loss.
TrainReport train(Model &model, const Dataset &dataset, const TrainConfig &config, std::uint64_t expected_digest = 0,
                  TrainState *state = nullptr, const EpochCallback &on_epoch = {});

void write_train_report(std::ostream &out, const TrainReport &report);

} // namespace magnet
