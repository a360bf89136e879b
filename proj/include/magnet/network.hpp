#pragma once

#include "magnet/layers.hpp"
#include "magnet/pooling.hpp"

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace magnet {

struct ModelConfig {
  int num_poolings = 3;
  int mags_per_level = 2;
  int bottleneck_mags = -1;         // < 0: same as mags_per_level
  int window_power = 2;             // MAg windows use A^k of each level
  std::vector<int> channels_per_level{16, 32, 64, 128};
  int in_channels = 2;
  int out_channels = 2;
  double leaky_slope = 0.3;
  PoolAggregator aggregator = PoolAggregator::max;
  int pooling_trials = 1000;

  int bottleneck() const { return bottleneck_mags < 0 ? mags_per_level : bottleneck_mags; }
  // Throws ArgumentError on any violated invariant.
  void validate() const;
};

struct MagStep {
  MagLayer layer;
  std::size_t offset;  // into Model::theta
  int level;
};
struct PoolStep {
  int level;  // pools graph level `level` into `level + 1`; its input is the skip tensor
};
struct UnpoolConcatStep {
  int level;  // unpools `level + 1` into `level`, then appends the skip tensor of `level`
  std::size_t unpooled_channels;
};
using LayerStep = std::variant<MagStep, PoolStep, UnpoolConcatStep>;

// Graph U-Net:
//   [MAg x m, pool] x L, MAg x m_b, [unpool + concat, MAg x m] x L, MAg(linear)
class Model {
public:
  ModelConfig config;
  PoolPlan plan;
  std::vector<std::shared_ptr<const Neighborhoods>> windows;  // one per graph level
  std::vector<LayerStep> layers;
  std::vector<double> theta;

  std::size_t input_nodes() const { return plan.nodes_at(0); }
  std::size_t num_params() const { return theta.size(); }
  std::size_t num_mag_layers() const;
  std::uint64_t plan_digest() const { return magnet::plan_digest(plan); }

  std::span<const double> params(const MagStep &step) const {
    return std::span<const double>(theta).subspan(step.offset, step.layer.num_params());
  }
};

// Builds the pool plan from `a` (trials from config, pooling seed stream
// derived from `seed`) and initialises theta from the init stream.
Model build_model(const ModelConfig &config, const AdjacencyMatrix &a, std::uint64_t seed);

// Same topology on a given plan, e.g. one read from disk.
Model build_model(const ModelConfig &config, PoolPlan plan, std::uint64_t seed);

std::size_t count_parameters(const Model &model);

// Per-forward intermediate state. Owned by the caller so concurrent
// forwards over frozen parameters do not interfere.
struct ForwardCache {
  bool valid = false;
  FeatureMatrix input;
  std::vector<FeatureMatrix> outputs;   // one per layer
  std::vector<FeatureMatrix> preacts;   // MAg layers only, empty otherwise
  std::vector<PoolIndices> pool_indices;
};

FeatureMatrix model_forward(const Model &model, const FeatureMatrix &f, ForwardCache *cache = nullptr);

// Accumulates dL/dtheta into `d_theta` (+=) given dL/d(output). Throws
// UsageError if the cache is not from a forward pass of this model.
void model_backward(const Model &model, const ForwardCache &cache, const FeatureMatrix &upstream,
                    std::span<double> d_theta);
std::vector<double> model_backward(const Model &model, const ForwardCache &cache, const FeatureMatrix &upstream);

// Binary, little-endian:
//   "MAGNETM\0", u32 version, config, u64 input nodes, u64 plan digest,
//   u64 layer count, then per MAg layer: u64 count + f64 parameters.
void save_model(std::ostream &out, const Model &model);
void save_model_file(const std::string &path, const Model &model);
// Reads a model against `plan`; refuses a plan digest mismatch.
Model load_model(std::istream &in, const PoolPlan &plan);
Model load_model_file(const std::string &path, const PoolPlan &plan);
// Reads only the config and digests from a model file header.
struct ModelHeader {
  ModelConfig config;
  std::uint64_t input_nodes = 0;
  std::uint64_t plan_digest = 0;
};
ModelHeader read_model_header(std::istream &in);

} // namespace magnet
