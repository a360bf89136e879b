#pragma once

#include "magnet/features.hpp"
#include "magnet/graph.hpp"
#include "magnet/pooling.hpp"

#include <memory>
#include <span>
#include <utility>
#include <vector>

namespace magnet {

class Rng;

enum class Activation { linear, leaky_relu };
enum class PoolAggregator { max, avg };

inline double activate(Activation act, double slope, double x) {
  return (act == Activation::leaky_relu && x < 0.0) ? slope * x : x;
}
inline double activate_grad(Activation act, double slope, double x) {
  return (act == Activation::leaky_relu && x < 0.0) ? slope : 1.0;
}

// Aggregation windows N_i plus, for each entry (i, q) with j = N_i[q], the
// position of i inside N_j. The backward gather pass relies on symmetry.
struct Neighborhoods {
  AdjacencyMatrix adjacency;
  std::vector<std::int32_t> reverse;

  explicit Neighborhoods(AdjacencyMatrix a);
  std::size_t size() const { return adjacency.size(); }
};

// Multichannel aggregation layer
//   out[i, a] = act(b[i, a] + sum_{j in N_i} sum_b k[i, j, a, b] * in[j, b])
// with independent weights per node. The layer holds structure only;
// parameters live in a flat span laid out as all weight blocks (node
// order, each (|N_i| * c_in) x c_out row-major with row q * c_in + b)
// followed by the n x c_out bias matrix.
class MagLayer {
public:
  MagLayer(std::shared_ptr<const Neighborhoods> nbrs, std::size_t c_in, std::size_t c_out,
           Activation act = Activation::leaky_relu, double slope = 0.3);

  std::size_t nodes() const { return nbrs_->size(); }
  std::size_t c_in() const { return c_in_; }
  std::size_t c_out() const { return c_out_; }
  Activation activation() const { return act_; }
  double slope() const { return slope_; }
  const Neighborhoods &neighborhoods() const { return *nbrs_; }

  std::size_t num_weights() const { return weight_offsets_.back(); }
  std::size_t num_params() const { return num_weights() + nodes() * c_out_; }
  std::size_t weight_offset(std::size_t i) const { return weight_offsets_[i]; }
  std::size_t bias_offset(std::size_t i) const { return num_weights() + i * c_out_; }
  std::size_t window_rows(std::size_t i) const { return nbrs_->adjacency.degree(i) * c_in_; }
  std::size_t max_window_rows() const { return max_rows_; }

  // Scaled uniform init, bound sqrt(6 / (|N_i| c_in + c_out)); zero biases.
  void init_params(std::span<double> params, Rng &rng) const;

private:
  std::shared_ptr<const Neighborhoods> nbrs_;
  std::size_t c_in_;
  std::size_t c_out_;
  Activation act_;
  double slope_;
  std::vector<std::size_t> weight_offsets_;
  std::size_t max_rows_ = 0;
};

struct LayerGradients {
  std::vector<double> d_params;   // weights then biases, like the layer params
  FeatureMatrix d_input;
};

// `preact`, when given, receives the pre-activation values for backward.
void mag_forward(const MagLayer &layer, std::span<const double> params, const FeatureMatrix &in,
                 FeatureMatrix &out, FeatureMatrix *preact = nullptr);
FeatureMatrix mag_forward(const MagLayer &layer, std::span<const double> params, const FeatureMatrix &in);

// Accumulates into d_params (+=) and overwrites *d_in when non-null.
void mag_backward(const MagLayer &layer, std::span<const double> params, const FeatureMatrix &in,
                  const FeatureMatrix &preact, const FeatureMatrix &upstream, std::span<double> d_params,
                  FeatureMatrix *d_in);
LayerGradients mag_backward(const MagLayer &layer, std::span<const double> params, const FeatureMatrix &in,
                            const FeatureMatrix &upstream);

// Routing record of a pooling forward pass.
struct PoolIndices {
  PoolAggregator aggregator = PoolAggregator::max;
  std::size_t parent_nodes = 0;
  std::size_t batch = 0;
  std::size_t pooled_nodes = 0;
  std::size_t channels = 0;
  std::vector<NodeId> argmax;   // max: batch x pooled x channels winning parent node
  std::vector<NodeId> owner;    // avg: parent node -> pooled node
  std::vector<double> inv_size; // avg: 1 / |S_i|
};

// out[i, b] = aggr_{j in S_i} in[j, b], per channel. Max ties go to the
// lowest parent index.
FeatureMatrix gpool_forward(const Subgraphs &subgraphs, const FeatureMatrix &in, PoolIndices *indices = nullptr,
                            PoolAggregator aggregator = PoolAggregator::max);
FeatureMatrix gpool_backward(const PoolIndices &indices, const FeatureMatrix &upstream);

// out[i, b] = in[j, b] for i in S_j.
FeatureMatrix gunpool_forward(const Subgraphs &subgraphs, const FeatureMatrix &in);
FeatureMatrix gunpool_backward(const Subgraphs &subgraphs, const FeatureMatrix &upstream);

// Channel stack: unpooled channels first, then skip channels.
FeatureMatrix concat(const FeatureMatrix &unpooled, const FeatureMatrix &skip);
std::pair<FeatureMatrix, FeatureMatrix> concat_backward(const FeatureMatrix &upstream, std::size_t unpooled_channels);

// Straightforward single-threaded kernels kept as the reference the
// parallel ones are tested and benchmarked against.
namespace serial {

void mag_forward(const MagLayer &layer, std::span<const double> params, const FeatureMatrix &in,
                 FeatureMatrix &out, FeatureMatrix *preact = nullptr);
void mag_backward(const MagLayer &layer, std::span<const double> params, const FeatureMatrix &in,
                  const FeatureMatrix &preact, const FeatureMatrix &upstream, std::span<double> d_params,
                  FeatureMatrix *d_in);
FeatureMatrix gpool_forward(const Subgraphs &subgraphs, const FeatureMatrix &in, PoolIndices *indices = nullptr,
                            PoolAggregator aggregator = PoolAggregator::max);
FeatureMatrix gpool_backward(const PoolIndices &indices, const FeatureMatrix &upstream);
FeatureMatrix gunpool_forward(const Subgraphs &subgraphs, const FeatureMatrix &in);
FeatureMatrix gunpool_backward(const Subgraphs &subgraphs, const FeatureMatrix &upstream);

} // namespace serial

} // namespace magnet
