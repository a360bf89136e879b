// Serial reference vs OpenMP kernels on the desk L-shape windows.
// Run with OMP_NUM_THREADS to vary the thread count.

#include "magnet/graph.hpp"
#include "magnet/layers.hpp"
#include "magnet/meshgen.hpp"
#include "magnet/pooling.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace magnet;

namespace {

struct Fixture {
  std::shared_ptr<const Neighborhoods> windows;
  Subgraphs parts;
  std::mt19937_64 gen{1};

  Fixture() {
    const auto a = adjacency_from_mesh(lshape_quad(1.0, 0.4, 20));
    windows = std::make_shared<const Neighborhoods>(adjacency_power(a, 2));
    parts = optimize_pooling(a, 10).pooling.subgraphs;
  }

  FeatureMatrix features(std::size_t batch, std::size_t n, std::size_t c) {
    FeatureMatrix f(batch, n, c);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (double &v : f.values) {
      v = u(gen);
    }
    return f;
  }

  std::vector<double> params(const MagLayer &layer) {
    std::vector<double> p(layer.num_params());
    std::uniform_real_distribution<double> u(-0.1, 0.1);
    for (double &v : p) {
      v = u(gen);
    }
    return p;
  }
};

Fixture &fixture() {
  static Fixture f;
  return f;
}

template <bool Serial> void BM_MagForward(benchmark::State &state) {
  auto &fx = fixture();
  const auto c = static_cast<std::size_t>(state.range(0));
  const MagLayer layer(fx.windows, c, c);
  const auto p = fx.params(layer);
  const auto in = fx.features(4, layer.nodes(), c);
  FeatureMatrix out, pre;
  for (auto _ : state) {
    if constexpr (Serial) {
      serial::mag_forward(layer, p, in, out, &pre);
    } else {
      mag_forward(layer, p, in, out, &pre);
    }
    benchmark::DoNotOptimize(out.values.data());
  }
  state.SetItemsProcessed(state.iterations() * 4);
}

template <bool Serial> void BM_MagBackward(benchmark::State &state) {
  auto &fx = fixture();
  const auto c = static_cast<std::size_t>(state.range(0));
  const MagLayer layer(fx.windows, c, c);
  const auto p = fx.params(layer);
  const auto in = fx.features(4, layer.nodes(), c);
  FeatureMatrix out, pre, d_in;
  mag_forward(layer, p, in, out, &pre);
  const auto up = fx.features(4, layer.nodes(), c);
  std::vector<double> d_params(p.size());
  for (auto _ : state) {
    std::fill(d_params.begin(), d_params.end(), 0.0);
    if constexpr (Serial) {
      serial::mag_backward(layer, p, in, pre, up, d_params, &d_in);
    } else {
      mag_backward(layer, p, in, pre, up, d_params, &d_in);
    }
    benchmark::DoNotOptimize(d_params.data());
  }
  state.SetItemsProcessed(state.iterations() * 4);
}

template <bool Serial> void BM_GpoolMax(benchmark::State &state) {
  auto &fx = fixture();
  const auto in = fx.features(4, fx.windows->size(), static_cast<std::size_t>(state.range(0)));
  PoolIndices idx;
  for (auto _ : state) {
    auto out = Serial ? serial::gpool_forward(fx.parts, in, &idx, PoolAggregator::max)
                      : gpool_forward(fx.parts, in, &idx, PoolAggregator::max);
    benchmark::DoNotOptimize(out.values.data());
  }
}

} // namespace

BENCHMARK(BM_MagForward<true>)->Name("mag_forward/serial")->Arg(8)->Arg(32);
BENCHMARK(BM_MagForward<false>)->Name("mag_forward/openmp")->Arg(8)->Arg(32);
BENCHMARK(BM_MagBackward<true>)->Name("mag_backward/serial")->Arg(8)->Arg(32);
BENCHMARK(BM_MagBackward<false>)->Name("mag_backward/openmp")->Arg(8)->Arg(32);
BENCHMARK(BM_GpoolMax<true>)->Name("gpool_max/serial")->Arg(32);
BENCHMARK(BM_GpoolMax<false>)->Name("gpool_max/openmp")->Arg(32);

BENCHMARK_MAIN();
