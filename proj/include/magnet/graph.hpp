#pragma once

#include "magnet/mesh.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace magnet {

using NodeId = std::int32_t;

// Symmetric boolean matrix with unit diagonal, stored as sorted neighbor
// lists (CSR). Every row contains its own index.
class AdjacencyMatrix {
public:
  AdjacencyMatrix() : offsets_{0} {}

  // Builds from arbitrary (i, j) pairs; symmetrizes, adds self-loops,
  // removes duplicates.
  static AdjacencyMatrix from_edges(std::size_t n, std::span<const std::pair<NodeId, NodeId>> edges);

  // Takes ownership of CSR arrays. Throws StructuralError unless rows are
  // sorted, unique, in range, symmetric and contain the diagonal.
  static AdjacencyMatrix from_csr(std::vector<std::int64_t> offsets, std::vector<NodeId> indices);

  std::size_t size() const { return offsets_.size() - 1; }
  std::size_t nnz() const { return indices_.size(); }

  std::span<const NodeId> row(std::size_t i) const {
    return {indices_.data() + offsets_[i], static_cast<std::size_t>(offsets_[i + 1] - offsets_[i])};
  }
  std::size_t degree(std::size_t i) const { return static_cast<std::size_t>(offsets_[i + 1] - offsets_[i]); }
  bool operator()(std::size_t i, std::size_t j) const;

  std::span<const std::int64_t> offsets() const { return offsets_; }
  std::span<const NodeId> indices() const { return indices_; }

  bool operator==(const AdjacencyMatrix &) const = default;

private:
  std::vector<std::int64_t> offsets_;
  std::vector<NodeId> indices_;
};

// A[i][j] = 1 iff i == j or i and j share an element.
AdjacencyMatrix adjacency_from_mesh(const Mesh &mesh);

// Boolean k-th power: 1 iff a path of length <= k joins i and j.
// Throws ArgumentError for k < 1.
AdjacencyMatrix adjacency_power(const AdjacencyMatrix &a, int k);

// Boolean product of two adjacency matrices of equal order.
AdjacencyMatrix boolean_product(const AdjacencyMatrix &a, const AdjacencyMatrix &b);

// Hop distances from `source`; unreachable nodes get -1.
std::vector<int> bfs_distances(const AdjacencyMatrix &a, NodeId source);

bool is_connected(const AdjacencyMatrix &a);

// Exact diameter (largest finite eccentricity) by BFS from every node when
// n <= exact_limit, otherwise a double-sweep lower bound.
int graph_diameter(const AdjacencyMatrix &a, std::size_t exact_limit = 4096);

} // namespace magnet
