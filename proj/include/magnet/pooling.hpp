#pragma once

#include "magnet/graph.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace magnet {

using Subgraphs = std::vector<std::vector<NodeId>>;

struct Pooling {
  Subgraphs subgraphs;       // disjoint cliques covering the parent graph
  AdjacencyMatrix pooled;    // order == subgraphs.size()
};

// Clique contraction of `a`. Nodes are visited in a seeded random
// permutation; each unassigned node seeds a subgraph and absorbs its
// unassigned neighbors, in ascending index, that are adjacent to every
// member already in the subgraph. Deterministic in (a, seed).
Pooling generate_pooling(const AdjacencyMatrix &a, std::uint64_t seed);

// Same contraction with an explicit node visiting order. `order` must be
// a permutation of 0..n-1.
Pooling generate_pooling_ordered(const AdjacencyMatrix &a, std::span<const NodeId> order);

// pooled[r][c] = 1 iff some edge of `a` joins subgraph r and subgraph c.
AdjacencyMatrix pooled_adjacency(const AdjacencyMatrix &a, const Subgraphs &subgraphs);

// Throws StructuralError if `subgraphs` is not a partition of 0..n-1.
void check_partition(std::size_t n, const Subgraphs &subgraphs);

struct PoolingTrialResult {
  Pooling pooling;
  std::uint64_t seed = 0;
};

// Runs generate_pooling with seeds first_seed .. first_seed+trials-1 and
// keeps the one with the fewest pooled nodes (lowest seed on ties).
// Trials run in parallel; the result does not depend on thread count.
PoolingTrialResult optimize_pooling(const AdjacencyMatrix &a, int trials, std::uint64_t first_seed = 0);

struct PoolLevel {
  AdjacencyMatrix parent;
  Subgraphs subgraphs;
  AdjacencyMatrix pooled;
  std::uint64_t seed = 0;   // winning trial seed
};

struct PoolPlan {
  std::vector<PoolLevel> levels;
  std::vector<std::string> warnings;

  std::size_t num_levels() const { return levels.size(); }
  // Node count at graph level l, l in [0, num_levels()].
  std::size_t nodes_at(std::size_t l) const {
    return l < levels.size() ? levels[l].parent.size() : levels.back().pooled.size();
  }
  const AdjacencyMatrix &adjacency_at(std::size_t l) const {
    return l < levels.size() ? levels[l].parent : levels.back().pooled;
  }
};

// Chains optimize_pooling num_levels times. Level l tries seeds
// base_seed + l*trials onward. A level whose parent already has a single
// node gets the identity partition and a warning.
PoolPlan build_pool_plan(const AdjacencyMatrix &a, int num_levels, int trials, std::uint64_t base_seed = 0);

std::uint64_t plan_digest(const PoolPlan &plan);

// Text format:
//   magnet-pool-plan 1
//   mesh_digest <hex>
//   levels <L>
//   level <l> parent_nodes <n> subgraphs <m> seed <s>
//   <m lines: size followed by member node ids>
// Adjacencies are not stored; read_pool_plan recomputes them from the
// level-0 adjacency and checks every partition.
void write_pool_plan(std::ostream &out, const PoolPlan &plan, std::uint64_t mesh_digest);
PoolPlan read_pool_plan(std::istream &in, const AdjacencyMatrix &level0, std::uint64_t expected_mesh_digest);

} // namespace magnet
