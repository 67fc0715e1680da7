#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "metric.hpp"

namespace ue {

/// Rooted level tree: leaves are points 0..n-1 at height 0, internal nodes
/// carry merge heights. Node indices < n are leaves.
struct LevelTree {
  struct Node {
    double height = 0.0;
    int left = -1;   // child node index, -1 for leaves
    int right = -1;
    int parent = -1;
  };
  std::size_t n_leaves = 0;
  std::vector<Node> nodes;  // leaves first, then internal merges
  int root = -1;

  /// Height of the lowest common ancestor of leaves i and j.
  double lca_height(std::size_t i, std::size_t j) const;

  /// Pairwise LCA heights as a dense matrix.
  FiniteMetricSpace to_matrix(const std::vector<std::string>& labels = {}) const;

  /// Newick-like text with merge heights as branch annotations.
  std::string newick(const std::vector<std::string>& labels = {}) const;
};

/// Finite metric space whose distances satisfy the strong triangle
/// inequality, with its dual level-tree representation.
struct UltraSpace {
  FiniteMetricSpace base;
  LevelTree tree;
};

/// Pointwise-maximal ultrametric below m: u[i][j] = minimax path cost,
/// computed by single-linkage merges. The identity map m -> u has distortion
/// max d/u, optimal over all embeddings into ultrametric spaces.
UltraSpace subdominant_ultrametric(const FiniteMetricSpace& m);

/// Level tree of an exactly ultrametric matrix. Throws Error(NotUltrametric)
/// otherwise; the matrix round-trips bit-exactly.
LevelTree tree_from_matrix(const FiniteMetricSpace& rho);

/// Wraps a matrix known to be ultrametric (exact check + tree).
UltraSpace ultra_from_matrix(const FiniteMetricSpace& rho);

}  // namespace ue
