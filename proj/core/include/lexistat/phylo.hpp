#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lexistat/matrix.hpp"

namespace lexistat {

struct PhyloNode {
  std::string name;    // leaves only
  double height = 0.0; // leaves at 0, non-decreasing towards the root
  int left = -1;       // child node ids, -1 for leaves
  int right = -1;
  int parent = -1;
};

/// Rooted binary tree. Leaves occupy ids 0..n-1; internal nodes follow in
/// creation order. Branch length of a node = parent height - own height.
struct PhyloTree {
  std::vector<PhyloNode> nodes;
  int root = -1;

  std::size_t leaf_count() const { return (nodes.size() + 1) / 2; }
  bool is_leaf(int id) const { return nodes[id].left < 0; }
  double branch_length(int id) const {
    const int p = nodes[id].parent;
    return p < 0 ? 0.0 : nodes[p].height - nodes[id].height;
  }
};

/// Average-linkage agglomeration: repeatedly merge the two clusters at
/// minimum mean inter-cluster distance, placing the merged node at half
/// that distance. Ties pick the smallest (row, column) original index pair.
/// Throws "invalid-matrix" for asymmetry beyond 1e-12, a nonzero diagonal,
/// negative entries or fewer than 2 rows.
PhyloTree upgma(const DistanceMatrix& matrix);

/// Newick serialization with branch lengths, ";"-terminated. Names
/// containing any of space , ( ) : ; ' are single-quoted with embedded
/// quotes doubled. Child order follows the order of cluster creation.
std::string to_newick(const PhyloTree& tree);

/// Leaf-to-leaf distances implied by the tree: twice the height of the
/// lowest common ancestor. On an ultrametric input this reproduces the
/// matrix upgma was built from.
DistanceMatrix cophenetic_matrix(const PhyloTree& tree);

}  // namespace lexistat
