#include "lexistat/phylo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "lexistat/error.hpp"

namespace lexistat {

PhyloTree upgma(const DistanceMatrix& matrix) {
  const std::size_t n = matrix.size();
  if (n < 2) {
    throw Error("invalid-matrix", "need at least 2 rows, got " + std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix.at(i, i) != 0.0) {
      throw Error("invalid-matrix",
                  "diagonal entry (" + std::to_string(i) + "," +
                      std::to_string(i) + ") is not zero");
    }
    for (std::size_t j = 0; j < n; ++j) {
      const double d = matrix.at(i, j);
      if (!(d >= 0.0) || !std::isfinite(d)) {
        throw Error("invalid-matrix", "entry (" + std::to_string(i) + "," +
                                          std::to_string(j) + ") is negative or not finite");
      }
      if (!(std::fabs(d - matrix.at(j, i)) <= 1e-12)) {
        throw Error("invalid-matrix", "asymmetry beyond 1e-12 at (" +
                                          std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }

  PhyloTree tree;
  tree.nodes.resize(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) tree.nodes[i].name = matrix.labels[i];

  // Active clusters live in the slot of their smallest original index.
  struct Cluster {
    int node = -1;
    std::size_t size = 0;
    bool alive = false;
  };
  std::vector<Cluster> clusters(n);
  for (std::size_t i = 0; i < n; ++i) clusters[i] = {static_cast<int>(i), 1, true};

  std::vector<double> work(matrix.values);
  auto dist = [&](std::size_t i, std::size_t j) -> double& {
    return work[i * n + j];
  };

  int next_id = static_cast<int>(n);
  for (std::size_t merge = 0; merge + 1 < n; ++merge) {
    // Scan ascending (row, column); strict < keeps the first minimum, which
    // is the smallest original index pair among ties.
    double best = std::numeric_limits<double>::infinity();
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (!clusters[i].alive) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!clusters[j].alive) continue;
        if (dist(i, j) < best) {
          best = dist(i, j);
          bi = i;
          bj = j;
        }
      }
    }

    PhyloNode& node = tree.nodes[next_id];
    node.height = best / 2.0;
    node.left = clusters[bi].node;
    node.right = clusters[bj].node;
    tree.nodes[node.left].parent = next_id;
    tree.nodes[node.right].parent = next_id;

    const double size_i = static_cast<double>(clusters[bi].size);
    const double size_j = static_cast<double>(clusters[bj].size);
    for (std::size_t k = 0; k < n; ++k) {
      if (!clusters[k].alive || k == bi || k == bj) continue;
      const double d =
          (size_i * dist(bi, k) + size_j * dist(bj, k)) / (size_i + size_j);
      dist(bi, k) = d;
      dist(k, bi) = d;
    }
    clusters[bi].node = next_id;
    clusters[bi].size += clusters[bj].size;
    clusters[bj].alive = false;
    ++next_id;
  }
  tree.root = next_id - 1;
  return tree;
}

namespace {

// 15 significant digits: relative error < 1e-15 on re-parse, and decimal
// inputs print without floating point noise (0.3 - 0.1 shows as 0.2).
std::string format_length(double value) {
  char buf[40];
  const int len = std::snprintf(buf, sizeof buf, "%.15g", value);
  return std::string(buf, static_cast<std::size_t>(len));
}

std::string quote_name(const std::string& name) {
  if (name.find_first_of(" ,():;'") == std::string::npos) return name;
  std::string out = "'";
  for (char c : name) {
    if (c == '\'') out += "''";
    else out += c;
  }
  out += '\'';
  return out;
}

void write_newick(const PhyloTree& tree, int id, std::string& out) {
  const PhyloNode& node = tree.nodes[id];
  if (tree.is_leaf(id)) {
    out += quote_name(node.name);
  } else {
    out += '(';
    write_newick(tree, node.left, out);
    out += ',';
    write_newick(tree, node.right, out);
    out += ')';
  }
  if (node.parent >= 0) {
    out += ':';
    out += format_length(tree.branch_length(id));
  }
}

void collect_leaves(const PhyloTree& tree, int id, std::vector<int>& out) {
  if (tree.is_leaf(id)) {
    out.push_back(id);
    return;
  }
  collect_leaves(tree, tree.nodes[id].left, out);
  collect_leaves(tree, tree.nodes[id].right, out);
}

}  // namespace

std::string to_newick(const PhyloTree& tree) {
  std::string out;
  write_newick(tree, tree.root, out);
  out += ';';
  return out;
}

DistanceMatrix cophenetic_matrix(const PhyloTree& tree) {
  const std::size_t n = tree.leaf_count();
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = tree.nodes[i].name;
  DistanceMatrix matrix(std::move(labels));

  // Every internal node is the lowest common ancestor of exactly the leaf
  // pairs that straddle its two children.
  for (std::size_t id = n; id < tree.nodes.size(); ++id) {
    std::vector<int> left, right;
    collect_leaves(tree, tree.nodes[id].left, left);
    collect_leaves(tree, tree.nodes[id].right, right);
    const double d = 2.0 * tree.nodes[id].height;
    for (int a : left) {
      for (int b : right) {
        matrix.at(a, b) = d;
        matrix.at(b, a) = d;
      }
    }
  }
  return matrix;
}

}  // namespace lexistat
