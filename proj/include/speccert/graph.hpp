#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "speccert/error.hpp"

namespace speccert {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Undirected graph with a dense symmetric nonnegative weight matrix.
// The diagonal is always zero: any self-loop weight passed in is dropped.
class WeightedGraph {
 public:
  // Validates symmetry (to 1e-12 relative), nonnegativity and finiteness.
  explicit WeightedGraph(Matrix weights);

  static WeightedGraph empty(int n);

  int size() const { return static_cast<int>(w_.rows()); }
  double weight(int i, int j) const { return w_(i, j); }
  const Matrix& weights() const { return w_; }

  Vector degrees() const;
  double max_degree() const;
  // True when every weight is 0 or 1.
  bool is_unweighted() const;
  // Number of edges with positive weight (i < j).
  int edge_count() const;

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    return a.w_.rows() == b.w_.rows() && a.w_ == b.w_;
  }

 private:
  Matrix w_;
};

// A k-way labeling of vertices. Every label in [0, k) is used at least once.
class Partition {
 public:
  Partition(std::vector<int> labels, int k);

  // k is inferred as max label + 1.
  static Partition from_labels(std::vector<int> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  int blocks() const { return k_; }
  int label(int vertex) const { return labels_[vertex]; }
  const std::vector<int>& labels() const { return labels_; }

  std::vector<int> block_sizes() const;
  // Vertex lists per block, each ascending.
  std::vector<std::vector<int>> members() const;

  // Labels renumbered by order of first appearance (restricted-growth form).
  Partition canonical() const;
  bool same_up_to_relabeling(const Partition& other) const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.k_ == b.k_ && a.labels_ == b.labels_;
  }

 private:
  std::vector<int> labels_;
  int k_;
};

// Throws InputError unless p labels exactly the vertices of g.
void require_compatible(const WeightedGraph& g, const Partition& p);

// L = D - W.
Matrix laplacian(const WeightedGraph& g);

// Total weight between S and its complement. S is a list of vertex indices;
// repeated indices are treated as a set.
double cut_weight(const WeightedGraph& g, std::span<const int> subset);

// sum_i cut(V_i, V_i^c) / |V_i|.
double ratio_cut(const WeightedGraph& g, const Partition& p);

// Ratio cut on raw labels in [0, k); all blocks must be nonempty. This is the
// single evaluation routine shared with the brute-force oracle.
double ratio_cut_labels(const WeightedGraph& g, std::span<const int> labels, int k);

// Weights restricted to S x S, vertices renumbered in ascending original order.
WeightedGraph induced_subgraph(const WeightedGraph& g, std::span<const int> subset);

// Connected components over positive-weight edges; returns component id per vertex.
std::vector<int> connected_components(const WeightedGraph& g, int* count = nullptr);
bool is_connected(const WeightedGraph& g);

// Hop-count diameter over positive-weight edges; -1 when disconnected.
int unweighted_diameter(const WeightedGraph& g);

}  // namespace speccert
