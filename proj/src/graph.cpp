#include "speccert/graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

namespace speccert {

WeightedGraph::WeightedGraph(Matrix weights) : w_(std::move(weights)) {
  if (w_.rows() != w_.cols()) {
    throw InputError("weight matrix must be square");
  }
  if (w_.rows() < 1) {
    throw InputError("graph needs at least one vertex");
  }
  const Eigen::Index n = w_.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    w_(i, i) = 0.0;
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double a = w_(i, j);
      const double b = w_(j, i);
      if (!std::isfinite(a) || !std::isfinite(b)) {
        throw InputError("non-finite weight at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
      if (a < 0.0 || b < 0.0) {
        throw InputError("negative weight at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
      if (std::abs(a - b) > 1e-12 * std::max(1.0, std::max(a, b))) {
        throw InputError("weight matrix is not symmetric at (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
      }
      const double s = (a == b) ? a : 0.5 * (a + b);
      w_(i, j) = s;
      w_(j, i) = s;
    }
  }
}

WeightedGraph WeightedGraph::empty(int n) {
  if (n < 1) throw InputError("graph needs at least one vertex");
  return WeightedGraph(Matrix::Zero(n, n));
}

Vector WeightedGraph::degrees() const { return w_.rowwise().sum(); }

double WeightedGraph::max_degree() const { return degrees().maxCoeff(); }

bool WeightedGraph::is_unweighted() const {
  return (w_.array() == 0.0 || w_.array() == 1.0).all();
}

int WeightedGraph::edge_count() const {
  int m = 0;
  for (Eigen::Index i = 0; i < w_.rows(); ++i)
    for (Eigen::Index j = i + 1; j < w_.cols(); ++j)
      if (w_(i, j) > 0.0) ++m;
  return m;
}

Partition::Partition(std::vector<int> labels, int k) : labels_(std::move(labels)), k_(k) {
  if (k_ < 1) throw InputError("partition needs k >= 1");
  if (labels_.empty()) throw InputError("partition has no vertices");
  std::vector<int> count(k_, 0);
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    const int l = labels_[v];
    if (l < 0 || l >= k_) {
      throw InputError("label " + std::to_string(l) + " of vertex " + std::to_string(v) +
                       " outside [0," + std::to_string(k_) + ")");
    }
    ++count[l];
  }
  for (int b = 0; b < k_; ++b) {
    if (count[b] == 0) throw InputError("block " + std::to_string(b) + " is empty");
  }
}

Partition Partition::from_labels(std::vector<int> labels) {
  if (labels.empty()) throw InputError("partition has no vertices");
  const int k = *std::max_element(labels.begin(), labels.end()) + 1;
  return Partition(std::move(labels), k);
}

std::vector<int> Partition::block_sizes() const {
  std::vector<int> sizes(k_, 0);
  for (int l : labels_) ++sizes[l];
  return sizes;
}

std::vector<std::vector<int>> Partition::members() const {
  std::vector<std::vector<int>> out(k_);
  for (int v = 0; v < size(); ++v) out[labels_[v]].push_back(v);
  return out;
}

Partition Partition::canonical() const {
  std::vector<int> remap(k_, -1);
  std::vector<int> out(labels_.size());
  int next = 0;
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    int& r = remap[labels_[v]];
    if (r < 0) r = next++;
    out[v] = r;
  }
  return Partition(std::move(out), k_);
}

bool Partition::same_up_to_relabeling(const Partition& other) const {
  return k_ == other.k_ && size() == other.size() && canonical() == other.canonical();
}

void require_compatible(const WeightedGraph& g, const Partition& p) {
  if (g.size() != p.size()) {
    throw InputError("partition has " + std::to_string(p.size()) + " labels but graph has " +
                     std::to_string(g.size()) + " vertices");
  }
}

Matrix laplacian(const WeightedGraph& g) {
  Matrix l = -g.weights();
  l.diagonal() = g.degrees();
  return l;
}

namespace {

std::vector<char> membership(int n, std::span<const int> subset) {
  std::vector<char> in(n, 0);
  for (int v : subset) {
    if (v < 0 || v >= n) {
      throw InputError("vertex index " + std::to_string(v) + " out of range [0," +
                       std::to_string(n) + ")");
    }
    in[v] = 1;
  }
  return in;
}

}  // namespace

double cut_weight(const WeightedGraph& g, std::span<const int> subset) {
  const int n = g.size();
  const auto in = membership(n, subset);
  double cut = 0.0;
  for (int i = 0; i < n; ++i) {
    if (!in[i]) continue;
    for (int j = 0; j < n; ++j)
      if (!in[j]) cut += g.weight(i, j);
  }
  return cut;
}

double ratio_cut_labels(const WeightedGraph& g, std::span<const int> labels, int k) {
  const int n = g.size();
  if (static_cast<int>(labels.size()) != n) throw InputError("label count does not match graph");
  // Small fixed buffers keep the oracle's inner loop allocation-free for typical k.
  constexpr int kStack = 16;
  double cut_stack[kStack];
  int size_stack[kStack];
  std::vector<double> cut_heap;
  std::vector<int> size_heap;
  double* cut = cut_stack;
  int* sizes = size_stack;
  if (k > kStack) {
    cut_heap.assign(k, 0.0);
    size_heap.assign(k, 0);
    cut = cut_heap.data();
    sizes = size_heap.data();
  } else {
    std::fill(cut, cut + k, 0.0);
    std::fill(sizes, sizes + k, 0);
  }
  const Matrix& w = g.weights();
  for (int j = 0; j < n; ++j) {
    const int lj = labels[j];
    if (lj < 0 || lj >= k) throw InputError("label outside [0,k)");
    ++sizes[lj];
    for (int i = j + 1; i < n; ++i) {
      const int li = labels[i];
      if (li != lj) {
        const double x = w(i, j);
        cut[li] += x;
        cut[lj] += x;
      }
    }
  }
  double total = 0.0;
  for (int b = 0; b < k; ++b) {
    if (sizes[b] == 0) throw InputError("block " + std::to_string(b) + " is empty");
    total += cut[b] / sizes[b];
  }
  return total;
}

double ratio_cut(const WeightedGraph& g, const Partition& p) {
  require_compatible(g, p);
  return ratio_cut_labels(g, p.labels(), p.blocks());
}

WeightedGraph induced_subgraph(const WeightedGraph& g, std::span<const int> subset) {
  const auto in = membership(g.size(), subset);
  std::vector<int> idx;
  for (int v = 0; v < g.size(); ++v)
    if (in[v]) idx.push_back(v);
  if (idx.empty()) throw InputError("induced subgraph of an empty vertex set");
  const int m = static_cast<int>(idx.size());
  Matrix w(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) w(a, b) = g.weight(idx[a], idx[b]);
  return WeightedGraph(std::move(w));
}

std::vector<int> connected_components(const WeightedGraph& g, int* count) {
  const int n = g.size();
  std::vector<int> comp(n, -1);
  int c = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = c;
    stack.push_back(s);
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n; ++v) {
        if (comp[v] < 0 && g.weight(u, v) > 0.0) {
          comp[v] = c;
          stack.push_back(v);
        }
      }
    }
    ++c;
  }
  if (count) *count = c;
  return comp;
}

bool is_connected(const WeightedGraph& g) {
  int c = 0;
  connected_components(g, &c);
  return c == 1;
}

int unweighted_diameter(const WeightedGraph& g) {
  const int n = g.size();
  int diameter = 0;
  std::vector<int> dist(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v = 0; v < n; ++v) {
        if (dist[v] < 0 && g.weight(u, v) > 0.0) {
          dist[v] = dist[u] + 1;
          q.push(v);
        }
      }
    }
    for (int d : dist) {
      if (d < 0) return -1;
      diameter = std::max(diameter, d);
    }
  }
  return diameter;
}

}  // namespace speccert
