#include "speccert/generators.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace speccert {

PlantedGraph gen_example_blocks(int n, double c) {
  if (n < 1) throw InputError("example block size must be >= 1");
  if (!(c >= 0.0) || !std::isfinite(c)) throw InputError("cross weight must be finite and >= 0");
  const int N = 4 * n;
  // Group-level pattern; entry (a,b) is the weight between groups a and b.
  const double pattern[4][4] = {
      {1.0, 1.0, c, 0.0},
      {1.0, 1.0, 0.0, c},
      {c, 0.0, 1.0, 1.0},
      {0.0, c, 1.0, 1.0},
  };
  Matrix w(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) w(i, j) = pattern[i / n][j / n];
  std::vector<int> labels(N);
  for (int i = 0; i < N; ++i) labels[i] = i < 2 * n ? 0 : 1;
  return {WeightedGraph(std::move(w)), Partition(std::move(labels), 2)};
}

PlantedGraph gen_unbalanced_example() {
  const int sizes[3] = {3, 300, 300};
  const int N = 603;
  Matrix w = Matrix::Zero(N, N);
  std::vector<int> labels(N);
  int start = 0;
  for (int b = 0; b < 3; ++b) {
    const double x = 1.0 / sizes[b];
    for (int i = start; i < start + sizes[b]; ++i) {
      labels[i] = b;
      for (int j = start; j < start + sizes[b]; ++j) w(i, j) = x;
    }
    start += sizes[b];
  }
  const int v1_first = 0;
  const int v2_first = 3;
  const int v2_second = 4;
  const int v3_first = 303;
  w(v1_first, v2_first) = w(v2_first, v1_first) = 0.5;
  w(v3_first, v2_second) = w(v2_second, v3_first) = 0.5;
  return {WeightedGraph(std::move(w)), Partition(std::move(labels), 3)};
}

PlantedGraph gen_planted_blocks(const std::vector<int>& sizes, double intra, double cross,
                                std::uint64_t /*seed*/) {
  if (sizes.empty()) throw InputError("planted blocks need at least one block");
  for (int s : sizes)
    if (s < 1) throw InputError("block sizes must be >= 1");
  if (!(intra >= 0.0) || !(cross >= 0.0) || !std::isfinite(intra) || !std::isfinite(cross)) {
    throw InputError("weights must be finite and >= 0");
  }
  const int N = std::accumulate(sizes.begin(), sizes.end(), 0);
  Matrix w = Matrix::Zero(N, N);
  std::vector<int> labels(N);
  std::vector<int> first(sizes.size());
  int start = 0;
  for (std::size_t b = 0; b < sizes.size(); ++b) {
    first[b] = start;
    for (int i = start; i < start + sizes[b]; ++i) {
      labels[i] = static_cast<int>(b);
      for (int j = start; j < start + sizes[b]; ++j) w(i, j) = intra;
    }
    start += sizes[b];
  }
  for (std::size_t b = 0; b + 1 < sizes.size(); ++b) {
    const int u = first[b] + sizes[b] - 1;
    const int v = first[b + 1];
    w(u, v) = w(v, u) = cross;
  }
  return {WeightedGraph(std::move(w)), Partition(std::move(labels), static_cast<int>(sizes.size()))};
}

WeightedGraph path_graph(int n) {
  if (n < 1) throw InputError("path needs n >= 1");
  Matrix w = Matrix::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) w(i, i + 1) = w(i + 1, i) = 1.0;
  return WeightedGraph(std::move(w));
}

WeightedGraph cycle_graph(int n) {
  if (n < 3) throw InputError("cycle needs n >= 3");
  Matrix w = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    w(i, j) = w(j, i) = 1.0;
  }
  return WeightedGraph(std::move(w));
}

WeightedGraph complete_graph(int n, double weight) {
  if (n < 1) throw InputError("complete graph needs n >= 1");
  return WeightedGraph(Matrix::Constant(n, n, weight));
}

}  // namespace speccert
