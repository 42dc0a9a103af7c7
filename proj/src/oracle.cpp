#include "speccert/oracle.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace speccert {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::size_t kBatch = 1 << 14;

void check_oracle_args(int n, int k) {
  if (n > kOracleMaxVertices) {
    throw InputError("brute-force oracle is limited to n <= " + std::to_string(kOracleMaxVertices) +
                     " (got " + std::to_string(n) + ")");
  }
  if (k < 1 || k > n) {
    throw InputError("partition enumeration needs 1 <= k <= n (got n=" + std::to_string(n) +
                     ", k=" + std::to_string(k) + ")");
  }
}

// Running minimum with runner-up; first seen wins exact ties.
struct Best {
  double value = kInf;
  double runner_up = kInf;
  std::vector<int> labels;
  std::uint64_t seen = 0;

  void offer(double v, std::span<const int> rgs) {
    ++seen;
    if (v < value) {
      runner_up = std::min(runner_up, value);
      value = v;
      labels.assign(rgs.begin(), rgs.end());
    } else {
      runner_up = std::min(runner_up, v);
    }
  }

  OracleResult finish(int k) && {
    OracleResult out{Partition(std::move(labels), k), value, true, runner_up, seen};
    out.unique = !(runner_up - value <= 1e-9);
    return out;
  }
};

}  // namespace

std::uint64_t stirling2(int n, int k) {
  if (n < 0 || k < 0) return 0;
  std::vector<std::vector<std::uint64_t>> s(n + 1, std::vector<std::uint64_t>(k + 1, 0));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= std::min(i, k); ++j) s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
  return s[n][k];
}

PartitionEnumerator::PartitionEnumerator(int n, int k) : n_(n), k_(k), rgs_(std::max(n, 0), 0),
      prefix_max_(std::max(n, 0), 0) {
  check_oracle_args(n, k);
  for (int j = 1; j < k; ++j) rgs_[n - k + j] = j;
  int m = 0;
  for (int i = 0; i < n; ++i) prefix_max_[i] = m = std::max(m, rgs_[i]);
}

bool PartitionEnumerator::next() {
  for (int i = n_ - 1; i >= 1; --i) {
    const int prev = prefix_max_[i - 1];
    const int limit = std::min(k_ - 1, prev + 1);
    for (int v = rgs_[i] + 1; v <= limit; ++v) {
      const int top = std::max(prev, v);
      const int remaining = n_ - 1 - i;
      const int need = k_ - 1 - top;
      if (need > remaining) continue;
      rgs_[i] = v;
      prefix_max_[i] = top;
      // Smallest feasible tail: zeros, then the missing labels in increasing order.
      const int zeros = remaining - need;
      for (int j = i + 1; j <= i + zeros; ++j) {
        rgs_[j] = 0;
        prefix_max_[j] = top;
      }
      for (int j = 0; j < need; ++j) {
        rgs_[i + zeros + 1 + j] = top + 1 + j;
        prefix_max_[i + zeros + 1 + j] = top + 1 + j;
      }
      return true;
    }
  }
  return false;
}

void enumerate_partitions(int n, int k, const std::function<void(std::span<const int>)>& visit) {
  check_oracle_args(n, k);
  PartitionEnumerator e(n, k);
  do {
    visit(e.current());
  } while (e.next());
}

OracleResult min_ratio_cut_bruteforce(const WeightedGraph& g, int k) {
  const int n = g.size();
  check_oracle_args(n, k);
  PartitionEnumerator e(n, k);
  std::vector<int> flat(kBatch * n);
  std::vector<double> values(kBatch);
  Best best;
  bool more = true;
  while (more) {
    std::size_t count = 0;
    while (more && count < kBatch) {
      std::copy(e.current().begin(), e.current().end(), flat.begin() + count * n);
      ++count;
      more = e.next();
    }
    const auto batch = static_cast<long>(count);
#pragma omp parallel for schedule(static)
    for (long b = 0; b < batch; ++b) {
      values[b] = ratio_cut_labels(g, std::span<const int>(flat.data() + b * n, n), k);
    }
    for (std::size_t b = 0; b < count; ++b) {
      best.offer(values[b], std::span<const int>(flat.data() + b * n, n));
    }
  }
  return std::move(best).finish(k);
}

namespace serial {

OracleResult min_ratio_cut_bruteforce(const WeightedGraph& g, int k) {
  const int n = g.size();
  check_oracle_args(n, k);
  Best best;
  enumerate_partitions(n, k, [&](std::span<const int> rgs) {
    best.offer(ratio_cut_labels(g, rgs, k), rgs);
  });
  return std::move(best).finish(k);
}

}  // namespace serial

}  // namespace speccert
