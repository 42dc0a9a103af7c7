#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "speccert/graph.hpp"

namespace speccert {

inline constexpr int kOracleMaxVertices = 14;

// Stirling number of the second kind S(n, k).
std::uint64_t stirling2(int n, int k);

// Walks every restricted-growth string of length n with exactly k distinct
// values, in lexicographic order. Each one encodes a distinct partition into
// k nonempty unlabeled blocks.
class PartitionEnumerator {
 public:
  PartitionEnumerator(int n, int k);

  const std::vector<int>& current() const { return rgs_; }
  // Advances to the next string; false when exhausted.
  bool next();

 private:
  int n_;
  int k_;
  std::vector<int> rgs_;
  std::vector<int> prefix_max_;  // max of rgs_[0..i]
};

// Calls visit(labels) for every partition of n items into k blocks.
void enumerate_partitions(int n, int k, const std::function<void(std::span<const int>)>& visit);

struct OracleResult {
  Partition best;
  double value = 0.0;
  bool unique = true;      // no other partition within 1e-9 of value
  double runner_up = 0.0;  // smallest value over all other partitions (+inf if none)
  std::uint64_t partitions_examined = 0;
};

// Exact minimum ratio cut over all k-way partitions (n <= 14). Ties go to the
// first partition in enumeration order. Evaluation runs in parallel batches.
OracleResult min_ratio_cut_bruteforce(const WeightedGraph& g, int k);

namespace serial {
OracleResult min_ratio_cut_bruteforce(const WeightedGraph& g, int k);
}  // namespace serial

}  // namespace speccert
