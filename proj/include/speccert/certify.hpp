#pragma once

#include <span>
#include <vector>

#include "speccert/graph.hpp"

namespace speccert {

// Entry i: total weight from vertex i to vertices outside its own block.
Vector boundary_degrees(const WeightedGraph& g, const Partition& p);

// Algebraic connectivity of each induced block. Singleton blocks have no
// internal cut; they report +inf and are listed in singleton_blocks.
struct IntraConnectivities {
  Vector lambda2s;
  std::vector<int> singleton_blocks;
};

IntraConnectivities intra_connectivities(const WeightedGraph& g, const Partition& p);

// Optimality certificate for a given partition: passes when
// max boundary degree <= 1/2 * min intra-block algebraic connectivity,
// strict when the inequality is strict (unique minimizer up to relabeling).
struct Certificate {
  Vector d_delta;
  Vector lambda2s;
  double max_d_delta = 0.0;
  double min_lambda2 = 0.0;
  double ratio_r = 0.0;   // +inf when min_lambda2 == 0
  double margin = 0.0;    // 1/2 * min_lambda2 - max_d_delta
  bool passes = false;
  bool strict = false;
  std::vector<int> singleton_blocks;
};

Certificate certificate(const WeightedGraph& g, const Partition& p);

// cut(S, V-S) >= lambda2(L) |S| |V-S| / |V|.
struct DensityCheck {
  double bound = 0.0;
  double actual = 0.0;
  bool holds = true;
};

DensityCheck density_lower_bound_check(const WeightedGraph& g, std::span<const int> subset);

}  // namespace speccert
