#pragma once

#include <cstdint>
#include <vector>

#include "speccert/graph.hpp"

namespace speccert {

struct PlantedGraph {
  WeightedGraph graph;
  Partition partition;
};

// 4n vertices in four groups of n. Groups (1,2) and (3,4) are fully joined at
// weight 1, groups 1-3 and 2-4 at weight c. The planted split is
// {groups 1,2} | {groups 3,4}.
PlantedGraph gen_example_blocks(int n, double c);

// Three blocks of sizes 3, 300, 300 with intra weights 1/|V_i| (so every
// block has algebraic connectivity 1), plus two 0.5 cross edges:
// (first of V1, first of V2) and (first of V3, second of V2).
PlantedGraph gen_unbalanced_example();

// Complete blocks at weight `intra`; one cross edge of weight `cross` joins the
// last vertex of block b to the first vertex of block b+1. The seed is
// accepted for interface stability and does not affect the output.
PlantedGraph gen_planted_blocks(const std::vector<int>& sizes, double intra, double cross,
                                std::uint64_t seed = 0);

WeightedGraph path_graph(int n);
WeightedGraph cycle_graph(int n);
WeightedGraph complete_graph(int n, double weight = 1.0);

}  // namespace speccert
