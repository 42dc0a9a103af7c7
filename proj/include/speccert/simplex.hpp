#pragma once

#include <vector>

#include "speccert/config.hpp"
#include "speccert/graph.hpp"

namespace speccert {

enum class Relation { less_equal, equal, greater_equal };

// minimize c^T x  subject to  A x (rel) b,  x >= 0.
struct LinearProgram {
  Matrix a;
  Vector b;
  std::vector<Relation> relations;
  Vector c;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  double objective = 0.0;
  Vector x;
  int pivots = 0;
};

// Dense two-phase tableau simplex with Bland's rule (lowest-index entering
// column, lowest-index leaving basic variable on ratio ties). Never cycles.
LpSolution solve_lp(const LinearProgram& lp, const Tolerances& tol = kDefaultTolerances);

}  // namespace speccert
