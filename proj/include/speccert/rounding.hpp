#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "speccert/config.hpp"
#include "speccert/graph.hpp"

namespace speccert {

enum class RoundingMethod { fiedler, kmeans };

struct RoundingResult {
  Partition partition;
  double objective = 0.0;  // ratio cut (fiedler) or k-means cost (kmeans)
  int iterations = 0;
  int restarts_used = 0;
  std::vector<std::string> warnings;
};

inline constexpr int kDefaultRestarts = 10;

// Laplacian eigenmap followed by the chosen rounding. Deterministic for a fixed seed.
RoundingResult spectral_cluster(const WeightedGraph& g, int k, RoundingMethod method,
                                std::uint64_t seed, int restarts = kDefaultRestarts);

// Sort vertices by Fiedler entry (index breaks ties), scan all n-1 prefix
// splits and keep the one with the smallest ratio cut (first on ties).
RoundingResult fiedler_bisect(const WeightedGraph& g);

// Lloyd iterations from `restarts` initializations: restart 0 is farthest-first
// traversal from the max-norm point, the rest draw k distinct points using
// (seed, restart). Empty clusters are re-seeded at the point farthest from
// its centroid. Returns the lowest-cost run, lowest restart index on ties.
// Restarts run in parallel.
RoundingResult kmeans_round(const Matrix& points, int k, std::uint64_t seed,
                            int restarts = kDefaultRestarts,
                            const Tolerances& tol = kDefaultTolerances);

namespace serial {
RoundingResult kmeans_round(const Matrix& points, int k, std::uint64_t seed,
                            int restarts = kDefaultRestarts,
                            const Tolerances& tol = kDefaultTolerances);
}  // namespace serial

// Sum over clusters of squared distances to the cluster mean.
double kmeans_cost(const Matrix& points, const Partition& p);

// Proximity condition for a labeled point set: every pair of clusters lies on
// opposite sides of the bisecting hyperplane of their means, with margin
// xi > 1/2 sqrt(sum_l ||Xc_l||^2 (1/n_i + 1/n_j)), Xc_l the centered block.
struct PairProximity {
  int i = 0;
  int j = 0;
  bool separated = false;
  bool degenerate = false;  // coincident means; hyperplane undefined
  double xi = 0.0;
  double rhs = 0.0;            // spectral-norm right side
  double rhs_frobenius = 0.0;  // same with Frobenius norms (>= rhs)
  bool holds = false;
};

struct ProximityReport {
  Matrix centroids;            // k x d
  Vector spectral_norms;       // ||Xc_l||_2
  Vector frobenius_norms;      // ||Xc_l||_F
  std::vector<PairProximity> pairs;
  bool holds = false;
};

ProximityReport proximity_check(const Matrix& points, const Partition& p);

// Distance from the bisecting hyperplane of segment (x, y) to the union of the
// balls B(c1, radius), B(c2, radius), against the bound |c1 - c2| / 2 - 3 radius.
struct MarginBound {
  double margin = 0.0;
  double bound = 0.0;
};

MarginBound hyperplane_margin_bound(const Vector& c1, const Vector& c2, double radius,
                                    const Vector& x, const Vector& y);

}  // namespace speccert
