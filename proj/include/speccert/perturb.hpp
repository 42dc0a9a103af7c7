#pragma once

#include <optional>

#include "speccert/graph.hpp"

namespace speccert {

// W = W_iso + W_delta where W_iso keeps only intra-block weights.
struct IsoDelta {
  WeightedGraph w_iso;
  Matrix l_delta;  // Laplacian of the cross-block weights
};

IsoDelta split_iso_delta(const WeightedGraph& g, const Partition& p);

// Column b is the normalized indicator of block b.
Matrix canonical_uiso(const Partition& p);

// Orthogonal Procrustes: rotation = argmin_{V in O(k)} ||U V - U_iso||_F,
// computed as V1 V2^T from the SVD U^T U_iso = V1 S V2^T.
struct ProcrustesResult {
  Matrix rotation;
  Matrix aligned;   // U * rotation
  Vector singular_values;
  bool degenerate = false;  // smallest singular value below 1e-8
};

ProcrustesResult procrustes_align(const Matrix& u, const Matrix& u_iso);

// max_i ||M_{i.}||_2
double two_to_inf_norm(const Matrix& m);
// Induced l-inf operator norm: max absolute row sum.
double inf_norm(const Matrix& m);

// ||U V~ - U_iso||_{2,inf} with V~ from procrustes_align.
double two_to_inf_error(const Matrix& u, const Matrix& u_iso);

struct PerturbationReport {
  int n = 0;
  int k = 0;
  double c = 0.0;             // max_i n / |V_i|
  double r = 0.0;             // max d_delta / min lambda2(L_i)
  double threshold = 0.0;     // 1 / (16 (1 + c) ln n)
  bool precondition_ok = false;
  std::optional<double> bound;  // 32 sqrt(c) (r^2 + r ln n) / sqrt(n)
  double measured = 0.0;      // ||U V~ - U_iso||_{2,inf}
  double gap_lower = 0.0;     // min lambda2(L_i) / (2 ln n)
  double gap_lower_per_block = 0.0;  // min_i lambda2(L_i) / (2 ln |V_i|)
  double mu = 0.0;            // sqrt(c)
  double max_d_delta = 0.0;
  double min_lambda2 = 0.0;
  double eigengap = 0.0;      // lambda_{k+1}(L) - lambda_k(L)
  bool procrustes_degenerate = false;
};

// Throws HypothesisError when some block has fewer than 3 vertices or the
// eigengap of L at k is numerically zero.
PerturbationReport theoretical_bound(const WeightedGraph& g, const Partition& p);

// lambda2(L) / (2 ln n); n >= 3.
double gap_lower_bound(const WeightedGraph& g);

// 4 M / D for 0/1-weighted connected graphs (M max degree, D hop diameter).
double gap_upper_bound_unweighted(const WeightedGraph& g);

inline constexpr int kGapExactMaxVertices = 200;

// inf over x orthogonal to 1 of ||L x||_inf / ||x||_inf, by one linear program
// per pinned coordinate (x_i = 1, |x_j| <= 1, sum x = 0, minimize t with
// |(Lx)_j| <= t). Pinned LPs run in parallel; min over i, lowest i on ties.
struct GapExactResult {
  double value = 0.0;
  Vector argmin;   // minimizing x, ||x||_inf = 1, sum x = 0
  int pinned = -1;
};

GapExactResult gap_exact_detail(const WeightedGraph& g);
double gap_exact(const WeightedGraph& g);

// The three l-inf gap quantities for the `gap` command: lower always (n >= 3),
// exact when n <= kGapExactMaxVertices, upper when 0/1-weighted and connected.
struct GapReport {
  double lower = 0.0;
  std::optional<double> exact;
  std::optional<double> upper;
};

GapReport gap_report(const WeightedGraph& g);

namespace serial {
// Reference implementation: pinned LPs solved one after another.
GapExactResult gap_exact_detail(const WeightedGraph& g);
}  // namespace serial

}  // namespace speccert
