#pragma once

#include "speccert/config.hpp"
#include "speccert/graph.hpp"

namespace speccert {

// A = Q diag(values) Q^T, values ascending. Each column of Q has its
// largest-magnitude entry positive (first such index on ties).
struct EigenDecomposition {
  Vector values;
  Matrix vectors;
  int sweeps = 0;
};

// Cyclic Jacobi rotations in fixed row-major (p < q) order. Deterministic.
// Throws InputError when A is not square or not symmetric to tol.symmetry.
EigenDecomposition sym_eig(const Matrix& a, const Tolerances& tol = kDefaultTolerances);

// Laplacian eigenmap: orthonormal columns spanning the eigenspace of the k
// smallest Laplacian eigenvalues. Row i embeds vertex i in R^k.
struct Eigenmap {
  Matrix U;
  Vector values;
};

Eigenmap eigenmap(const WeightedGraph& g, int k);

// Algebraic connectivity. Exactly 0 for disconnected graphs.
double lambda2(const WeightedGraph& g);

// Unit eigenvector for lambda_2, orthogonal to the all-ones vector even when
// lambda_2 = lambda_1 = 0.
Vector fiedler(const WeightedGraph& g);

// Applies the sign convention used by sym_eig to one vector.
void normalize_sign(Eigen::Ref<Vector> v);

}  // namespace speccert
