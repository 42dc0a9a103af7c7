#pragma once

namespace speccert {

// Numerical tolerances shared by every module. Defaults are the contract
// values; callers may override per call where an overload accepts one.
struct Tolerances {
  double symmetry = 1e-10;           // |a_ij - a_ji| accepted by sym_eig
  double jacobi_offdiag = 1e-12;     // stop when off(A)_F <= this * ||A||_F
  int jacobi_max_sweeps = 100;
  double zero_eigenvalue = 1e-8;     // eigenvalues below count as zero
  double certificate_compare = 1e-12;
  double oracle_uniqueness = 1e-9;
  double eigengap = 1e-9;            // lambda_{k+1} - lambda_k below -> refuse
  double lp_pivot = 1e-10;
  double lp_feasibility = 1e-9;
  int kmeans_max_iterations = 200;
};

inline constexpr Tolerances kDefaultTolerances{};

}  // namespace speccert
