#include "speccert/perturb.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <stdexcept>
#include <string>

#include <Eigen/SVD>

#include "speccert/certify.hpp"
#include "speccert/config.hpp"
#include "speccert/simplex.hpp"
#include "speccert/spectrum.hpp"

namespace speccert {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

IsoDelta split_iso_delta(const WeightedGraph& g, const Partition& p) {
  require_compatible(g, p);
  const int n = g.size();
  Matrix iso = Matrix::Zero(n, n);
  Matrix cross = Matrix::Zero(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      if (p.label(i) == p.label(j)) {
        iso(i, j) = g.weight(i, j);
      } else {
        cross(i, j) = g.weight(i, j);
      }
    }
  return {WeightedGraph(std::move(iso)), laplacian(WeightedGraph(std::move(cross)))};
}

Matrix canonical_uiso(const Partition& p) {
  const auto sizes = p.block_sizes();
  Matrix u = Matrix::Zero(p.size(), p.blocks());
  for (int v = 0; v < p.size(); ++v) {
    const int b = p.label(v);
    u(v, b) = 1.0 / std::sqrt(static_cast<double>(sizes[b]));
  }
  return u;
}

ProcrustesResult procrustes_align(const Matrix& u, const Matrix& u_iso) {
  if (u.rows() != u_iso.rows() || u.cols() != u_iso.cols()) {
    throw InputError("procrustes_align needs matrices of equal shape");
  }
  const Matrix cross = u.transpose() * u_iso;
  Eigen::JacobiSVD<Matrix> svd(cross, Eigen::ComputeFullU | Eigen::ComputeFullV);
  ProcrustesResult out;
  out.rotation = svd.matrixU() * svd.matrixV().transpose();
  out.aligned = u * out.rotation;
  out.singular_values = svd.singularValues();
  out.degenerate = out.singular_values.size() > 0 &&
                   out.singular_values(out.singular_values.size() - 1) < 1e-8;
  return out;
}

double two_to_inf_norm(const Matrix& m) {
  return m.rows() == 0 ? 0.0 : m.rowwise().norm().maxCoeff();
}

double inf_norm(const Matrix& m) {
  return m.rows() == 0 ? 0.0 : m.cwiseAbs().rowwise().sum().maxCoeff();
}

double two_to_inf_error(const Matrix& u, const Matrix& u_iso) {
  return two_to_inf_norm(procrustes_align(u, u_iso).aligned - u_iso);
}

PerturbationReport theoretical_bound(const WeightedGraph& g, const Partition& p) {
  require_compatible(g, p);
  const int n = g.size();
  const int k = p.blocks();
  if (n < 3) throw HypothesisError("two-to-infinity bound needs n >= 3");
  const auto sizes = p.block_sizes();
  for (int b = 0; b < k; ++b) {
    if (sizes[b] < 3) {
      throw HypothesisError("block " + std::to_string(b) + " has " + std::to_string(sizes[b]) +
                            " vertices; the two-to-infinity bound needs every block >= 3");
    }
  }

  PerturbationReport rep;
  rep.n = n;
  rep.k = k;
  const int smallest = *std::min_element(sizes.begin(), sizes.end());
  rep.c = static_cast<double>(n) / smallest;
  rep.mu = std::sqrt(rep.c);

  rep.max_d_delta = boundary_degrees(g, p).maxCoeff();
  const auto intra = intra_connectivities(g, p);
  rep.min_lambda2 = intra.lambda2s.minCoeff();
  rep.r = rep.min_lambda2 > 0.0 ? rep.max_d_delta / rep.min_lambda2 : kInf;

  const double log_n = std::log(static_cast<double>(n));
  rep.threshold = 1.0 / (16.0 * (1.0 + rep.c) * log_n);
  rep.precondition_ok = rep.r <= rep.threshold;
  if (rep.precondition_ok) {
    rep.bound = 32.0 * std::sqrt(rep.c) * (rep.r * rep.r + rep.r * log_n) / std::sqrt(n);
  }
  rep.gap_lower = rep.min_lambda2 / (2.0 * log_n);
  rep.gap_lower_per_block = kInf;
  for (int b = 0; b < k; ++b) {
    rep.gap_lower_per_block = std::min(
        rep.gap_lower_per_block, intra.lambda2s(b) / (2.0 * std::log(static_cast<double>(sizes[b]))));
  }

  const auto eig = sym_eig(laplacian(g));
  rep.eigengap = k < n ? eig.values(k) - eig.values(k - 1) : kInf;
  if (rep.eigengap < kDefaultTolerances.eigengap) {
    throw HypothesisError("eigengap at k=" + std::to_string(k) +
                          " is numerically zero; the eigenmap is not a well-defined subspace");
  }
  const auto aligned = procrustes_align(eig.vectors.leftCols(k), canonical_uiso(p));
  rep.measured = two_to_inf_norm(aligned.aligned - canonical_uiso(p));
  rep.procrustes_degenerate = aligned.degenerate;
  return rep;
}

double gap_lower_bound(const WeightedGraph& g) {
  const int n = g.size();
  if (n < 3) throw InputError("gap lower bound needs n >= 3");
  return lambda2(g) / (2.0 * std::log(static_cast<double>(n)));
}

double gap_upper_bound_unweighted(const WeightedGraph& g) {
  if (!g.is_unweighted()) throw InputError("4M/D bound applies to 0/1-weighted graphs only");
  if (g.size() < 2) throw InputError("4M/D bound needs n >= 2");
  const int diameter = unweighted_diameter(g);
  if (diameter < 0) throw InputError("4M/D bound needs a connected graph");
  return 4.0 * g.max_degree() / diameter;
}

namespace {

// Substituting y_j = x_j + 1 in [0, 2] for j != pinned, with the last column t:
//   (Lx)_r = sum_{j != i} L_rj y_j + 2 L_ri   (rows of L sum to zero)
struct PinnedResult {
  double value = kInf;
  Vector x;
};

PinnedResult solve_pinned(const Matrix& l, int pinned) {
  const int n = static_cast<int>(l.rows());
  const int nv = n;  // n-1 free coordinates plus t
  const int t_col = n - 1;
  LinearProgram lp;
  lp.a = Matrix::Zero(3 * n, nv);
  lp.b = Vector::Zero(3 * n);
  lp.relations.assign(3 * n, Relation::less_equal);
  lp.c = Vector::Zero(nv);
  lp.c(t_col) = 1.0;

  auto var = [pinned](int j) { return j < pinned ? j : j - 1; };
  for (int r = 0; r < n; ++r) {
    for (int j = 0; j < n; ++j) {
      if (j == pinned) continue;
      lp.a(r, var(j)) = l(r, j);
      lp.a(n + r, var(j)) = -l(r, j);
    }
    lp.a(r, t_col) = -1.0;
    lp.a(n + r, t_col) = -1.0;
    lp.b(r) = -2.0 * l(r, pinned);
    lp.b(n + r) = 2.0 * l(r, pinned);
  }
  // sum_{j != i} y_j = n - 2
  const int eq = 2 * n;
  for (int j = 0; j < n; ++j)
    if (j != pinned) lp.a(eq, var(j)) = 1.0;
  lp.b(eq) = n - 2.0;
  lp.relations[eq] = Relation::equal;
  // y_j <= 2
  int row = eq + 1;
  for (int j = 0; j < n; ++j) {
    if (j == pinned) continue;
    lp.a(row, var(j)) = 1.0;
    lp.b(row) = 2.0;
    ++row;
  }

  const auto sol = solve_lp(lp);
  if (sol.status != LpStatus::optimal) {
    throw std::logic_error("pinned-coordinate LP for the l-inf gap did not solve");
  }
  PinnedResult out;
  out.x.resize(n);
  for (int j = 0; j < n; ++j) out.x(j) = j == pinned ? 1.0 : sol.x(var(j)) - 1.0;
  out.value = sol.objective;
  return out;
}

void check_gap_input(const WeightedGraph& g) {
  if (g.size() < 2) throw InputError("l-inf gap needs n >= 2");
  if (g.size() > kGapExactMaxVertices) {
    throw InputError("exact l-inf gap is limited to n <= " + std::to_string(kGapExactMaxVertices) +
                     " (got " + std::to_string(g.size()) + ")");
  }
}

GapExactResult reduce(std::vector<PinnedResult>& results) {
  GapExactResult best;
  best.value = kInf;
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (results[i].value < best.value) {
      best.value = results[i].value;
      best.pinned = static_cast<int>(i);
    }
  }
  best.argmin = std::move(results[best.pinned].x);
  best.value = std::max(0.0, best.value);
  return best;
}

}  // namespace

GapExactResult gap_exact_detail(const WeightedGraph& g) {
  check_gap_input(g);
  const Matrix l = laplacian(g);
  const int n = g.size();
  std::vector<PinnedResult> results(n);
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < n; ++i) {
    try {
      results[i] = solve_pinned(l, i);
    } catch (...) {
#pragma omp critical(speccert_gap_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return reduce(results);
}

double gap_exact(const WeightedGraph& g) { return gap_exact_detail(g).value; }

GapReport gap_report(const WeightedGraph& g) {
  GapReport rep;
  rep.lower = gap_lower_bound(g);
  if (g.size() <= kGapExactMaxVertices) rep.exact = gap_exact(g);
  if (g.is_unweighted() && is_connected(g)) rep.upper = gap_upper_bound_unweighted(g);
  return rep;
}

namespace serial {

GapExactResult gap_exact_detail(const WeightedGraph& g) {
  check_gap_input(g);
  const Matrix l = laplacian(g);
  const int n = g.size();
  std::vector<PinnedResult> results(n);
  for (int i = 0; i < n; ++i) results[i] = solve_pinned(l, i);
  return reduce(results);
}

}  // namespace serial

}  // namespace speccert
