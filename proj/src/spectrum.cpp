#include "speccert/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace speccert {

namespace {

double offdiag_norm(const Matrix& a) {
  double s = 0.0;
  const Eigen::Index n = a.rows();
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

}  // namespace

void normalize_sign(Eigen::Ref<Vector> v) {
  if (v.size() == 0) return;
  const double top = v.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) >= top - 1e-12 * std::max(1.0, top)) {
      if (v(i) < 0.0) v = -v;
      return;
    }
  }
}

EigenDecomposition sym_eig(const Matrix& input, const Tolerances& tol) {
  if (input.rows() != input.cols()) throw InputError("sym_eig needs a square matrix");
  const Eigen::Index n = input.rows();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      if (!(std::abs(input(i, j) - input(j, i)) <= tol.symmetry)) {
        throw InputError("sym_eig input not symmetric at (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
      }

  Matrix a = 0.5 * (input + input.transpose());
  Matrix v = Matrix::Identity(n, n);
  const double scale = a.norm();
  int sweep = 0;

  if (scale > 0.0) {
    for (;; ++sweep) {
      if (offdiag_norm(a) <= tol.jacobi_offdiag * scale) break;
      if (sweep >= tol.jacobi_max_sweeps) {
        throw std::runtime_error("Jacobi eigensolver did not converge in " +
                                 std::to_string(tol.jacobi_max_sweeps) + " sweeps");
      }
      for (Eigen::Index p = 0; p < n - 1; ++p) {
        for (Eigen::Index q = p + 1; q < n; ++q) {
          const double apq = a(p, q);
          const double app = a(p, p);
          const double aqq = a(q, q);
          // Negligible relative to both diagonal entries: annihilate without rotating.
          if (sweep > 3 && std::abs(app) + 100.0 * std::abs(apq) == std::abs(app) &&
              std::abs(aqq) + 100.0 * std::abs(apq) == std::abs(aqq)) {
            a(p, q) = a(q, p) = 0.0;
            continue;
          }
          if (apq == 0.0) continue;
          const double theta = (aqq - app) / (2.0 * apq);
          double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
          const double c = 1.0 / std::sqrt(t * t + 1.0);
          const double s = t * c;

          double* colp = a.col(p).data();
          double* colq = a.col(q).data();
          for (Eigen::Index k = 0; k < n; ++k) {
            if (k == p || k == q) continue;
            const double akp = colp[k];
            const double akq = colq[k];
            const double np = c * akp - s * akq;
            const double nq = s * akp + c * akq;
            colp[k] = np;
            colq[k] = nq;
            a(p, k) = np;
            a(q, k) = nq;
          }
          a(p, p) = app - t * apq;
          a(q, q) = aqq + t * apq;
          a(p, q) = a(q, p) = 0.0;

          double* vp = v.col(p).data();
          double* vq = v.col(q).data();
          for (Eigen::Index k = 0; k < n; ++k) {
            const double x = vp[k];
            const double y = vq[k];
            vp[k] = c * x - s * y;
            vq[k] = s * x + c * y;
          }
        }
      }
    }
  }

  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index x, Eigen::Index y) { return a(x, x) < a(y, y); });

  EigenDecomposition out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  out.sweeps = sweep;
  for (Eigen::Index j = 0; j < n; ++j) {
    out.values(j) = a(order[j], order[j]);
    out.vectors.col(j) = v.col(order[j]);
    normalize_sign(out.vectors.col(j));
  }
  return out;
}

Eigenmap eigenmap(const WeightedGraph& g, int k) {
  if (k < 1 || k > g.size()) {
    throw InputError("eigenmap needs 1 <= k <= n, got k=" + std::to_string(k));
  }
  auto eig = sym_eig(laplacian(g));
  return {eig.vectors.leftCols(k), eig.values.head(k)};
}

double lambda2(const WeightedGraph& g) {
  if (g.size() < 2) throw InputError("algebraic connectivity needs n >= 2");
  if (!is_connected(g)) return 0.0;
  return std::max(0.0, sym_eig(laplacian(g)).values(1));
}

Vector fiedler(const WeightedGraph& g) {
  const int n = g.size();
  if (n < 2) throw InputError("Fiedler vector needs n >= 2");
  // Lifting the all-ones direction above the spectrum makes the smallest
  // eigenpair the minimum over the complement of that direction.
  const double lift = 2.0 * g.max_degree() + 1.0;
  Matrix m = laplacian(g);
  m.array() += lift / n;
  auto eig = sym_eig(m);
  Vector f = eig.vectors.col(0);
  f.array() -= f.mean();
  f.normalize();
  normalize_sign(f);
  return f;
}

}  // namespace speccert
