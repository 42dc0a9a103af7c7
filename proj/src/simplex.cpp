#include "speccert/simplex.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace speccert {

namespace {

// Tableau rows 0..m-1 are constraints, column `rhs` holds b.
class Tableau {
 public:
  Tableau(Eigen::Index rows, Eigen::Index cols) : t_(Matrix::Zero(rows, cols + 1)), basis_(rows) {}

  Matrix& data() { return t_; }
  std::vector<Eigen::Index>& basis() { return basis_; }
  Eigen::Index rhs() const { return t_.cols() - 1; }

  void pivot(Eigen::Index row, Eigen::Index col) {
    t_.row(row) /= t_(row, col);
    for (Eigen::Index r = 0; r < t_.rows(); ++r) {
      if (r == row) continue;
      const double f = t_(r, col);
      if (f != 0.0) t_.row(r) -= f * t_.row(row);
    }
    basis_[row] = col;
  }

  // Reduced costs of `cost` (size = number of structural columns) w.r.t. the basis.
  Vector reduced_costs(const Vector& cost) const {
    Vector d = cost;
    for (Eigen::Index r = 0; r < t_.rows(); ++r) {
      const double cb = cost(basis_[r]);
      if (cb != 0.0) d -= cb * t_.row(r).head(cost.size()).transpose();
    }
    return d;
  }

  // Runs simplex iterations minimizing `cost`; columns with allowed[j] == false never enter.
  // Returns false when unbounded.
  bool optimize(const Vector& cost, const std::vector<char>& allowed, const Tolerances& tol,
                int& pivots) {
    const Eigen::Index ncols = cost.size();
    for (;;) {
      const Vector d = reduced_costs(cost);
      Eigen::Index enter = -1;
      for (Eigen::Index j = 0; j < ncols; ++j) {
        if (allowed[j] && d(j) < -tol.lp_pivot) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;

      Eigen::Index leave = -1;
      double best = std::numeric_limits<double>::infinity();
      for (Eigen::Index r = 0; r < t_.rows(); ++r) {
        const double a = t_(r, enter);
        if (a <= tol.lp_pivot) continue;
        const double ratio = t_(r, rhs()) / a;
        if (ratio < best - 1e-12 ||
            (std::abs(ratio - best) <= 1e-12 && leave >= 0 && basis_[r] < basis_[leave])) {
          best = ratio;
          leave = r;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
      if (++pivots > 1000000) throw std::runtime_error("simplex pivot limit exceeded");
    }
  }

 private:
  Matrix t_;
  std::vector<Eigen::Index> basis_;
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp, const Tolerances& tol) {
  const Eigen::Index m = lp.a.rows();
  const Eigen::Index nvar = lp.a.cols();
  if (lp.b.size() != m || static_cast<Eigen::Index>(lp.relations.size()) != m ||
      lp.c.size() != nvar) {
    throw InputError("linear program dimensions are inconsistent");
  }

  // Normalize to b >= 0.
  Matrix a = lp.a;
  Vector b = lp.b;
  std::vector<Relation> rel = lp.relations;
  for (Eigen::Index r = 0; r < m; ++r) {
    if (b(r) < 0.0) {
      a.row(r) = -a.row(r);
      b(r) = -b(r);
      if (rel[r] == Relation::less_equal) {
        rel[r] = Relation::greater_equal;
      } else if (rel[r] == Relation::greater_equal) {
        rel[r] = Relation::less_equal;
      }
    }
  }

  Eigen::Index nslack = 0;
  Eigen::Index nart = 0;
  for (auto r : rel) {
    if (r != Relation::equal) ++nslack;
    if (r != Relation::less_equal) ++nart;
  }
  const Eigen::Index ncols = nvar + nslack + nart;
  const Eigen::Index art0 = nvar + nslack;

  Tableau tab(m, ncols);
  Matrix& t = tab.data();
  t.block(0, 0, m, nvar) = a;
  t.col(ncols) = b;
  Eigen::Index s = nvar;
  Eigen::Index art = art0;
  for (Eigen::Index r = 0; r < m; ++r) {
    switch (rel[r]) {
      case Relation::less_equal:
        t(r, s) = 1.0;
        tab.basis()[r] = s++;
        break;
      case Relation::greater_equal:
        t(r, s++) = -1.0;
        t(r, art) = 1.0;
        tab.basis()[r] = art++;
        break;
      case Relation::equal:
        t(r, art) = 1.0;
        tab.basis()[r] = art++;
        break;
    }
  }

  LpSolution out;
  std::vector<char> allowed(ncols, 1);

  if (nart > 0) {
    Vector phase1 = Vector::Zero(ncols);
    phase1.tail(nart).setOnes();
    tab.optimize(phase1, allowed, tol, out.pivots);
    double infeas = 0.0;
    for (Eigen::Index r = 0; r < m; ++r)
      if (tab.basis()[r] >= art0) infeas += t(r, ncols);
    if (infeas > tol.lp_feasibility * std::max(1.0, b.lpNorm<Eigen::Infinity>())) {
      out.status = LpStatus::infeasible;
      return out;
    }
    // Drive zero-level artificials out of the basis where a structural pivot exists;
    // rows with none are redundant and stay inert.
    for (Eigen::Index r = 0; r < m; ++r) {
      if (tab.basis()[r] < art0) continue;
      for (Eigen::Index j = 0; j < art0; ++j) {
        if (std::abs(t(r, j)) > tol.lp_pivot) {
          tab.pivot(r, j);
          ++out.pivots;
          break;
        }
      }
    }
    for (Eigen::Index j = art0; j < ncols; ++j) allowed[j] = 0;
  }

  Vector cost = Vector::Zero(ncols);
  cost.head(nvar) = lp.c;
  if (!tab.optimize(cost, allowed, tol, out.pivots)) {
    out.status = LpStatus::unbounded;
    return out;
  }

  out.x = Vector::Zero(nvar);
  for (Eigen::Index r = 0; r < m; ++r) {
    const Eigen::Index j = tab.basis()[r];
    if (j < nvar) out.x(j) = t(r, ncols);
  }
  out.objective = lp.c.dot(out.x);
  out.status = LpStatus::optimal;
  return out;
}

}  // namespace speccert
