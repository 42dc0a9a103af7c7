#include "speccert/rounding.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "speccert/spectrum.hpp"

namespace speccert {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct LloydRun {
  std::vector<int> labels;
  double cost = kInf;
  int iterations = 0;
};

void check_kmeans_args(const Matrix& points, int k, int restarts) {
  if (k < 1 || k > points.rows()) {
    throw InputError("k-means needs 1 <= k <= n, got k=" + std::to_string(k));
  }
  if (restarts < 1) throw InputError("k-means needs at least one restart");
}

Matrix farthest_first(const Matrix& points, int k) {
  const Eigen::Index n = points.rows();
  std::vector<Eigen::Index> chosen;
  Eigen::Index first = 0;
  points.rowwise().squaredNorm().maxCoeff(&first);
  chosen.push_back(first);
  Vector nearest = (points.rowwise() - points.row(first)).rowwise().squaredNorm();
  while (static_cast<int>(chosen.size()) < k) {
    Eigen::Index next = 0;
    nearest.maxCoeff(&next);
    chosen.push_back(next);
    for (Eigen::Index i = 0; i < n; ++i)
      nearest(i) = std::min(nearest(i), (points.row(i) - points.row(next)).squaredNorm());
  }
  Matrix centroids(k, points.cols());
  for (int c = 0; c < k; ++c) centroids.row(c) = points.row(chosen[c]);
  return centroids;
}

Matrix random_init(const Matrix& points, int k, std::uint64_t seed, int restart) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(restart)};
  std::mt19937_64 rng(seq);
  const int n = static_cast<int>(points.rows());
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  Matrix centroids(k, points.cols());
  for (int c = 0; c < k; ++c) {
    std::uniform_int_distribution<int> pick(c, n - 1);
    std::swap(idx[c], idx[pick(rng)]);
    centroids.row(c) = points.row(idx[c]);
  }
  return centroids;
}

// Nearest centroid, lowest index on ties. Returns per-point squared distance.
Vector assign(const Matrix& points, const Matrix& centroids, std::vector<int>& labels) {
  const Eigen::Index n = points.rows();
  Vector dist(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double best = kInf;
    int arg = 0;
    for (Eigen::Index c = 0; c < centroids.rows(); ++c) {
      const double d = (points.row(i) - centroids.row(c)).squaredNorm();
      if (d < best) {
        best = d;
        arg = static_cast<int>(c);
      }
    }
    labels[i] = arg;
    dist(i) = best;
  }
  return dist;
}

// Moves the point farthest from its centroid (among clusters with > 1 member)
// into each empty cluster.
void repair_empty(const Matrix& points, Matrix& centroids, std::vector<int>& labels, Vector& dist) {
  const int k = static_cast<int>(centroids.rows());
  std::vector<int> count(k, 0);
  for (int l : labels) ++count[l];
  for (int c = 0; c < k; ++c) {
    if (count[c] > 0) continue;
    Eigen::Index far = -1;
    double best = -1.0;
    for (Eigen::Index i = 0; i < points.rows(); ++i) {
      if (count[labels[i]] > 1 && dist(i) > best) {
        best = dist(i);
        far = i;
      }
    }
    --count[labels[far]];
    labels[far] = c;
    ++count[c];
    dist(far) = 0.0;
    centroids.row(c) = points.row(far);
  }
}

void update_centroids(const Matrix& points, const std::vector<int>& labels, Matrix& centroids) {
  const int k = static_cast<int>(centroids.rows());
  centroids.setZero();
  std::vector<int> count(k, 0);
  for (Eigen::Index i = 0; i < points.rows(); ++i) {
    centroids.row(labels[i]) += points.row(i);
    ++count[labels[i]];
  }
  for (int c = 0; c < k; ++c) centroids.row(c) /= count[c];
}

double cost_of(const Matrix& points, const std::vector<int>& labels, const Matrix& centroids) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < points.rows(); ++i)
    s += (points.row(i) - centroids.row(labels[i])).squaredNorm();
  return s;
}

LloydRun lloyd(const Matrix& points, Matrix centroids, int max_iterations) {
  const Eigen::Index n = points.rows();
  LloydRun run;
  run.labels.assign(n, 0);
  Vector dist = assign(points, centroids, run.labels);
  repair_empty(points, centroids, run.labels, dist);
  update_centroids(points, run.labels, centroids);
  run.cost = cost_of(points, run.labels, centroids);

  std::vector<int> next(n);
  while (run.iterations < max_iterations) {
    ++run.iterations;
    dist = assign(points, centroids, next);
    repair_empty(points, centroids, next, dist);
    if (next == run.labels) break;
    run.labels.swap(next);
    update_centroids(points, run.labels, centroids);
    const double cost = cost_of(points, run.labels, centroids);
    if (cost > run.cost + 1e-12 * (1.0 + run.cost)) {
      throw std::logic_error("k-means objective increased during Lloyd iteration");
    }
    run.cost = cost;
  }
  return run;
}

LloydRun run_restart(const Matrix& points, int k, std::uint64_t seed, int restart,
                     const Tolerances& tol) {
  Matrix init = restart == 0 ? farthest_first(points, k) : random_init(points, k, seed, restart);
  return lloyd(points, std::move(init), tol.kmeans_max_iterations);
}

RoundingResult pick_best(std::vector<LloydRun>& runs, int k) {
  std::size_t best = 0;
  for (std::size_t r = 1; r < runs.size(); ++r)
    if (runs[r].cost < runs[best].cost) best = r;
  Partition p = Partition(std::move(runs[best].labels), k).canonical();
  return RoundingResult{std::move(p), runs[best].cost, runs[best].iterations,
                        static_cast<int>(runs.size()), {}};
}

}  // namespace

double kmeans_cost(const Matrix& points, const Partition& p) {
  if (points.rows() != p.size()) throw InputError("point count does not match partition");
  Matrix centroids(p.blocks(), points.cols());
  update_centroids(points, p.labels(), centroids);
  return cost_of(points, p.labels(), centroids);
}

RoundingResult kmeans_round(const Matrix& points, int k, std::uint64_t seed, int restarts,
                            const Tolerances& tol) {
  check_kmeans_args(points, k, restarts);
  std::vector<LloydRun> runs(restarts);
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
  for (int r = 0; r < restarts; ++r) {
    try {
      runs[r] = run_restart(points, k, seed, r, tol);
    } catch (...) {
#pragma omp critical(speccert_kmeans_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return pick_best(runs, k);
}

namespace serial {

RoundingResult kmeans_round(const Matrix& points, int k, std::uint64_t seed, int restarts,
                            const Tolerances& tol) {
  check_kmeans_args(points, k, restarts);
  std::vector<LloydRun> runs;
  runs.reserve(restarts);
  for (int r = 0; r < restarts; ++r) runs.push_back(run_restart(points, k, seed, r, tol));
  return pick_best(runs, k);
}

}  // namespace serial

RoundingResult fiedler_bisect(const WeightedGraph& g) {
  const int n = g.size();
  if (n < 2) throw InputError("Fiedler bisection needs n >= 2");
  const Vector f = fiedler(g);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return f(a) < f(b); });

  // Grow S one vertex at a time along the sorted order; cut updates in O(n).
  const Vector deg = g.degrees();
  Vector to_s = Vector::Zero(n);  // weight from each vertex into S
  double cut = 0.0;
  double best = kInf;
  int best_prefix = 1;
  for (int s = 1; s < n; ++s) {
    const int v = order[s - 1];
    cut += deg(v) - 2.0 * to_s(v);
    to_s += g.weights().col(v);
    const double value = cut / s + cut / (n - s);
    if (value < best) {
      best = value;
      best_prefix = s;
    }
  }

  std::vector<int> labels(n, 1);
  for (int s = 0; s < best_prefix; ++s) labels[order[s]] = 0;
  Partition p = Partition(std::move(labels), 2).canonical();
  RoundingResult out{p, ratio_cut(g, p), 1, 1, {}};
  if (!is_connected(g)) out.warnings.push_back("graph is disconnected; Fiedler vector is not unique");
  return out;
}

RoundingResult spectral_cluster(const WeightedGraph& g, int k, RoundingMethod method,
                                std::uint64_t seed, int restarts) {
  if (k < 1 || k > g.size()) throw InputError("spectral clustering needs 1 <= k <= n");
  if (method == RoundingMethod::fiedler) {
    if (k != 2) throw InputError("Fiedler bisection requires k = 2");
    return fiedler_bisect(g);
  }
  const auto map = eigenmap(g, k);
  return kmeans_round(map.U, k, seed, restarts);
}

ProximityReport proximity_check(const Matrix& points, const Partition& p) {
  if (points.rows() != p.size()) throw InputError("point count does not match partition");
  const int k = p.blocks();
  const Eigen::Index d = points.cols();
  const auto members = p.members();

  ProximityReport rep;
  rep.centroids.resize(k, d);
  rep.spectral_norms.resize(k);
  rep.frobenius_norms.resize(k);
  for (int b = 0; b < k; ++b) {
    const auto& mb = members[b];
    Matrix block(static_cast<Eigen::Index>(mb.size()), d);
    for (std::size_t i = 0; i < mb.size(); ++i) block.row(static_cast<Eigen::Index>(i)) = points.row(mb[i]);
    rep.centroids.row(b) = block.colwise().mean();
    const Matrix centered = block.rowwise() - rep.centroids.row(b);
    rep.frobenius_norms(b) = centered.norm();
    // ||Xc||_2^2 is the top eigenvalue of the d x d Gram matrix.
    const Matrix gram = centered.transpose() * centered;
    rep.spectral_norms(b) = d == 0 ? 0.0 : std::sqrt(std::max(0.0, sym_eig(gram).values(d - 1)));
  }
  const double spread = rep.spectral_norms.squaredNorm();
  const double spread_f = rep.frobenius_norms.squaredNorm();

  rep.holds = true;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      PairProximity pr;
      pr.i = i;
      pr.j = j;
      const double inv = 1.0 / members[i].size() + 1.0 / members[j].size();
      pr.rhs = 0.5 * std::sqrt(spread * inv);
      pr.rhs_frobenius = 0.5 * std::sqrt(spread_f * inv);
      const Vector diff = (rep.centroids.row(j) - rep.centroids.row(i)).transpose();
      const double len = diff.norm();
      if (!(len > 0.0)) {
        pr.degenerate = true;
      } else {
        const Vector normal = diff / len;
        const Vector mid = 0.5 * (rep.centroids.row(i) + rep.centroids.row(j)).transpose();
        const double offset = normal.dot(mid);
        pr.separated = true;
        pr.xi = kInf;
        for (int side = 0; side < 2; ++side) {
          const int b = side == 0 ? i : j;
          for (int v : members[b]) {
            const double s = points.row(v).dot(normal) - offset;
            if ((side == 0 && !(s < 0.0)) || (side == 1 && !(s > 0.0))) pr.separated = false;
            pr.xi = std::min(pr.xi, std::abs(s));
          }
        }
        pr.holds = pr.separated && pr.xi > pr.rhs;
      }
      rep.holds = rep.holds && pr.holds;
      rep.pairs.push_back(pr);
    }
  }
  return rep;
}

MarginBound hyperplane_margin_bound(const Vector& c1, const Vector& c2, double radius,
                                    const Vector& x, const Vector& y) {
  const Eigen::Index dim = c1.size();
  if (c2.size() != dim || x.size() != dim || y.size() != dim) {
    throw InputError("hyperplane margin needs points of equal dimension");
  }
  if (!(radius >= 0.0)) throw InputError("radius must be >= 0");
  const double slack = 1e-12 * std::max(1.0, radius);
  if ((x - c1).norm() > radius + slack || (y - c2).norm() > radius + slack) {
    throw InputError("x and y must lie in their balls");
  }
  const Vector diff = y - x;
  const double len = diff.norm();
  if (!(len > 0.0)) throw InputError("x = y leaves the bisecting hyperplane undefined");
  const Vector normal = diff / len;
  const double offset = normal.dot(0.5 * (x + y));
  const double d1 = std::max(0.0, std::abs(normal.dot(c1) - offset) - radius);
  const double d2 = std::max(0.0, std::abs(normal.dot(c2) - offset) - radius);
  return {std::min(d1, d2), 0.5 * (c1 - c2).norm() - 3.0 * radius};
}

}  // namespace speccert
