// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/QR>

#include "speccert/certify.hpp"
#include "speccert/generators.hpp"
#include "speccert/oracle.hpp"
#include "speccert/perturb.hpp"
#include "speccert/rounding.hpp"
#include "speccert/spectrum.hpp"
#include "support/random_graphs.hpp"

using namespace speccert;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Records the first failure message; later checks still run.
class Checker {
 public:
  void expect(bool cond, const std::string& what) {
    if (cond) return;
    if (ok_) first_ = what;
    ok_ = false;
    ++failures_;
  }
  Outcome outcome(const std::string& summary) const {
    if (ok_) return {true, summary};
    return {false, first_ + " (" + std::to_string(failures_) + " failed checks)"};
  }

 private:
  bool ok_ = true;
  int failures_ = 0;
  std::string first_;
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

Outcome ac1() {
  Checker ck;
  const auto ex = gen_example_blocks(2, 0.9);
  const auto cert = certificate(ex.graph, ex.partition);
  ck.expect(std::abs(cert.max_d_delta - 1.8) <= 1e-9, "max d_delta != 1.8");
  ck.expect(std::abs(cert.min_lambda2 - 4.0) <= 1e-9, "min lambda2 != 4");
  ck.expect(cert.passes, "certificate does not pass");
  const auto o = min_ratio_cut_bruteforce(ex.graph, 2);
  ck.expect(o.partitions_examined == 127, "oracle did not examine 127 partitions");
  ck.expect(o.best.same_up_to_relabeling(ex.partition), "oracle minimizer is not the planted split");
  ck.expect(o.unique, "oracle minimizer is not unique");
  ck.expect(std::abs(o.value - ratio_cut(ex.graph, ex.partition)) <= 1e-9, "oracle value mismatch");
  return ck.outcome("passes (1.8 <= 2), oracle: planted split unique over 127, value " + fmt(o.value));
}

Outcome ac2() {
  Checker ck;
  const auto ex = gen_example_blocks(2, 1.2);
  const auto cert = certificate(ex.graph, ex.partition);
  ck.expect(!cert.passes, "certificate passes");
  const auto o = min_ratio_cut_bruteforce(ex.graph, 2);
  // {v1, v2, v5, v6} in one-based numbering.
  const Partition alternative({0, 0, 1, 1, 0, 0, 1, 1}, 2);
  ck.expect(o.best.same_up_to_relabeling(alternative), "oracle minimizer is not {v1,v2,v5,v6}");
  const double planted = ratio_cut(ex.graph, ex.partition);
  ck.expect(o.value < planted - 1e-9, "alternative is not strictly smaller");
  return ck.outcome("fails (2.4 > 2), oracle picks {v1,v2,v5,v6}: " + fmt(o.value) + " < planted " +
                    fmt(planted));
}

Outcome ac3() {
  Checker ck;
  int checked = 0;
  double worst_slack = INFINITY;
  auto check = [&](const WeightedGraph& g, const std::string& name) {
    const double lo = gap_lower_bound(g);
    const double ex = gap_exact(g);
    const double hi = std::min(lambda2(g), gap_upper_bound_unweighted(g));
    ck.expect(lo - 1e-9 <= ex, name + ": gap_exact below lower bound");
    ck.expect(ex <= hi + 1e-9, name + ": gap_exact above min(lambda2, 4M/D)");
    worst_slack = std::min({worst_slack, ex - lo, hi - ex});
    ++checked;
  };
  for (int n = 3; n <= 30; ++n) check(path_graph(n), "P" + std::to_string(n));
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> size(3, 30);
  for (int t = 0; t < 20; ++t) check(testing::random_connected_unweighted(rng, size(rng)), "random #" + std::to_string(t));
  return ck.outcome(std::to_string(checked) + " graphs, min slack " + fmt(worst_slack));
}

Outcome ac4() {
  Checker ck;
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> size(3, 50);
  std::uniform_real_distribution<double> dens(0.1, 0.9);
  std::normal_distribution<double> nd(0.0, 1.0);
  long long trials = 0;
  int violations = 0;
  double min_ratio = INFINITY;
  for (int t = 0; t < 200; ++t) {
    const int n = size(rng);
    const auto g = testing::random_weighted_graph(rng, n, dens(rng));
    const Matrix l = laplacian(g);
    const double bound = lambda2(g) / (2.0 * std::log(static_cast<double>(n)));
    for (int s = 0; s < 100; ++s) {
      Vector x = Vector::NullaryExpr(n, [&] { return nd(rng); });
      x.array() -= x.mean();
      const double lhs = (l * x).cwiseAbs().maxCoeff();
      const double xi = x.cwiseAbs().maxCoeff();
      if (xi > 0.0 && bound > 0.0) min_ratio = std::min(min_ratio, lhs / xi / bound);
      if (lhs < bound * xi - 1e-9) ++violations;
      ++trials;
    }
  }
  ck.expect(violations == 0, std::to_string(violations) + " violations");
  return ck.outcome(std::to_string(trials) + " (L, x) pairs, 0 violations, min ratio to bound " +
                    fmt(min_ratio));
}

Outcome ac5() {
  Checker ck;
  const std::vector<std::vector<int>> size_sets{{20, 30, 50}, {10, 10, 10}, {5, 20, 20, 30}};
  const double fractions[] = {0.95, 0.75, 0.5, 0.25, 0.1, 0.9, 0.6};
  const double intras[] = {1.0, 0.5, 2.0, 0.8};
  double worst = 0.0;
  for (int t = 0; t < 20; ++t) {
    const auto& sizes = size_sets[t % 3];
    const double intra = intras[t % 4];
    const double f = fractions[t % 7];
    // r = cross / (intra * min block size); pick cross so r = f * threshold.
    const auto probe = gen_planted_blocks(sizes, intra, 1.0, t);
    const auto pr = theoretical_bound(probe.graph, probe.partition);
    const double cross = f * pr.threshold * pr.min_lambda2;
    const auto pg = gen_planted_blocks(sizes, intra, cross, t);
    const auto rep = theoretical_bound(pg.graph, pg.partition);
    const std::string tag = "instance " + std::to_string(t);
    ck.expect(rep.precondition_ok, tag + ": precondition fails (r=" + fmt(rep.r) + ")");
    if (rep.bound) {
      ck.expect(rep.measured <= *rep.bound + 1e-9,
                tag + ": measured " + fmt(rep.measured) + " > bound " + fmt(*rep.bound));
      worst = std::max(worst, rep.measured / *rep.bound);
    }
    const auto res = spectral_cluster(pg.graph, pg.partition.blocks(), RoundingMethod::kmeans, 1);
    ck.expect(res.partition.same_up_to_relabeling(pg.partition), tag + ": planted partition not recovered");
  }
  return ck.outcome("20 instances, measured/bound <= " + fmt(worst) + ", all planted partitions recovered");
}

Outcome ac6() {
  Checker ck;
  const auto ub = gen_unbalanced_example();
  const auto ic = intra_connectivities(ub.graph, ub.partition);
  for (int b = 0; b < 3; ++b)
    ck.expect(std::abs(ic.lambda2s(b) - 1.0) <= 1e-6, "block " + std::to_string(b) + " lambda2 " + fmt(ic.lambda2s(b)));
  const auto cert = certificate(ub.graph, ub.partition);
  ck.expect(std::abs(cert.max_d_delta - 0.5) <= 1e-12, "max d_delta != 0.5");
  const auto rep = theoretical_bound(ub.graph, ub.partition);
  const double threshold = 1.0 / (16.0 * 202.0 * std::log(603.0));
  ck.expect(std::abs(rep.threshold - threshold) <= 1e-15, "threshold mismatch");
  ck.expect(std::abs(rep.r - 0.5) <= 1e-9 && !rep.precondition_ok, "precondition does not fail at r = 0.5");
  const auto res = spectral_cluster(ub.graph, 3, RoundingMethod::kmeans, 1);
  ck.expect(res.partition.same_up_to_relabeling(ub.partition), "planted 3-way split not recovered");
  return ck.outcome("lambda2 = 1 per block, r = 0.5 > " + fmt(threshold) +
                    ", k-means recovers 3/300/300; measured 2->inf error " + fmt(rep.measured));
}

Outcome ac7() {
  Checker ck;
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> size(2, 40);
  std::uniform_real_distribution<double> dens(0.05, 1.0);
  int violations = 0;
  double min_slack = INFINITY;
  for (int t = 0; t < 500; ++t) {
    const int n = size(rng);
    const auto g = testing::random_weighted_graph(rng, n, dens(rng));
    const auto s = testing::random_subset(rng, n);
    const auto d = density_lower_bound_check(g, s);
    if (!d.holds) ++violations;
    min_slack = std::min(min_slack, d.actual - d.bound);
  }
  ck.expect(violations == 0, std::to_string(violations) + " violations");
  return ck.outcome("500 (graph, subset) pairs, 0 violations, min slack " + fmt(min_slack));
}

Matrix random_orthonormal(std::mt19937_64& rng, int n, int k) {
  std::normal_distribution<double> nd(0.0, 1.0);
  Eigen::HouseholderQR<Matrix> qr(Matrix::NullaryExpr(n, k, [&] { return nd(rng); }));
  return qr.householderQ() * Matrix::Identity(n, k);
}

Outcome ac8() {
  Checker ck;
  std::mt19937_64 rng(8);
  double worst_recovery = 0.0;
  for (int t = 0; t < 100; ++t) {
    const int k = 1 + t % 5;
    const int n = k + 2 + t % 20;
    const Matrix u = random_orthonormal(rng, n, k);
    const Matrix uiso = random_orthonormal(rng, n, k);
    const Matrix v = testing::random_orthogonal(rng, k);
    const auto pa = procrustes_align(u, uiso);
    ck.expect((pa.aligned - uiso).norm() <= (u * v - uiso).norm() + 1e-9,
              "triple " + std::to_string(t) + ": Procrustes not optimal");
    const auto rec = procrustes_align(uiso * v, uiso);
    const double err = (rec.aligned - uiso).cwiseAbs().maxCoeff();
    worst_recovery = std::max(worst_recovery, err);
    ck.expect(err <= 1e-9, "triple " + std::to_string(t) + ": rotation not recovered");
  }
  return ck.outcome("100 triples optimal, worst recovery error " + fmt(worst_recovery));
}

Outcome ac9() {
  Checker ck;
  std::mt19937_64 rng(9);
  std::normal_distribution<double> nd(0.0, 1.0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int violations = 0;
  int drawn = 0;
  while (drawn < 1000) {
    const int dim = 1 + drawn % 6;
    const Vector c1 = Vector::NullaryExpr(dim, [&] { return 5.0 * nd(rng); });
    const Vector c2 = Vector::NullaryExpr(dim, [&] { return 5.0 * nd(rng); });
    const double r = u(rng) * 0.5 * (c1 - c2).norm();
    auto in_ball = [&](const Vector& c) {
      Vector dir = Vector::NullaryExpr(dim, [&] { return nd(rng); });
      dir /= dir.norm();
      return Vector(c + r * std::pow(u(rng), 1.0 / dim) * dir);
    };
    const Vector x = in_ball(c1);
    const Vector y = in_ball(c2);
    if ((x - y).norm() == 0.0) continue;
    const auto m = hyperplane_margin_bound(c1, c2, r, x, y);
    if (m.margin < m.bound - 1e-9) ++violations;
    ++drawn;
  }
  ck.expect(violations == 0, std::to_string(violations) + " violations");
  return ck.outcome("1000 configurations, 0 violations");
}

Outcome ac10() {
  Checker ck;
  std::mt19937_64 rng(10);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + t % 60;
    const Matrix a = testing::random_symmetric(rng, n, std::pow(10.0, (t % 7) - 3));
    const auto e = sym_eig(a);
    const double scale = 1.0 + a.norm();
    const double res = (a * e.vectors - e.vectors * e.values.asDiagonal()).norm();
    const double orth = (e.vectors.transpose() * e.vectors - Matrix::Identity(n, n)).norm();
    worst = std::max(worst, std::max(res, orth) / scale);
    ck.expect(res <= 1e-7 * scale, "matrix " + std::to_string(t) + ": residual " + fmt(res));
    ck.expect(orth <= 1e-7 * scale, "matrix " + std::to_string(t) + ": orthonormality " + fmt(orth));
  }
  const auto p3 = sym_eig(laplacian(path_graph(3))).values;
  ck.expect(std::abs(p3(0)) <= 1e-9 && std::abs(p3(1) - 1.0) <= 1e-9 && std::abs(p3(2) - 3.0) <= 1e-9,
            "P3 eigenvalues are not (0, 1, 3)");
  return ck.outcome("100 matrices, worst relative residual " + fmt(worst) + "; P3 -> (" + fmt(p3(0)) +
                    ", " + fmt(p3(1)) + ", " + fmt(p3(2)) + ")");
}

struct Criterion {
  const char* id;
  const char* name;
  double limit_seconds;  // 0 for no runtime requirement
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "example blocks n=2 c=0.9: certificate and oracle", 1.0, ac1},
      {"AC2", "example blocks n=2 c=1.2: failure side", 1.0, ac2},
      {"AC3", "l-inf gap sandwich", 30.0, ac3},
      {"AC4", "l-inf eigengap property", 60.0, ac4},
      {"AC5", "two-to-infinity bound and recovery", 120.0, ac5},
      {"AC6", "unbalanced 3/300/300 experiment", 120.0, ac6},
      {"AC7", "density lemma", 0.0, ac7},
      {"AC8", "Procrustes optimality", 0.0, ac8},
      {"AC9", "hyperplane margin lemma", 0.0, ac9},
      {"AC10", "eigensolver kernel", 0.0, ac10},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0.0 && secs >= c.limit_seconds) {
      out.ok = false;
      out.detail += "; runtime " + fmt(secs) + " s exceeds " + fmt(c.limit_seconds) + " s";
    }
    std::printf("[%s] %s %s: %s (%.2f s)\n", out.ok ? "PASS" : "FAIL", c.id, c.name, out.detail.c_str(), secs);
    std::fflush(stdout);
    if (!out.ok) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
