#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "speccert/certify.hpp"
#include "speccert/generators.hpp"
#include "speccert/oracle.hpp"
#include "speccert/perturb.hpp"
#include "speccert/rounding.hpp"
#include "speccert/spectrum.hpp"
#include "support/random_graphs.hpp"

using namespace speccert;

namespace {

Vector random_in_ball(std::mt19937_64& rng, const Vector& c, double r) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Vector dir(c.size());
  for (Eigen::Index i = 0; i < c.size(); ++i) dir(i) = g(rng);
  dir /= dir.norm();
  return c + r * std::pow(u(rng), 1.0 / static_cast<double>(c.size())) * dir;
}

}  // namespace

TEST_CASE("spectral_cluster on two disjoint K2's") {
  const auto g = gen_planted_blocks({2, 2}, 1.0, 0.0);
  for (auto m : {RoundingMethod::fiedler, RoundingMethod::kmeans}) {
    const auto res = spectral_cluster(g.graph, 2, m, 1);
    CHECK(res.partition.same_up_to_relabeling(g.partition));
    CHECK(ratio_cut(g.graph, res.partition) == 0.0);
  }
}

TEST_CASE("spectral_cluster examples") {
  const auto ex = gen_example_blocks(2, 0.5);
  const auto f = spectral_cluster(ex.graph, 2, RoundingMethod::fiedler, 1);
  CHECK(f.partition.same_up_to_relabeling(ex.partition));
  CHECK(min_ratio_cut_bruteforce(ex.graph, 2).best.same_up_to_relabeling(ex.partition));

  const auto e1 = gen_example_blocks(1, 0.5);
  CHECK(spectral_cluster(e1.graph, 2, RoundingMethod::kmeans, 1).partition.same_up_to_relabeling(e1.partition));

  CHECK_THROWS_AS(spectral_cluster(ex.graph, 3, RoundingMethod::fiedler, 1), InputError);
  CHECK_THROWS_AS(spectral_cluster(ex.graph, 0, RoundingMethod::kmeans, 1), InputError);
}

TEST_CASE("spectral_cluster is deterministic for a fixed seed") {
  std::mt19937_64 rng(3);
  const auto g = testing::random_weighted_graph(rng, 25, 0.4);
  const auto a = spectral_cluster(g, 3, RoundingMethod::kmeans, 9, 5);
  const auto b = spectral_cluster(g, 3, RoundingMethod::kmeans, 9, 5);
  CHECK(a.partition == b.partition);
  CHECK(a.objective == b.objective);
}

TEST_CASE("fiedler_bisect examples") {
  const auto k2 = fiedler_bisect(complete_graph(2));
  CHECK(k2.partition.block_sizes() == std::vector<int>{1, 1});
  CHECK(k2.objective == 2.0);

  const auto dis = fiedler_bisect(gen_planted_blocks({2, 2}, 1.0, 0.0).graph);
  CHECK(dis.objective == 0.0);
  CHECK_FALSE(dis.warnings.empty());

  const auto ex = gen_example_blocks(1, 0.5);
  const auto r = fiedler_bisect(ex.graph);
  CHECK(r.partition.same_up_to_relabeling(ex.partition));
  CHECK(r.objective == doctest::Approx(1.0));
  CHECK(r.warnings.empty());
}

TEST_CASE("fiedler_bisect beats every prefix split") {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 20; ++t) {
    const int n = 3 + t;
    const auto g = testing::random_weighted_graph(rng, n, 0.5);
    const auto res = fiedler_bisect(g);
    const Vector f = fiedler(g);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return f(a) < f(b); });
    for (int s = 1; s < n; ++s) {
      std::vector<int> labels(n, 1);
      for (int i = 0; i < s; ++i) labels[order[i]] = 0;
      CHECK(res.objective <= ratio_cut(g, Partition(labels, 2)) + 1e-12);
    }
    CHECK(std::abs(res.objective - ratio_cut(g, res.partition)) <= 1e-12);
  }
}

TEST_CASE("kmeans on duplicated points") {
  Matrix pts(7, 2);
  pts << 0, 0, 5, 5, 0, 0, 5, 5, -3, 4, 0, 0, -3, 4;
  const auto r = kmeans_round(pts, 3, 1);
  CHECK(r.objective == 0.0);
  CHECK(r.partition.same_up_to_relabeling(Partition({0, 1, 0, 1, 2, 0, 2}, 3)));
  CHECK(kmeans_cost(pts, r.partition) == 0.0);
}

TEST_CASE("kmeans on isolated indicator rows") {
  const Partition p({0, 0, 1, 1}, 2);
  const auto r = kmeans_round(canonical_uiso(p), 2, 1);
  CHECK(r.objective == 0.0);
  CHECK(r.partition.same_up_to_relabeling(p));
}

TEST_CASE("kmeans recovers a planted partition from its eigenmap") {
  const auto g = gen_planted_blocks({20, 30, 50}, 1.0, 0.01, 1);
  const auto r = spectral_cluster(g.graph, 3, RoundingMethod::kmeans, 1);
  CHECK(r.partition.same_up_to_relabeling(g.partition));
}

TEST_CASE("kmeans arguments") {
  const Matrix pts = Matrix::Zero(3, 2);
  CHECK_THROWS_AS(kmeans_round(pts, 4, 1), InputError);
  CHECK_THROWS_AS(kmeans_round(pts, 0, 1), InputError);
  CHECK_THROWS_AS(kmeans_round(pts, 2, 1, 0), InputError);
  // Identical points still produce k nonempty clusters.
  const auto r = kmeans_round(pts, 3, 1);
  CHECK(r.partition.blocks() == 3);
  CHECK(r.objective == 0.0);
}

TEST_CASE("kmeans parallel restarts match the serial reference") {
  std::mt19937_64 rng(14);
  std::normal_distribution<double> nd(0.0, 1.0);
  for (int t = 0; t < 10; ++t) {
    const int n = 30 + 5 * t;
    Matrix pts = Matrix::NullaryExpr(n, 3, [&] { return nd(rng); });
    const int k = 2 + t % 4;
    const auto a = kmeans_round(pts, k, 100 + t, 8);
    const auto b = serial::kmeans_round(pts, k, 100 + t, 8);
    CHECK(a.partition == b.partition);
    CHECK(a.objective == b.objective);
    CHECK(a.restarts_used == b.restarts_used);
    CHECK(std::abs(a.objective - kmeans_cost(pts, a.partition)) <= 1e-9);
  }
}

TEST_CASE("proximity examples") {
  Matrix two(2, 1);
  two << -1, 1;
  const auto a = proximity_check(two, Partition({0, 1}, 2));
  REQUIRE(a.pairs.size() == 1);
  CHECK(a.pairs[0].xi == 1.0);
  CHECK(a.pairs[0].rhs == 0.0);
  CHECK(a.holds);

  Matrix over(4, 1);
  over << 0, 3, 2, 1;
  const auto b = proximity_check(over, Partition({0, 0, 1, 1}, 2));
  CHECK_FALSE(b.pairs[0].separated);
  CHECK_FALSE(b.holds);

  Matrix same(2, 1);
  same << 1, 1;
  const auto c = proximity_check(same, Partition({0, 1}, 2));
  CHECK(c.pairs[0].degenerate);
  CHECK_FALSE(c.holds);

  const auto g = gen_planted_blocks({10, 10}, 1.0, 0.01);
  const auto rep = proximity_check(eigenmap(g.graph, 2).U, g.partition);
  CHECK(rep.holds);
  CHECK(rep.pairs[0].rhs <= rep.pairs[0].rhs_frobenius + 1e-15);
}

TEST_CASE("hyperplane margin examples") {
  Vector c1(2), c2(2);
  c1 << 0, 0;
  c2 << 4, 0;
  const auto z = hyperplane_margin_bound(c1, c2, 0.0, c1, c2);
  CHECK(z.margin == 2.0);
  CHECK(z.bound == 2.0);

  Vector x(2), y(2);
  x << 0.5, 0.5;
  y << 3.5, -0.5;
  const auto wide = hyperplane_margin_bound(c1, c2, 1.0, x, y);
  CHECK(wide.bound == -1.0);
  CHECK(wide.margin >= wide.bound);

  CHECK_THROWS_AS(hyperplane_margin_bound(c1, c1, 0.0, c1, c1), InputError);
  CHECK_THROWS_AS(hyperplane_margin_bound(c1, c2, 0.1, c2, c1), InputError);
}

TEST_CASE("hyperplane margin lemma on random configurations") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::normal_distribution<double> nd(0.0, 3.0);
  int violations = 0;
  for (int t = 0; t < 1000; ++t) {
    const int dim = 1 + t % 5;
    Vector c1 = Vector::NullaryExpr(dim, [&] { return nd(rng); });
    Vector c2 = Vector::NullaryExpr(dim, [&] { return nd(rng); });
    const double r = u(rng) * (c1 - c2).norm() * 0.4;
    const Vector x = random_in_ball(rng, c1, r);
    const Vector y = random_in_ball(rng, c2, r);
    if ((x - y).norm() == 0.0) continue;
    const auto m = hyperplane_margin_bound(c1, c2, r, x, y);
    if (m.margin < m.bound - 1e-9) ++violations;
  }
  CHECK(violations == 0);
}

TEST_CASE("strict certificates: clustering, oracle and planted agree") {
  std::mt19937_64 rng(55);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int strict_seen = 0;
  for (int t = 0; t < 20; ++t) {
    const int k = 2 + t % 2;
    const int per = k == 2 ? 4 + t % 3 : 3 + t % 2;
    const int n = k * per;
    std::vector<int> labels(n);
    for (int v = 0; v < n; ++v) labels[v] = v / per;
    Matrix w = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        w(i, j) = w(j, i) = labels[i] == labels[j] ? 0.5 + u(rng) : (u(rng) < 0.2 ? 0.3 * u(rng) : 0.0);
    const WeightedGraph g(w);
    const Partition p(labels, k);
    if (!certificate(g, p).strict) continue;
    ++strict_seen;
    const auto res = spectral_cluster(g, k, RoundingMethod::kmeans, 1);
    const auto oracle = min_ratio_cut_bruteforce(g, k);
    CHECK(oracle.best.same_up_to_relabeling(p));
    CHECK(res.partition.same_up_to_relabeling(p));
  }
  CHECK(strict_seen >= 10);
}
