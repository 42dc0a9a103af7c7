#include "speccert/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "speccert/config.hpp"
#include "speccert/spectrum.hpp"

namespace speccert {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

Vector boundary_degrees(const WeightedGraph& g, const Partition& p) {
  require_compatible(g, p);
  const int n = g.size();
  Vector d = Vector::Zero(n);
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int j = 0; j < n; ++j)
      if (p.label(j) != p.label(i)) s += g.weight(i, j);
    d(i) = s;
  }
  return d;
}

IntraConnectivities intra_connectivities(const WeightedGraph& g, const Partition& p) {
  require_compatible(g, p);
  const auto members = p.members();
  const int k = p.blocks();
  IntraConnectivities out;
  out.lambda2s.resize(k);
  // Blocks are independent; each iteration writes only its own slot.
#pragma omp parallel for schedule(dynamic, 1)
  for (int b = 0; b < k; ++b) {
    if (members[b].size() < 2) {
      out.lambda2s(b) = kInf;
    } else {
      out.lambda2s(b) = lambda2(induced_subgraph(g, members[b]));
    }
  }
  for (int b = 0; b < k; ++b)
    if (members[b].size() < 2) out.singleton_blocks.push_back(b);
  return out;
}

Certificate certificate(const WeightedGraph& g, const Partition& p) {
  Certificate cert;
  cert.d_delta = boundary_degrees(g, p);
  auto intra = intra_connectivities(g, p);
  cert.lambda2s = std::move(intra.lambda2s);
  cert.singleton_blocks = std::move(intra.singleton_blocks);
  cert.max_d_delta = cert.d_delta.maxCoeff();
  cert.min_lambda2 = cert.lambda2s.minCoeff();

  if (cert.min_lambda2 <= 0.0) {
    cert.ratio_r = kInf;
  } else if (std::isinf(cert.min_lambda2)) {
    cert.ratio_r = 0.0;
  } else {
    cert.ratio_r = cert.max_d_delta / cert.min_lambda2;
  }
  cert.margin = 0.5 * cert.min_lambda2 - cert.max_d_delta;
  const double tol = kDefaultTolerances.certificate_compare;
  cert.passes = cert.ratio_r <= 0.5 + tol;
  cert.strict = cert.ratio_r < 0.5 - tol;
  return cert;
}

DensityCheck density_lower_bound_check(const WeightedGraph& g, std::span<const int> subset) {
  const int n = g.size();
  DensityCheck out;
  out.actual = cut_weight(g, subset);
  std::vector<char> in(n, 0);
  for (int v : subset) in[v] = 1;
  const int s = static_cast<int>(std::count(in.begin(), in.end(), 1));
  if (s == 0 || s == n || n < 2) {
    out.bound = 0.0;
  } else {
    out.bound = lambda2(g) * s * static_cast<double>(n - s) / n;
  }
  out.holds = out.actual >= out.bound - 1e-9;
  return out;
}

}  // namespace speccert
