#include "speccert/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace speccert {

nlohmann::json json_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return std::strtod(buf, nullptr);
}

nlohmann::json json_vector(const Vector& v) {
  auto arr = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(json_number(v(i)));
  return arr;
}

nlohmann::json to_json(const Certificate& cert) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["d_delta"] = json_vector(cert.d_delta);
  j["lambda2s"] = json_vector(cert.lambda2s);
  j["max_d_delta"] = json_number(cert.max_d_delta);
  j["min_lambda2"] = json_number(cert.min_lambda2);
  j["ratio_r"] = json_number(cert.ratio_r);
  j["passes"] = cert.passes;
  j["strict"] = cert.strict;
  j["margin"] = json_number(cert.margin);
  j["singleton_blocks"] = cert.singleton_blocks;
  return j;
}

nlohmann::json to_json(const PerturbationReport& rep) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["n"] = rep.n;
  j["k"] = rep.k;
  j["c"] = json_number(rep.c);
  j["r"] = json_number(rep.r);
  j["threshold"] = json_number(rep.threshold);
  j["precondition_ok"] = rep.precondition_ok;
  j["bound"] = rep.bound ? json_number(*rep.bound) : nlohmann::json(nullptr);
  j["measured"] = json_number(rep.measured);
  j["gap_lower"] = json_number(rep.gap_lower);
  j["gap_lower_per_block"] = json_number(rep.gap_lower_per_block);
  j["mu"] = json_number(rep.mu);
  j["max_d_delta"] = json_number(rep.max_d_delta);
  j["min_lambda2"] = json_number(rep.min_lambda2);
  j["eigengap"] = json_number(rep.eigengap);
  j["procrustes_degenerate"] = rep.procrustes_degenerate;
  return j;
}

nlohmann::json to_json(const OracleResult& res) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["k"] = res.best.blocks();
  j["best"] = res.best.labels();
  j["value"] = json_number(res.value);
  j["unique"] = res.unique;
  j["runner_up"] = json_number(res.runner_up);
  j["partitions_examined"] = res.partitions_examined;
  return j;
}

nlohmann::json to_json(const GapReport& rep) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["lower"] = json_number(rep.lower);
  if (rep.exact) j["exact"] = json_number(*rep.exact);
  if (rep.upper) j["upper"] = json_number(*rep.upper);
  return j;
}

nlohmann::json cluster_summary(const RoundingResult& res, RoundingMethod method, int k,
                               std::uint64_t seed, int restarts, double ratio_cut) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["method"] = method == RoundingMethod::fiedler ? "fiedler" : "kmeans";
  j["k"] = k;
  j["seed"] = seed;
  j["restarts"] = restarts;
  j["objective"] = json_number(res.objective);
  j["ratio_cut"] = json_number(ratio_cut);
  j["iterations"] = res.iterations;
  j["restarts_used"] = res.restarts_used;
  j["block_sizes"] = res.partition.block_sizes();
  j["warnings"] = res.warnings;
  return j;
}

std::string dump_canonical(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace speccert
