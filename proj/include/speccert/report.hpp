#pragma once

#include <string>

#include "json.hpp"

#include "speccert/certify.hpp"
#include "speccert/oracle.hpp"
#include "speccert/perturb.hpp"
#include "speccert/rounding.hpp"

namespace speccert {

inline constexpr int kSchemaVersion = 1;

// Numbers are rounded to 12 significant digits; non-finite values become the
// strings "inf", "-inf" or "nan".
nlohmann::json json_number(double x);
nlohmann::json json_vector(const Vector& v);

nlohmann::json to_json(const Certificate& cert);
nlohmann::json to_json(const PerturbationReport& rep);
nlohmann::json to_json(const OracleResult& res);
nlohmann::json to_json(const GapReport& rep);
// Summary of a clustering run; ratio_cut is the ratio cut of the returned partition.
nlohmann::json cluster_summary(const RoundingResult& res, RoundingMethod method, int k,
                               std::uint64_t seed, int restarts, double ratio_cut);

// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump_canonical(const nlohmann::json& j);

}  // namespace speccert
