#pragma once

#include "json.hpp"

#include "lexineq/lexorder.hpp"
#include "lexineq/oracle.hpp"
#include "lexineq/region.hpp"
#include "lexineq/solver.hpp"

namespace lexineq {

// JSON encodings, schema "lexineq/1". Angles are radians; numbers use the
// shortest decimal that round-trips.

inline constexpr const char* kSchema = "lexineq/1";

nlohmann::json to_json(Complex z);
nlohmann::json to_json(const Transform& t);
nlohmann::json to_json(const Region& r);
nlohmann::json to_json(const RegionClassification& c);
nlohmann::json to_json(const InequalityProblem& p);
nlohmann::json to_json(const SolutionSet& s);
nlohmann::json to_json(const LawReport& r);
nlohmann::json to_json(const VerificationReport& r);

Complex complex_from_json(const nlohmann::json& j);
Transform transform_from_json(const nlohmann::json& j);
Region region_from_json(const nlohmann::json& j);

} // namespace lexineq
