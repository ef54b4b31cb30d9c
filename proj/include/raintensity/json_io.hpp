#pragma once

#include <json.hpp>

#include "raintensity/characterize.hpp"
#include "raintensity/fit.hpp"
#include "raintensity/gof.hpp"
#include "raintensity/orders.hpp"

namespace raintensity {

// JSON report shapes shared by the CLI and the bindings. Every report
// carries schema_version = 1.

nlohmann::json to_json(const ConditionReport& rep);
nlohmann::json to_json(const FitReport& rep);
nlohmann::json to_json(const GofReport& rep);
nlohmann::json to_json(const OrderCheckResult& rep);
nlohmann::json to_json(const ImplicationReport& rep);

}  // namespace raintensity
