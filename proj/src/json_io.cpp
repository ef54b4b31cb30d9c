#include "raintensity/json_io.hpp"

namespace raintensity {

using nlohmann::json;

namespace {

json class_table(const std::vector<ChiSquareClass>& classes) {
  json arr = json::array();
  for (const auto& c : classes)
    arr.push_back({{"lo", c.lo}, {"hi", c.hi}, {"observed", c.observed},
                   {"expected", c.expected}});
  return arr;
}

}  // namespace

json to_json(const ConditionReport& rep) {
  return {{"schema_version", 1},
          {"c1", to_string(rep.c1)},
          {"c2", to_string(rep.c2)},
          {"c3", to_string(rep.c3)},
          {"detail", rep.detail}};
}

json to_json(const FitReport& rep) {
  return {{"schema_version", 1},
          {"alpha", rep.alpha},
          {"model", to_string(rep.model)},
          {"ls",
           {{"intercept", rep.ls.intercept},
            {"slope", rep.ls.slope},
            {"residual_rms", rep.ls.residual_rms},
            {"points_used", rep.ls.points_used}}},
          {"scale_mle", rep.scale_mle},
          {"identified", to_string(rep.identified)},
          {"bandwidth", rep.bandwidth}};
}

json to_json(const GofReport& rep) {
  json out{{"schema_version", 1},
           {"test", rep.test},
           {"statistic", rep.statistic},
           {"p_value", rep.p_value}};
  if (rep.dof) out["dof"] = *rep.dof;
  if (!rep.classes.empty()) {
    out["classes"] = class_table(rep.classes);
    out["merged_classes"] = class_table(rep.merged_classes);
  }
  return out;
}

json to_json(const OrderCheckResult& rep) {
  return {{"schema_version", 1},
          {"verdict_scope", "numerical evidence on the grid, not proof"},
          {"direction", to_string(rep.direction)},
          {"alpha", rep.alpha},
          {"max_signed_gap", rep.max_signed_gap},
          {"crossings", rep.crossings},
          {"grid_size", rep.grid.size()},
          {"grid_lo", rep.grid.front()},
          {"grid_hi", rep.grid.back()}};
}

json to_json(const ImplicationReport& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks) {
    json item{{"alpha", c.alpha}, {"holds", c.holds}};
    if (c.counterexample_x) item["counterexample_x"] = *c.counterexample_x;
    checks.push_back(item);
  }
  return {{"schema_version", 1},
          {"verdict_scope", "numerical evidence on the grid, not proof"},
          {"premise_st", rep.premise_st},
          {"beta", rep.beta},
          {"beta_direction", to_string(rep.beta_direction)},
          {"premise_holds", rep.premise_holds()},
          {"checks", checks}};
}

}  // namespace raintensity
