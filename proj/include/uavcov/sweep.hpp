#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "uavcov/oracle.hpp"
#include "uavcov/scenario.hpp"

namespace uavcov {

enum class SweepParam { BatteryCapacity, GridSize, ChargeTime, TravelTime };
enum class PlanMethod { CLE, SM, ORACLE };

struct SweepSpec {
  SweepParam param = SweepParam::BatteryCapacity;
  std::vector<double> values;  // J, grid side, or seconds
  Scenario base;
  std::vector<PlanMethod> methods = {PlanMethod::CLE, PlanMethod::SM};
  int oracle_cap = kDefaultOracleCap;
};

struct SweepRow {
  double value = 0.0;
  PlanMethod method = PlanMethod::CLE;
  long additional_uavs = 0;
  long cycles = 0;
  long total_uavs = 0;
  bool feasible = false;
};

// Repo-default ranges: battery multipliers 1..13x of the base capacity
// (wide enough that the greedy collapses to a single cycle at the top),
// square grids 2..6, charge 0..30 min, travel 1..5 min.
std::vector<double> default_sweep_values(SweepParam p, const Scenario& base);

// Base scenario with the swept parameter replaced.
Scenario scenario_for_value(const Scenario& base, SweepParam p, double value);

// Evaluates every (value, method) point; points are independent and run in
// parallel. Unservable points get feasible=false instead of aborting.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);
std::vector<SweepRow> run_sweep_serial(const SweepSpec& spec);

std::string sweep_csv(SweepParam p, const std::vector<SweepRow>& rows);
nlohmann::json sweep_to_json(SweepParam p, const std::vector<SweepRow>& rows);

std::string param_name(SweepParam p);
std::string method_name(PlanMethod m);

}  // namespace uavcov
