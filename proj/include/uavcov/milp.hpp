#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "uavcov/scenario.hpp"

namespace uavcov {

struct MilpRow {
  std::string name;
  // (variable index, integer coefficient), emission order preserved.
  std::vector<std::pair<int, long long>> terms;
  char sense = 'L';  // 'L' (<=) or 'E' (==)
  long long rhs = 0;
};

// Time-expanded integer program for continuous coverage with a UAV budget.
// Slots run t = 0..horizon_slots; slot duration equals one hop time.
struct MilpModel {
  int budget = 0;         // number of candidate UAVs, 1-based in names
  int horizon_slots = 0;  // last slot index T
  int nodes = 0;          // grid cells; node 1 is the station
  long long charge_slots = 0;
  long long hop_energy_J = 0;
  long long cover_energy_per_slot_J = 0;
  long long battery_J = 0;

  std::vector<std::string> vars;  // registry order == Binary section order
  std::unordered_map<std::string, int> var_index;
  std::vector<int> objective;  // indices of the x_m family
  std::vector<MilpRow> rows;
  std::vector<std::string> notes;  // emitted as header comments

  // x + y + z families only (auxiliary station-event indicators excluded).
  long long xyz_var_count() const;
};

// Builds the model rows for constraints (1)..(10). Refuses models whose
// estimated size exceeds size_cap (variables + rows).
MilpModel build_model(const Scenario& s, int uav_budget, int horizon_slots,
                      long long size_cap = 2000000);

std::string export_lp(const MilpModel& m);
void export_lp(const MilpModel& m, const std::string& path);

// Variable-name grammar helpers (documented in the export header).
std::string milp_var_x(int m);
std::string milp_var_y(int i, int j, int m, int t);
std::string milp_var_z(int j, int m, int t);
std::string milp_var_station_event(int m, int t);

}  // namespace uavcov
