#pragma once

#include <optional>
#include <vector>

#include "json.hpp"
#include "uavcov/energy.hpp"
#include "uavcov/scenario.hpp"

namespace uavcov {

// One station-anchored tour. A group of (n + additional_uavs) UAVs rotates
// through it, each covering every listed subarea for dwell_time_s per lap.
struct Cycle {
  std::vector<SubareaId> subareas;  // visit order, station excluded
  Rat coverage_time_s;              // hover budget of one battery on this tour
  Rat dwell_time_s;                 // coverage_time_s / n
  long additional_uavs = 1;         // k
};

struct CoveragePlan {
  std::string method;  // "cle" or "sm"
  std::vector<Cycle> cycles;
  long covering_uavs = 0;
  long additional_uavs = 0;
  long total_uavs = 0;
};

// Hover time one battery can sustain on an n-subarea tour:
// (E - (n+1) * hop) / coverage_power. Empty when no energy remains.
std::optional<Rat> cycle_coverage_time(const EnergyProfile& p, long n);

// Smallest k >= 1 with k * (T_cov / n) >= (n+1)*T + T_charge, or empty when
// coverage_time_s <= 0.
std::optional<long> min_additional_uavs(long n, const Rat& travel_time_s,
                                        const Rat& charge_time_s,
                                        const Rat& coverage_time_s);

// Nearest-neighbor greedy: grow each cycle while one additional UAV still
// suffices for the candidate size. Throws UnservableError when even a
// single-subarea cycle needs k > 1.
CoveragePlan cle_plan(const Scenario& s);

// One dedicated spare per subarea: N size-1 cycles.
CoveragePlan sm_plan(const Scenario& s);

nlohmann::json plan_to_json(const CoveragePlan& plan, const Scenario& s);
CoveragePlan plan_from_json(const nlohmann::json& j);

}  // namespace uavcov
