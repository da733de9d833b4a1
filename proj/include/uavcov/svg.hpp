#pragma once

#include <string>
#include <vector>

#include "uavcov/planner.hpp"
#include "uavcov/scenario.hpp"
#include "uavcov/sweep.hpp"

namespace uavcov {

// Cycle tours over the grid: one <path> per cycle, one <circle> marker per
// coverage subarea, a square marker for the station.
std::string plan_svg(const Scenario& s, const CoveragePlan& plan);

// Line chart of additional UAVs vs the swept value, one <path> per method.
std::string sweep_svg(SweepParam p, const std::vector<SweepRow>& rows);

}  // namespace uavcov
