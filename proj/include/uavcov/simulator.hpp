#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "uavcov/planner.hpp"
#include "uavcov/scenario.hpp"

namespace uavcov {

enum class SegKind { Cover, Travel, Charge, Idle };

struct Segment {
  SegKind kind = SegKind::Idle;
  Rat start;
  Rat end;
  SubareaId subarea = -1;  // Cover
  SubareaId from = -1;     // Travel
  SubareaId to = -1;       // Travel
};

struct UavTimeline {
  int uav = 0;
  int cycle = 0;  // index of the plan cycle this UAV rotates in
  std::vector<Segment> segments;
};

struct Schedule {
  std::vector<UavTimeline> uavs;
  Rat horizon_s;
  bool short_horizon = false;
  std::vector<std::string> warnings;
};

struct Violation {
  std::string constraint;  // "C3".."C10"
  Rat time_s;
  std::string description;
};

struct Verdict {
  bool ok = true;
  std::vector<Violation> violations;
};

// Everything verification needs, independent of Scenario so synthetic
// rotations can be checked directly.
struct SimParams {
  Rat travel_time_s;
  Rat charge_time_s;
  Rat coverage_power_W;
  Rat hop_energy_J;
  Rat battery_J;
  SubareaId station = 0;
  std::vector<SubareaId> targets;  // subareas that demand continuous coverage
};

SimParams sim_params(const Scenario& s);

enum class BuildMode {
  Strict,      // throw InfeasibleError when a cycle fails the k-feasibility test
  BestEffort,  // build anyway; UAVs depart late when not ready, leaving gaps
};

// Staggered-rotation schedule for every cycle of the plan. Each wave enters
// the first subarea one dwell after its predecessor, covers each subarea for
// the dwell, returns, recharges and waits for its next slot.
Schedule build_schedule(const Scenario& s, const CoveragePlan& plan,
                        const Rat& horizon_s, BuildMode mode = BuildMode::Strict);

// Horizon covering `laps` full rotations of every cycle (plus fill-in).
Rat default_horizon(const Scenario& s, const CoveragePlan& plan, long laps);

// Checks C3..C10 over [0, horizon). Violations are data, not errors; only a
// structurally malformed timeline (non-contiguous, teleporting) throws.
Verdict verify(const Scenario& s, const Schedule& sch);
Verdict verify(const SimParams& p, const Schedule& sch);

// Smallest k whose built schedule verifies clean; the simulator-side ground
// truth for the rotation feasibility inequality. Uses best-effort builds so
// the answer comes from verification alone.
std::optional<long> min_k_empirical(const Scenario& s, const Cycle& cycle,
                                    long k_max = 64);
std::optional<long> min_k_empirical(long n, const Rat& travel_time_s,
                                    const Rat& charge_time_s,
                                    const Rat& coverage_time_s, long k_max = 64);

nlohmann::json schedule_to_json(const Schedule& sch);
nlohmann::json verdict_to_json(const Verdict& v);

}  // namespace uavcov
