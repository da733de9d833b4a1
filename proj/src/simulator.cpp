#include "uavcov/simulator.hpp"

#include <algorithm>
#include <map>

#include "uavcov/energy.hpp"
#include "uavcov/errors.hpp"
#include "uavcov/json_util.hpp"

namespace uavcov {

namespace {

struct RotationParams {
  long n = 0;
  long k = 0;
  Rat dwell;      // d
  Rat period;     // (n+1)*T + T_charge
  Rat lap;        // (n+k) * d
  Rat fill_end;   // first instant every subarea of the cycle is covered
  bool feasible = false;
};

RotationParams rotation_params(const SimParams& p, const Cycle& cyc) {
  RotationParams r;
  r.n = static_cast<long>(cyc.subareas.size());
  r.k = cyc.additional_uavs;
  if (cyc.coverage_time_s.sign() <= 0)
    throw InfeasibleError("cycle infeasible: no coverage energy");
  r.period = Rat(r.n + 1) * p.travel_time_s + p.charge_time_s;
  Rat dwell_max = cyc.coverage_time_s / Rat(r.n);
  if (r.k >= 1 && r.period / Rat(r.k) <= dwell_max)
    r.dwell = r.period / Rat(r.k);
  else
    r.dwell = dwell_max;
  r.feasible = r.k >= 1 && Rat(r.k) * r.dwell >= r.period;
  long group = r.n + std::max(r.k, 0l);
  r.lap = Rat(group) * r.dwell;
  r.fill_end = Rat(r.n) * p.travel_time_s + Rat(r.n - 1) * r.dwell;
  return r;
}

// One cycle's rotation: wave w departs the station at w*d (or when its UAV
// is ready again, in best-effort mode), covers each subarea for d with
// exact handoff coincidence, returns, recharges, idles until its next slot.
void append_rotation(Schedule& sch, const SimParams& p, const Cycle& cyc,
                     const RotationParams& r, int cycle_idx, int uav_base,
                     BuildMode mode) {
  long group = r.n + std::max(r.k, 0l);
  const Rat& T = p.travel_time_s;
  const Rat& Tc = p.charge_time_s;

  for (long u = 0; u < group; ++u) {
    UavTimeline tl;
    tl.uav = uav_base + static_cast<int>(u);
    tl.cycle = cycle_idx;
    Rat cursor(0);
    Rat ready(0);
    auto idle_until = [&](const Rat& t) {
      if (t > cursor)
        tl.segments.push_back({SegKind::Idle, cursor, t});
      cursor = t;
    };
    for (long wave = u;; wave += group) {
      Rat scheduled = Rat(wave) * r.dwell;
      Rat depart = scheduled;
      if (mode == BuildMode::BestEffort && ready > depart) depart = ready;
      if (depart >= sch.horizon_s) break;
      idle_until(depart);

      SubareaId prev = p.station;
      for (long i = 0; i < r.n; ++i) {
        SubareaId sub = cyc.subareas[static_cast<size_t>(i)];
        tl.segments.push_back({SegKind::Travel, cursor, cursor + T, -1, prev, sub});
        cursor += T;
        tl.segments.push_back({SegKind::Cover, cursor, cursor + r.dwell, sub});
        cursor += r.dwell;
        prev = sub;
      }
      tl.segments.push_back({SegKind::Travel, cursor, cursor + T, -1, prev, p.station});
      cursor += T;
      if (Tc.sign() > 0) {
        tl.segments.push_back({SegKind::Charge, cursor, cursor + Tc});
        cursor += Tc;
      }
      ready = cursor;
    }
    idle_until(sch.horizon_s);
    if (!tl.segments.empty()) sch.uavs.push_back(std::move(tl));
  }
}

struct CoverEvent {
  Rat start;
  Rat end;
  int uav;
};

const char* kGapDesc = "coverage gap";

}  // namespace

SimParams sim_params(const Scenario& s) {
  EnergyProfile profile = energy_profile(s);
  SimParams p;
  p.travel_time_s = s.travel_time_s;
  p.charge_time_s = s.charge_time_s;
  p.coverage_power_W = profile.coverage_power;
  p.hop_energy_J = profile.hop_energy;
  p.battery_J = profile.battery;
  p.station = s.charging_station;
  p.targets = s.coverage_subareas();
  return p;
}

Rat default_horizon(const Scenario& s, const CoveragePlan& plan, long laps) {
  SimParams p = sim_params(s);
  Rat horizon(0);
  for (const Cycle& cyc : plan.cycles) {
    RotationParams r = rotation_params(p, cyc);
    Rat h = r.fill_end + Rat(laps) * r.lap;
    if (h > horizon) horizon = h;
  }
  return horizon;
}

Schedule build_schedule(const Scenario& s, const CoveragePlan& plan,
                        const Rat& horizon_s, BuildMode mode) {
  if (horizon_s.sign() <= 0)
    throw std::invalid_argument("build_schedule: horizon must be > 0");
  SimParams p = sim_params(s);
  Schedule sch;
  sch.horizon_s = horizon_s;

  int uav_base = 0;
  Rat min_full_rotation(0);
  for (size_t ci = 0; ci < plan.cycles.size(); ++ci) {
    const Cycle& cyc = plan.cycles[ci];
    RotationParams r = rotation_params(p, cyc);
    if (mode == BuildMode::Strict && !r.feasible)
      throw InfeasibleError(
          "cycle " + std::to_string(ci) + " infeasible: k=" + std::to_string(r.k) +
          " additional UAVs cannot sustain the rotation");
    append_rotation(sch, p, cyc, r, static_cast<int>(ci), uav_base, mode);
    uav_base += static_cast<int>(r.n + std::max(r.k, 0l));
    Rat full = r.fill_end + r.lap;
    if (full > min_full_rotation) min_full_rotation = full;
  }
  if (horizon_s < min_full_rotation) {
    sch.short_horizon = true;
    sch.warnings.push_back("horizon shorter than one full rotation");
  }
  return sch;
}

Verdict verify(const Scenario& s, const Schedule& sch) {
  return verify(sim_params(s), sch);
}

Verdict verify(const SimParams& p, const Schedule& sch) {
  Verdict v;
  const Rat& H = sch.horizon_s;
  const Rat& T = p.travel_time_s;
  const Rat& Tc = p.charge_time_s;
  auto add = [&](const char* id, const Rat& t, std::string desc) {
    v.violations.push_back({id, t, std::move(desc)});
  };

  // Well-formedness preconditions: contiguous, positive-length segments
  // with a consistent location trace.
  for (const UavTimeline& tl : sch.uavs) {
    Rat prev_end(0);
    SubareaId loc = p.station;
    for (const Segment& seg : tl.segments) {
      if (seg.start != prev_end)
        throw std::invalid_argument("schedule malformed: non-contiguous timeline");
      if (seg.end <= seg.start)
        throw std::invalid_argument("schedule malformed: empty segment");
      switch (seg.kind) {
        case SegKind::Travel:
          if (seg.from != loc)
            throw std::invalid_argument("schedule malformed: travel from wrong location");
          loc = seg.to;
          break;
        case SegKind::Cover:
          if (seg.subarea != loc)
            throw std::invalid_argument("schedule malformed: cover away from location");
          break;
        case SegKind::Charge:
        case SegKind::Idle:
          if (loc != p.station)
            throw std::invalid_argument("schedule malformed: station segment away from station");
          break;
      }
      prev_end = seg.end;
    }
  }

  // Per-UAV checks: C7 visit/travel shape, C8 recharge windows, C9 station
  // flow, C10 energy budget between consecutive recharges.
  std::map<SubareaId, std::vector<CoverEvent>> covers;
  for (const UavTimeline& tl : sch.uavs) {
    const auto& segs = tl.segments;
    bool expect_departure = true;  // C9 alternation: departures and arrivals
    Rat energy(0);
    Rat window_start(0);
    for (size_t i = 0; i < segs.size(); ++i) {
      const Segment& seg = segs[i];
      if (seg.start >= H) break;
      switch (seg.kind) {
        case SegKind::Travel: {
          if (seg.end - seg.start != T)
            add("C7", seg.start,
                "uav " + std::to_string(tl.uav) + ": travel segment length != travel time");
          if (seg.to != p.station && seg.end < H) {
            bool covered = i + 1 < segs.size() && segs[i + 1].kind == SegKind::Cover &&
                           segs[i + 1].subarea == seg.to;
            if (!covered)
              add("C7", seg.end,
                  "uav " + std::to_string(tl.uav) + ": visit to subarea " +
                      std::to_string(seg.to) + " without coverage");
          }
          if (seg.from == p.station) {
            if (!expect_departure)
              add("C9", seg.start,
                  "uav " + std::to_string(tl.uav) + ": departure without prior return");
            expect_departure = false;
          }
          if (seg.to == p.station) {
            if (expect_departure)
              add("C9", seg.end,
                  "uav " + std::to_string(tl.uav) + ": arrival without prior departure");
            expect_departure = true;
          }
          energy += p.hop_energy_J;
          break;
        }
        case SegKind::Cover: {
          covers[seg.subarea].push_back({seg.start, seg.end, tl.uav});
          Rat end = seg.end < H ? seg.end : H;
          energy += (end - seg.start) * p.coverage_power_W;
          break;
        }
        case SegKind::Charge: {
          if (energy > p.battery_J)
            add("C10", window_start,
                "uav " + std::to_string(tl.uav) + ": energy " + energy.str() +
                    " J exceeds capacity " + p.battery_J.str() + " J since last recharge");
          energy = Rat(0);
          window_start = seg.end;
          break;
        }
        case SegKind::Idle:
          break;
      }
    }
    if (energy > p.battery_J)
      add("C10", window_start,
          "uav " + std::to_string(tl.uav) + ": energy " + energy.str() +
              " J exceeds capacity " + p.battery_J.str() + " J since last recharge");

    // C8: every completed station stay (arrival ... departure) must contain
    // recharge time of exactly the configured duration.
    std::optional<Rat> stay_arrival;
    Rat stay_charge(0);
    for (const Segment& seg : segs) {
      if (seg.kind == SegKind::Travel && seg.to == p.station && seg.end < H) {
        stay_arrival = seg.end;
        stay_charge = Rat(0);
      } else if (seg.kind == SegKind::Charge) {
        stay_charge += seg.end - seg.start;
      } else if (seg.kind == SegKind::Travel && seg.from == p.station) {
        if (stay_arrival && seg.start < H && stay_charge != Tc)
          add("C8", *stay_arrival,
              "uav " + std::to_string(tl.uav) + ": station stay recharged for " +
                  stay_charge.str() + " s instead of " + Tc.str() + " s");
        stay_arrival.reset();
      }
    }
  }

  // Subarea checks: C3 reachability, C4 exactly-one coverage after the
  // subarea is first reached, C5 simultaneous takeover, C6 self-handoff.
  for (SubareaId target : p.targets) {
    auto it = covers.find(target);
    if (it == covers.end() || it->second.empty()) {
      add("C3", Rat(0), "subarea " + std::to_string(target) + " never covered");
      continue;
    }
    auto& events = it->second;
    std::sort(events.begin(), events.end(), [](const CoverEvent& a, const CoverEvent& b) {
      if (a.start != b.start) return a.start < b.start;
      if (a.end != b.end) return a.end < b.end;
      return a.uav < b.uav;
    });
    Rat cur_end = events[0].end;
    Rat cur_start = events[0].start;
    int cur_uav = events[0].uav;
    for (size_t i = 1; i < events.size(); ++i) {
      const CoverEvent& next = events[i];
      if (next.start >= H) break;
      if (next.start == cur_end) {
        if (next.uav == cur_uav)
          add("C6", next.start,
              "subarea " + std::to_string(target) + ": self-handoff by uav " +
                  std::to_string(next.uav));
      } else if (next.start > cur_end) {
        if (cur_end < H)
          add("C4", cur_end,
              "subarea " + std::to_string(target) + ": " + kGapDesc + " [" +
                  cur_end.str() + ", " + next.start.str() + ")");
      } else {
        if (next.start == cur_start)
          add("C5", next.start,
              "subarea " + std::to_string(target) + ": simultaneous coverage start");
        else
          add("C4", next.start,
              "subarea " + std::to_string(target) + ": overlapping coverage");
      }
      if (next.end > cur_end) {
        cur_end = next.end;
        cur_uav = next.uav;
        cur_start = next.start;
      }
    }
    if (cur_end < H)
      add("C4", cur_end,
          "subarea " + std::to_string(target) + ": " + kGapDesc + " [" + cur_end.str() +
              ", horizon)");
  }

  std::sort(v.violations.begin(), v.violations.end(),
            [](const Violation& a, const Violation& b) {
              if (a.time_s != b.time_s) return a.time_s < b.time_s;
              return a.constraint < b.constraint;
            });
  v.ok = v.violations.empty();
  return v;
}

std::optional<long> min_k_empirical(const Scenario& s, const Cycle& cycle,
                                    long k_max) {
  SimParams p = sim_params(s);
  if (cycle.coverage_time_s.sign() <= 0) return std::nullopt;
  SimParams cycle_params = p;
  cycle_params.targets = cycle.subareas;

  for (long k = 1; k <= k_max; ++k) {
    Cycle trial = cycle;
    trial.additional_uavs = k;
    RotationParams r = rotation_params(cycle_params, trial);
    Rat horizon = r.fill_end + Rat(2) * r.lap + r.period;
    Schedule sch;
    sch.horizon_s = horizon;
    append_rotation(sch, cycle_params, trial, r, 0, 0, BuildMode::BestEffort);
    if (verify(cycle_params, sch).ok) return k;
  }
  return std::nullopt;
}

std::optional<long> min_k_empirical(long n, const Rat& travel_time_s,
                                    const Rat& charge_time_s,
                                    const Rat& coverage_time_s, long k_max) {
  if (n < 1) throw std::invalid_argument("min_k_empirical: n must be >= 1");
  if (coverage_time_s.sign() <= 0) return std::nullopt;

  // Synthetic unit-power cycle whose battery exactly sustains the stated
  // coverage time: E = T_cov * 1 W + (n+1) hops of 1 J.
  SimParams p;
  p.travel_time_s = travel_time_s;
  p.charge_time_s = charge_time_s;
  p.coverage_power_W = Rat(1);
  p.hop_energy_J = Rat(1);
  p.battery_J = coverage_time_s + Rat(n + 1);
  p.station = 0;
  for (long i = 1; i <= n; ++i) p.targets.push_back(static_cast<int>(i));

  Cycle cyc;
  cyc.subareas = p.targets;
  cyc.coverage_time_s = coverage_time_s;
  cyc.dwell_time_s = coverage_time_s / Rat(n);

  for (long k = 1; k <= k_max; ++k) {
    cyc.additional_uavs = k;
    RotationParams r = rotation_params(p, cyc);
    Rat horizon = r.fill_end + Rat(2) * r.lap + r.period;
    Schedule sch;
    sch.horizon_s = horizon;
    append_rotation(sch, p, cyc, r, 0, 0, BuildMode::BestEffort);
    if (verify(p, sch).ok) return k;
  }
  return std::nullopt;
}

namespace {

const char* seg_kind_name(SegKind k) {
  switch (k) {
    case SegKind::Cover: return "cover";
    case SegKind::Travel: return "travel";
    case SegKind::Charge: return "charge";
    case SegKind::Idle: return "idle_at_station";
  }
  return "?";
}

}  // namespace

nlohmann::json schedule_to_json(const Schedule& sch) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["horizon_s"] = rat_to_json(sch.horizon_s);
  j["short_horizon"] = sch.short_horizon;
  j["warnings"] = sch.warnings;
  nlohmann::json uavs = nlohmann::json::array();
  for (const UavTimeline& tl : sch.uavs) {
    nlohmann::json segs = nlohmann::json::array();
    for (const Segment& seg : tl.segments) {
      nlohmann::json sj = {{"kind", seg_kind_name(seg.kind)},
                           {"start_s", rat_to_json(seg.start)},
                           {"end_s", rat_to_json(seg.end)}};
      if (seg.kind == SegKind::Cover) sj["subarea"] = seg.subarea;
      if (seg.kind == SegKind::Travel) {
        sj["from"] = seg.from;
        sj["to"] = seg.to;
      }
      segs.push_back(std::move(sj));
    }
    uavs.push_back({{"uav", tl.uav}, {"cycle", tl.cycle}, {"segments", std::move(segs)}});
  }
  j["uavs"] = std::move(uavs);
  return j;
}

nlohmann::json verdict_to_json(const Verdict& v) {
  nlohmann::json j;
  j["ok"] = v.ok;
  nlohmann::json viols = nlohmann::json::array();
  for (const Violation& viol : v.violations)
    viols.push_back({{"constraint", viol.constraint},
                     {"time_s", rat_to_json(viol.time_s)},
                     {"description", viol.description}});
  j["violations"] = std::move(viols);
  return j;
}

}  // namespace uavcov
