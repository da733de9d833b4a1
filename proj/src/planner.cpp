#include "uavcov/planner.hpp"

#include <algorithm>
#include <limits>

#include "uavcov/errors.hpp"
#include "uavcov/json_util.hpp"

namespace uavcov {

std::optional<Rat> cycle_coverage_time(const EnergyProfile& p, long n) {
  if (n < 1) throw std::invalid_argument("cycle_coverage_time: n must be >= 1");
  // n hops along the tour plus one hop back to the station.
  Rat coverage_energy = p.battery - Rat(n + 1) * p.hop_energy;
  if (coverage_energy.sign() <= 0) return std::nullopt;
  return coverage_energy / p.coverage_power;
}

std::optional<long> min_additional_uavs(long n, const Rat& travel_time_s,
                                        const Rat& charge_time_s,
                                        const Rat& coverage_time_s) {
  if (n < 1) throw std::invalid_argument("min_additional_uavs: n must be >= 1");
  if (coverage_time_s.sign() <= 0) return std::nullopt;
  Rat period = Rat(n + 1) * travel_time_s + charge_time_s;
  long long k = (Rat(n) * period / coverage_time_s).ceil_ll();
  return std::max(1ll, k);
}

namespace {

struct GreedyContext {
  const Scenario& s;
  EnergyProfile profile;
  // feasible_with_one[n] == true when an n-subarea cycle works with k = 1.
  std::vector<char> feasible_with_one;

  explicit GreedyContext(const Scenario& sc) : s(sc), profile(energy_profile(sc)) {
    int n_max = sc.coverage_count();
    feasible_with_one.assign(n_max + 1, 0);
    for (int n = 1; n <= n_max; ++n) {
      auto tcov = cycle_coverage_time(profile, n);
      if (!tcov) continue;
      auto k = min_additional_uavs(n, sc.travel_time_s, sc.charge_time_s, *tcov);
      feasible_with_one[n] = (k && *k == 1) ? 1 : 0;
    }
  }

  Cycle make_cycle(std::vector<SubareaId> subareas) const {
    Cycle c;
    c.subareas = std::move(subareas);
    long n = static_cast<long>(c.subareas.size());
    c.coverage_time_s = *cycle_coverage_time(profile, n);
    c.dwell_time_s = c.coverage_time_s / Rat(n);
    c.additional_uavs = 1;
    return c;
  }
};

void finalize_totals(CoveragePlan& plan) {
  plan.covering_uavs = 0;
  plan.additional_uavs = 0;
  for (const Cycle& c : plan.cycles) {
    plan.covering_uavs += static_cast<long>(c.subareas.size());
    plan.additional_uavs += c.additional_uavs;
  }
  plan.total_uavs = plan.covering_uavs + plan.additional_uavs;
}

}  // namespace

CoveragePlan cle_plan(const Scenario& s) {
  validate(s);
  GreedyContext ctx(s);
  if (!ctx.feasible_with_one[1])
    throw UnservableError(
        "scenario unservable by CLE: a single-subarea cycle needs more than "
        "one additional UAV");

  std::vector<SubareaId> unassigned = s.coverage_subareas();
  std::vector<Point> centers(s.cell_count());
  for (int i = 0; i < s.cell_count(); ++i) centers[i] = subarea_center(s, i);

  CoveragePlan plan;
  plan.method = "cle";
  while (!unassigned.empty()) {
    std::vector<SubareaId> cyc;
    SubareaId last = s.charging_station;
    while (!unassigned.empty()) {
      // Admission test for the candidate size; with constant hop energy it
      // depends only on the count, so run it before picking the neighbor.
      if (!ctx.feasible_with_one[cyc.size() + 1]) break;
      double best_d2 = std::numeric_limits<double>::infinity();
      SubareaId best = -1;
      size_t best_pos = 0;
      for (size_t i = 0; i < unassigned.size(); ++i) {
        SubareaId cand = unassigned[i];
        double dx = centers[cand].x - centers[last].x;
        double dy = centers[cand].y - centers[last].y;
        double d2 = dx * dx + dy * dy;
        if (d2 < best_d2 || (d2 == best_d2 && cand < best)) {
          best_d2 = d2;
          best = cand;
          best_pos = i;
        }
      }
      cyc.push_back(best);
      unassigned.erase(unassigned.begin() + best_pos);
      last = best;
    }
    plan.cycles.push_back(ctx.make_cycle(std::move(cyc)));
  }
  finalize_totals(plan);
  return plan;
}

CoveragePlan sm_plan(const Scenario& s) {
  validate(s);
  GreedyContext ctx(s);
  if (!ctx.feasible_with_one[1])
    throw UnservableError(
        "scenario unservable by SM: a single-subarea cycle needs more than "
        "one additional UAV");

  CoveragePlan plan;
  plan.method = "sm";
  for (SubareaId id : s.coverage_subareas())
    plan.cycles.push_back(ctx.make_cycle({id}));
  finalize_totals(plan);
  return plan;
}

nlohmann::json plan_to_json(const CoveragePlan& plan, const Scenario& s) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["method"] = plan.method;
  j["scenario_hash"] = scenario_hash(s);
  nlohmann::json cycles = nlohmann::json::array();
  for (const Cycle& c : plan.cycles) {
    cycles.push_back({{"subareas", c.subareas},
                      {"k", c.additional_uavs},
                      {"coverage_time_s", rat_to_json(c.coverage_time_s)},
                      {"dwell_s", rat_to_json(c.dwell_time_s)}});
  }
  j["cycles"] = std::move(cycles);
  j["covering_uavs"] = plan.covering_uavs;
  j["additional_uavs"] = plan.additional_uavs;
  j["total_uavs"] = plan.total_uavs;
  return j;
}

CoveragePlan plan_from_json(const nlohmann::json& j) {
  CoveragePlan plan;
  try {
    plan.method = j.value("method", "cle");
    for (const auto& cj : j.at("cycles")) {
      Cycle c;
      c.subareas = cj.at("subareas").get<std::vector<SubareaId>>();
      c.additional_uavs = cj.at("k").get<long>();
      c.coverage_time_s = rat_from_json(cj.at("coverage_time_s"));
      c.dwell_time_s = rat_from_json(cj.at("dwell_s"));
      if (c.subareas.empty()) throw ParseError("plan: empty cycle");
      plan.cycles.push_back(std::move(c));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("plan: ") + e.what());
  }
  finalize_totals(plan);
  return plan;
}

}  // namespace uavcov
