#include "uavcov/milp.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "uavcov/energy.hpp"
#include "uavcov/errors.hpp"

namespace uavcov {

std::string milp_var_x(int m) { return "x_" + std::to_string(m); }
std::string milp_var_y(int i, int j, int m, int t) {
  return "y_" + std::to_string(i) + "_" + std::to_string(j) + "_" +
         std::to_string(m) + "_t" + std::to_string(t);
}
std::string milp_var_z(int j, int m, int t) {
  return "z_" + std::to_string(j) + "_" + std::to_string(m) + "_t" + std::to_string(t);
}
std::string milp_var_station_event(int m, int t) {
  return "s_" + std::to_string(m) + "_t" + std::to_string(t);
}

long long MilpModel::xyz_var_count() const {
  long long M = budget;
  long long G = nodes;
  long long G0 = nodes - 1;
  long long T = horizon_slots;
  return M + M * G * G * (T + 1) + M * G0 * (T - 1);
}

namespace {

// Accumulates one row; repeated variables merge coefficients while the
// first-seen emission order is preserved (keeps the export byte-stable).
class RowBuilder {
 public:
  explicit RowBuilder(std::string name) { row_.name = std::move(name); }
  void add(int var, long long coeff) {
    auto it = pos_.find(var);
    if (it == pos_.end()) {
      pos_[var] = row_.terms.size();
      row_.terms.emplace_back(var, coeff);
    } else {
      row_.terms[it->second].second += coeff;
    }
  }
  MilpRow take(char sense, long long rhs) {
    row_.sense = sense;
    row_.rhs = rhs;
    return std::move(row_);
  }

 private:
  MilpRow row_;
  std::map<int, size_t> pos_;
};

struct Families {
  int M;      // UAV budget
  int G;      // nodes, 1 = station
  int T;      // last slot index
  MilpModel* model;

  int var(const std::string& name) const { return model->var_index.at(name); }
  int x(int m) const { return var(milp_var_x(m)); }
  int y(int i, int j, int m, int t) const { return var(milp_var_y(i, j, m, t)); }
  int z(int j, int m, int t) const { return var(milp_var_z(j, m, t)); }
  int sv(int m, int t) const { return var(milp_var_station_event(m, t)); }
};

}  // namespace

MilpModel build_model(const Scenario& s, int uav_budget, int horizon_slots,
                      long long size_cap) {
  validate(s);
  if (uav_budget < 1)
    throw std::invalid_argument("milp: UAV budget must be >= 1");
  if (horizon_slots < 2)
    throw std::invalid_argument("milp: horizon must be >= 2 slots");

  MilpModel model;
  model.budget = uav_budget;
  model.horizon_slots = horizon_slots;
  model.nodes = s.cell_count();
  const int M = uav_budget;
  const int G = model.nodes;
  const int T = horizon_slots;

  // Slot duration is one hop time; charge time rounds up to whole slots.
  model.charge_slots = (s.charge_time_s / s.travel_time_s).ceil_ll();
  EnergyProfile profile = energy_profile(s);
  model.hop_energy_J = profile.hop_energy.round_half_up_ll();
  model.cover_energy_per_slot_J =
      (profile.coverage_power * s.travel_time_s).round_half_up_ll();
  model.battery_J = s.battery_capacity_J.round_half_up_ll();
  const long long big_m = model.battery_J + 1;

  {
    long long est_vars = model.xyz_var_count() + static_cast<long long>(M) * (T + 1);
    long long est_rows =
        static_cast<long long>(M) * G * G * (T + 1)   // (1)
        + static_cast<long long>(M) * (G - 1) * (T - 1) * 3  // (2),(6) self,(8)
        + static_cast<long long>(M) * (T + 1) * (2 * G + 1)  // s-var links
        + static_cast<long long>(M) * (T + 1) * (T + 1) / 2; // (10) windows
    if (est_vars + est_rows > size_cap)
      throw std::invalid_argument(
          "milp: model too large (~" + std::to_string(est_vars) + " variables, ~" +
          std::to_string(est_rows) + " rows; cap " + std::to_string(size_cap) + ")");
  }

  auto reg = [&](const std::string& name) {
    model.var_index.emplace(name, static_cast<int>(model.vars.size()));
    model.vars.push_back(name);
  };
  // Registry order defines the Binary section: x, y, z, then station-event
  // indicators. Node 1 is the station; coverage cells follow in row-major
  // scenario order. Slots are 0-based, UAVs 1-based.
  for (int m = 1; m <= M; ++m) reg(milp_var_x(m));
  for (int m = 1; m <= M; ++m)
    for (int t = 0; t <= T; ++t)
      for (int i = 1; i <= G; ++i)
        for (int j = 1; j <= G; ++j) reg(milp_var_y(i, j, m, t));
  for (int m = 1; m <= M; ++m)
    for (int t = 1; t <= T - 1; ++t)
      for (int j = 2; j <= G; ++j) reg(milp_var_z(j, m, t));
  for (int m = 1; m <= M; ++m)
    for (int t = 0; t <= T; ++t) reg(milp_var_station_event(m, t));

  Families f{M, G, T, &model};
  for (int m = 1; m <= M; ++m) model.objective.push_back(f.x(m));

  auto row_name = [](int family, int idx) {
    return "c" + std::to_string(family) + "_" + std::to_string(idx);
  };
  int idx;

  // (1) travel only when selected: y <= x.
  idx = 0;
  for (int m = 1; m <= M; ++m)
    for (int t = 0; t <= T; ++t)
      for (int i = 1; i <= G; ++i)
        for (int j = 1; j <= G; ++j) {
          RowBuilder r(row_name(1, idx++));
          r.add(f.y(i, j, m, t), 1);
          r.add(f.x(m), -1);
          model.rows.push_back(r.take('L', 0));
        }

  // (2) cover only when selected: z <= x.
  idx = 0;
  for (int m = 1; m <= M; ++m)
    for (int t = 1; t <= T - 1; ++t)
      for (int j = 2; j <= G; ++j) {
        RowBuilder r(row_name(2, idx++));
        r.add(f.z(j, m, t), 1);
        r.add(f.x(m), -1);
        model.rows.push_back(r.take('L', 0));
      }

  // (3) every coverage subarea receives a UAV from the station at slot 0.
  idx = 0;
  for (int j = 2; j <= G; ++j) {
    RowBuilder r(row_name(3, idx++));
    for (int m = 1; m <= M; ++m) r.add(f.y(1, j, m, 0), 1);
    model.rows.push_back(r.take('E', 1));
  }

  // (4) exactly one coverer per subarea per interior slot.
  idx = 0;
  for (int j = 2; j <= G; ++j)
    for (int t = 1; t <= T - 1; ++t) {
      RowBuilder r(row_name(4, idx++));
      for (int m = 1; m <= M; ++m) r.add(f.z(j, m, t), 1);
      model.rows.push_back(r.take('E', 1));
    }

  // (5) at most one incoming move per subarea per slot.
  idx = 0;
  for (int j = 2; j <= G; ++j)
    for (int t = 0; t <= T; ++t) {
      RowBuilder r(row_name(5, idx++));
      for (int i = 1; i <= G; ++i) {
        if (i == j) continue;
        for (int m = 1; m <= M; ++m) r.add(f.y(i, j, m, t), 1);
      }
      model.rows.push_back(r.take('L', 1));
    }

  // (6) handoff: arrivals at j in slot t equal departures from j in t+1,
  // aggregated over UAVs, plus per-UAV rows forbidding self-handoff.
  idx = 0;
  for (int j = 2; j <= G; ++j)
    for (int t = 1; t <= T - 1; ++t) {
      RowBuilder r(row_name(6, idx++));
      for (int m = 1; m <= M; ++m)
        for (int i = 1; i <= G; ++i) r.add(f.y(i, j, m, t), 1);
      for (int m = 1; m <= M; ++m)
        for (int i = 1; i <= G; ++i) r.add(f.y(j, i, m, t + 1), -1);
      model.rows.push_back(r.take('E', 0));
    }
  for (int j = 2; j <= G; ++j)
    for (int t = 1; t <= T - 1; ++t)
      for (int m = 1; m <= M; ++m) {
        RowBuilder r(row_name(6, idx++));
        for (int i = 1; i <= G; ++i) r.add(f.y(i, j, m, t), 1);
        for (int i = 1; i <= G; ++i) r.add(f.y(j, i, m, t + 1), 1);
        model.rows.push_back(r.take('L', 1));
      }

  // (7) a subarea is covered at least as often as it is visited.
  idx = 0;
  for (int j = 2; j <= G; ++j) {
    RowBuilder r(row_name(7, idx++));
    for (int m = 1; m <= M; ++m)
      for (int t = 0; t <= T - 1; ++t)
        for (int i = 1; i <= G; ++i) r.add(f.y(i, j, m, t), 1);
    for (int m = 1; m <= M; ++m)
      for (int t = 1; t <= T - 1; ++t) r.add(f.z(j, m, t), -1);
    model.rows.push_back(r.take('L', 0));
  }

  // (8) no departure within the recharge window after a station arrival;
  // one row per lookahead offset tau (rows whose departure slot would fall
  // past the horizon are dropped).
  idx = 0;
  for (int m = 1; m <= M; ++m)
    for (int t = 1; t <= T - 1; ++t)
      for (long long tau = 1; tau <= model.charge_slots; ++tau) {
        if (t + tau > T) break;
        RowBuilder r(row_name(8, idx++));
        for (int j = 2; j <= G; ++j) r.add(f.y(j, 1, m, t), 1);
        for (int j = 2; j <= G; ++j)
          r.add(f.y(1, j, m, t + static_cast<int>(tau)), 1);
        model.rows.push_back(r.take('L', 1));
      }

  // (9) total station departures equal total station arrivals.
  {
    RowBuilder r(row_name(9, 0));
    for (int m = 1; m <= M; ++m)
      for (int t = 0; t <= T; ++t)
        for (int j = 2; j <= G; ++j) r.add(f.y(1, j, m, t), 1);
    for (int m = 1; m <= M; ++m)
      for (int t = 0; t <= T; ++t)
        for (int i = 2; i <= G; ++i) r.add(f.y(i, 1, m, t), -1);
    model.rows.push_back(r.take('E', 0));
  }

  // (10) battery budget per station-to-station window. Station-event
  // indicators s_m_t dominate every departure/arrival of UAV m in slot t;
  // a window row binds only when it starts with a departure, ends with an
  // arrival, and no station event occurs in between.
  idx = 0;
  for (int m = 1; m <= M; ++m)
    for (int t = 0; t <= T; ++t) {
      for (int j = 2; j <= G; ++j) {
        RowBuilder r(row_name(10, idx++));
        r.add(f.y(1, j, m, t), 1);
        r.add(f.sv(m, t), -1);
        model.rows.push_back(r.take('L', 0));
      }
      for (int i = 2; i <= G; ++i) {
        RowBuilder r(row_name(10, idx++));
        r.add(f.y(i, 1, m, t), 1);
        r.add(f.sv(m, t), -1);
        model.rows.push_back(r.take('L', 0));
      }
      RowBuilder r(row_name(10, idx++));
      r.add(f.sv(m, t), 1);
      for (int j = 2; j <= G; ++j) r.add(f.y(1, j, m, t), -1);
      for (int i = 2; i <= G; ++i) r.add(f.y(i, 1, m, t), -1);
      model.rows.push_back(r.take('L', 0));
    }
  for (int m = 1; m <= M; ++m)
    for (int t1 = 0; t1 < T; ++t1)
      for (int t2 = t1 + 1; t2 <= T; ++t2) {
        RowBuilder r(row_name(10, idx++));
        for (int t = t1; t <= t2; ++t)
          for (int i = 1; i <= G; ++i)
            for (int j = 1; j <= G; ++j) {
              if (i == j) continue;  // no movement, no travel energy
              r.add(f.y(i, j, m, t), model.hop_energy_J);
            }
        for (int t = std::max(t1, 1); t <= std::min(t2, T - 1); ++t)
          for (int j = 2; j <= G; ++j)
            r.add(f.z(j, m, t), model.cover_energy_per_slot_J);
        for (int j = 2; j <= G; ++j) r.add(f.y(1, j, m, t1), big_m);
        for (int i = 2; i <= G; ++i) r.add(f.y(i, 1, m, t2), big_m);
        for (int t = t1 + 1; t <= t2 - 1; ++t) r.add(f.sv(m, t), -big_m);
        model.rows.push_back(r.take('L', model.battery_J + 2 * big_m));
      }

  model.notes = {
      "continuous-coverage UAV deployment, time-expanded 0/1 program",
      "nodes: 1 = charging station, 2.." + std::to_string(G) +
          " = coverage subareas in row-major grid order",
      "slots: t = 0.." + std::to_string(T) + ", slot duration = one hop time; " +
          "charge time = " + std::to_string(model.charge_slots) + " slot(s)",
      "variables: x_<m> UAV selected; y_<i>_<j>_<m>_t<t> move i->j in slot t; " +
          std::string("z_<j>_<m>_t<t> cover j in slot t; s_<m>_t<t> station event"),
      "rows: c<family>_<index>; family 10 lists indicator links first, then " +
          std::string("battery windows guarded by big-M = battery + 1 J"),
      "t-domains as printed: y over [0,T], z and handoffs over (0,T), visits over [0,T); " +
          "boundary note: the family-6 equalities force a successor arrival for every " +
          "departure, so rows at t = T-1 bind only schedules that wind down inside the horizon",
      "energies in whole joules: hop = " + std::to_string(model.hop_energy_J) +
          ", cover/slot = " + std::to_string(model.cover_energy_per_slot_J) +
          ", battery = " + std::to_string(model.battery_J),
  };
  return model;
}

std::string export_lp(const MilpModel& m) {
  std::ostringstream os;
  for (const std::string& note : m.notes) os << "\\ " << note << "\n";
  os << "Minimize\n obj:";
  for (size_t i = 0; i < m.objective.size(); ++i)
    os << (i == 0 ? " " : " + ") << m.vars[m.objective[i]];
  os << "\nSubject To\n";
  for (const MilpRow& row : m.rows) {
    os << " " << row.name << ":";
    int on_line = 0;
    bool first = true;
    for (const auto& [var, coeff] : row.terms) {
      if (coeff == 0) continue;
      if (on_line == 12) {  // wrap long rows
        os << "\n   ";
        on_line = 0;
      }
      long long mag = coeff < 0 ? -coeff : coeff;
      if (first)
        os << (coeff < 0 ? " - " : " ");
      else
        os << (coeff < 0 ? " - " : " + ");
      if (mag != 1) os << mag << " ";
      os << m.vars[var];
      first = false;
      ++on_line;
    }
    os << (row.sense == 'E' ? " = " : " <= ") << row.rhs << "\n";
  }
  os << "Binary\n";
  for (const std::string& v : m.vars) os << " " << v << "\n";
  os << "End\n";
  return os.str();
}

void export_lp(const MilpModel& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write LP file: " + path);
  out << export_lp(m);
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace uavcov
