#include "uavcov/scenario.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "uavcov/errors.hpp"

namespace uavcov {

namespace {

using nlohmann::json;

Rat unit_value(const json& j, const char* field, const char* kind) {
  if (!j.is_object() || !j.contains("value") || !j.contains("unit"))
    throw ParseError(std::string(field) + ": expected {value, unit}");
  double v = j.at("value").get<double>();
  std::string unit = j.at("unit").get<std::string>();
  long long factor = 0;
  if (std::string(kind) == "energy") {
    if (unit == "J") factor = 1;
    else if (unit == "Wh") factor = 3600;
    else if (unit == "kWh") factor = 3600000;
  } else {
    if (unit == "s") factor = 1;
    else if (unit == "min") factor = 60;
    else if (unit == "h") factor = 3600;
  }
  if (factor == 0)
    throw ParseError(std::string(field) + ": unsupported unit '" + unit + "'");
  // Quantize in the stated unit, then scale exactly.
  return Rat::from_double_quantized(v) * Rat(factor);
}

json unit_out(const Rat& r, const char* unit) {
  // Internal values are quantized to 1e-6 of the base unit, so a plain
  // double round-trips exactly.
  return {{"value", r.to_double()}, {"unit", unit}};
}

template <typename T>
void read_opt(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

}  // namespace

std::vector<SubareaId> Scenario::coverage_subareas() const {
  std::vector<SubareaId> ids;
  ids.reserve(coverage_count());
  for (int i = 0; i < cell_count(); ++i)
    if (i != charging_station) ids.push_back(i);
  return ids;
}

void validate(const Scenario& s) {
  auto fail = [](const std::string& msg) { throw ParseError("scenario: " + msg); };
  if (s.grid_rows < 1 || s.grid_cols < 1) fail("grid dimensions must be >= 1");
  if (s.cell_count() < 2) fail("grid needs at least one subarea besides the station");
  if (s.charging_station < 0 || s.charging_station >= s.cell_count())
    fail("charging_station index out of range");
  if (s.area_width_m <= 0 || s.area_height_m <= 0) fail("area must be positive");
  if (s.battery_capacity_J.sign() <= 0) fail("battery_capacity must be > 0");
  if (s.travel_time_s.sign() <= 0) fail("travel_time must be > 0");
  if (s.charge_time_s.sign() < 0) fail("charge_time must be >= 0");
  const PowerParams& p = s.power;
  if (p.vehicle_mass_kg <= 0 || p.payload_mass_kg <= 0) fail("masses must be > 0");
  if (p.electronics_power_W <= 0) fail("electronics_power_W must be > 0");
  if (p.air_density_kg_m3 <= 0 || p.rotor_swept_area_m2 <= 0)
    fail("air density and rotor area must be > 0");
  if (p.lift_to_drag <= 0) fail("lift_to_drag must be > 0");
  if (p.transfer_efficiency <= 0 || p.transfer_efficiency > 1)
    fail("transfer_efficiency must be in (0, 1]");
  if (p.speed_m_s < 0) fail("speed must be >= 0");
  if (p.tx_power_W < 0) fail("tx_power_W must be >= 0");
  const LinkParams& l = s.link;
  if (l.carrier_freq_Hz <= 0) fail("carrier_freq_Hz must be > 0");
  if (l.altitude_m < 0) fail("altitude_m must be >= 0");
  if (l.coverage_radius_m <= 0) fail("coverage_radius_m must be > 0");
  if (l.env_alpha <= 0 || l.env_beta <= 0) fail("env_alpha/env_beta must be > 0");
  if (s.hop_energy_mode != "constant") {
    if (s.hop_energy_mode == "distance")
      fail("hop_energy_mode 'distance' is reserved and not implemented");
    fail("unknown hop_energy_mode '" + s.hop_energy_mode + "'");
  }
}

Point subarea_center(const Scenario& s, SubareaId id) {
  if (id < 0 || id >= s.cell_count())
    throw std::out_of_range("subarea id " + std::to_string(id) + " out of range");
  int row = id / s.grid_cols;
  int col = id % s.grid_cols;
  return {(col + 0.5) * s.area_width_m / s.grid_cols,
          (row + 0.5) * s.area_height_m / s.grid_rows};
}

double distance(const Scenario& s, SubareaId a, SubareaId b) {
  Point pa = subarea_center(s, a);
  Point pb = subarea_center(s, b);
  double dx = pa.x - pb.x;
  double dy = pa.y - pb.y;
  return std::sqrt(dx * dx + dy * dy);
}

Scenario scenario_from_json(const json& j) {
  if (!j.contains("schema_version"))
    throw ParseError("scenario: missing schema_version");
  int ver = j.at("schema_version").get<int>();
  if (ver != 1)
    throw ParseError("scenario: unsupported schema_version " + std::to_string(ver));

  Scenario s;
  try {
    auto area = j.at("area_m");
    s.area_width_m = area.at(0).get<double>();
    s.area_height_m = area.at(1).get<double>();
    auto grid = j.at("grid");
    s.grid_rows = grid.at(0).get<int>();
    s.grid_cols = grid.at(1).get<int>();
    s.charging_station = j.at("charging_station").get<int>();
    s.battery_capacity_J = unit_value(j.at("battery_capacity"), "battery_capacity", "energy");
    s.travel_time_s = unit_value(j.at("travel_time"), "travel_time", "time");
    s.charge_time_s = unit_value(j.at("charge_time"), "charge_time", "time");
  } catch (const json::exception& e) {
    throw ParseError(std::string("scenario: ") + e.what());
  }

  if (j.contains("power")) {
    const json& p = j.at("power");
    read_opt(p, "vehicle_mass_kg", s.power.vehicle_mass_kg);
    read_opt(p, "payload_mass_kg", s.power.payload_mass_kg);
    read_opt(p, "electronics_power_W", s.power.electronics_power_W);
    read_opt(p, "air_density_kg_m3", s.power.air_density_kg_m3);
    read_opt(p, "rotor_swept_area_m2", s.power.rotor_swept_area_m2);
    read_opt(p, "lift_to_drag", s.power.lift_to_drag);
    read_opt(p, "transfer_efficiency", s.power.transfer_efficiency);
    read_opt(p, "speed_m_s", s.power.speed_m_s);
    read_opt(p, "tx_power_W", s.power.tx_power_W);
    read_opt(p, "tx_power_from_link", s.power.tx_power_from_link);
  }
  if (j.contains("link")) {
    const json& l = j.at("link");
    read_opt(l, "required_rx_power_dB", s.link.required_rx_power_dB);
    read_opt(l, "env_alpha", s.link.env_alpha);
    read_opt(l, "env_beta", s.link.env_beta);
    read_opt(l, "carrier_freq_Hz", s.link.carrier_freq_Hz);
    read_opt(l, "excess_loss_los_dB", s.link.excess_loss_los_dB);
    read_opt(l, "excess_loss_nlos_dB", s.link.excess_loss_nlos_dB);
    read_opt(l, "altitude_m", s.link.altitude_m);
    read_opt(l, "coverage_radius_m", s.link.coverage_radius_m);
  }
  read_opt(j, "hop_energy_mode", s.hop_energy_mode);

  validate(s);
  return s;
}

json scenario_to_json(const Scenario& s) {
  json j;
  j["schema_version"] = 1;
  j["area_m"] = {s.area_width_m, s.area_height_m};
  j["grid"] = {s.grid_rows, s.grid_cols};
  j["charging_station"] = s.charging_station;
  j["battery_capacity"] = unit_out(s.battery_capacity_J, "J");
  j["travel_time"] = unit_out(s.travel_time_s, "s");
  j["charge_time"] = unit_out(s.charge_time_s, "s");
  j["power"] = {{"vehicle_mass_kg", s.power.vehicle_mass_kg},
                {"payload_mass_kg", s.power.payload_mass_kg},
                {"electronics_power_W", s.power.electronics_power_W},
                {"air_density_kg_m3", s.power.air_density_kg_m3},
                {"rotor_swept_area_m2", s.power.rotor_swept_area_m2},
                {"lift_to_drag", s.power.lift_to_drag},
                {"transfer_efficiency", s.power.transfer_efficiency},
                {"speed_m_s", s.power.speed_m_s},
                {"tx_power_W", s.power.tx_power_W},
                {"tx_power_from_link", s.power.tx_power_from_link}};
  j["link"] = {{"required_rx_power_dB", s.link.required_rx_power_dB},
               {"env_alpha", s.link.env_alpha},
               {"env_beta", s.link.env_beta},
               {"carrier_freq_Hz", s.link.carrier_freq_Hz},
               {"excess_loss_los_dB", s.link.excess_loss_los_dB},
               {"excess_loss_nlos_dB", s.link.excess_loss_nlos_dB},
               {"altitude_m", s.link.altitude_m},
               {"coverage_radius_m", s.link.coverage_radius_m}};
  j["hop_energy_mode"] = s.hop_energy_mode;
  return j;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open scenario file: " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  try {
    return scenario_from_json(j);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void save_scenario(const Scenario& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write scenario file: " + path);
  out << scenario_to_json(s).dump(2) << "\n";
  if (!out) throw IoError("write failed: " + path);
}

std::string scenario_hash(const Scenario& s) {
  std::string canonical = scenario_to_json(s).dump();
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a 64
  for (unsigned char c : canonical) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

}  // namespace uavcov
