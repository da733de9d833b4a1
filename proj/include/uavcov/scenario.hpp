#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "uavcov/rational.hpp"

namespace uavcov {

using SubareaId = int;

// Propulsion and electronics parameters of one UAV.
struct PowerParams {
  double vehicle_mass_kg = 8.5;
  double payload_mass_kg = 2.0;
  double electronics_power_W = 150.0;
  double air_density_kg_m3 = 1.225;
  double rotor_swept_area_m2 = 0.2;  // per rotor
  double lift_to_drag = 3.0;         // 3 for VTOL craft
  double transfer_efficiency = 0.7;
  double speed_m_s = 12.0;
  double tx_power_W = 20.0;
  // When set, tx_power_W is ignored and the transmit power is derived from
  // the link budget at the configured coverage radius and altitude.
  bool tx_power_from_link = false;

  bool operator==(const PowerParams&) const = default;
};

// Air-to-ground link-budget parameters.
struct LinkParams {
  double required_rx_power_dB = -70.0;
  double env_alpha = 9.61;  // urban environment constants
  double env_beta = 0.16;
  double carrier_freq_Hz = 2.0e9;
  double excess_loss_los_dB = 1.0;
  double excess_loss_nlos_dB = 20.0;
  double altitude_m = 100.0;
  double coverage_radius_m = 150.0;

  bool operator==(const LinkParams&) const = default;
};

struct Point {
  double x = 0.0;
  double y = 0.0;
};

// A gridded geographical area with one charging-station cell. The station
// cell is never a coverage target; every other cell needs one hovering UAV
// at all times.
struct Scenario {
  double area_width_m = 1000.0;
  double area_height_m = 1000.0;
  int grid_rows = 4;
  int grid_cols = 4;
  SubareaId charging_station = 0;
  Rat battery_capacity_J;  // E
  Rat travel_time_s;       // per-hop time, constant regardless of distance
  Rat charge_time_s;
  PowerParams power;
  LinkParams link;
  // "constant" is the only implemented mode; "distance" is reserved.
  std::string hop_energy_mode = "constant";

  int cell_count() const { return grid_rows * grid_cols; }
  int coverage_count() const { return cell_count() - 1; }
  std::vector<SubareaId> coverage_subareas() const;

  bool operator==(const Scenario&) const = default;
};

// Throws ParseError when an invariant fails.
void validate(const Scenario& s);

// Center of a grid cell, row-major indexing from the origin corner.
Point subarea_center(const Scenario& s, SubareaId id);

// Euclidean distance between cell centers (meters).
double distance(const Scenario& s, SubareaId a, SubareaId b);

Scenario scenario_from_json(const nlohmann::json& j);
nlohmann::json scenario_to_json(const Scenario& s);
Scenario load_scenario(const std::string& path);
void save_scenario(const Scenario& s, const std::string& path);

// FNV-1a hash of the canonical serialization, for plan provenance.
std::string scenario_hash(const Scenario& s);

}  // namespace uavcov
