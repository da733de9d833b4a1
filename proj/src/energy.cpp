#include "uavcov/energy.hpp"

#include <cmath>
#include <stdexcept>

#include "uavcov/errors.hpp"

namespace uavcov {

double hover_power(const PowerParams& pp) {
  if (pp.rotor_swept_area_m2 <= 0 || pp.air_density_kg_m3 <= 0)
    throw std::invalid_argument("hover_power: rotor area and air density must be > 0");
  double total_weight_N = (pp.vehicle_mass_kg + pp.payload_mass_kg) * kGravity;
  double thrust_per_rotor = total_weight_N / 4.0;
  double denom = std::sqrt(2.0 * pp.air_density_kg_m3 * pp.rotor_swept_area_m2);
  return 4.0 * std::pow(thrust_per_rotor, 1.5) / denom + pp.electronics_power_W;
}

double travel_power(const PowerParams& pp) {
  if (pp.transfer_efficiency <= 0 || pp.lift_to_drag <= 0)
    throw std::invalid_argument("travel_power: efficiency and lift-to-drag must be > 0");
  double speed_kmh = pp.speed_m_s * 3.6;
  double propulsion_kW = (pp.payload_mass_kg + pp.vehicle_mass_kg) * speed_kmh /
                         (370.0 * pp.transfer_efficiency * pp.lift_to_drag);
  double electronics_kW = pp.electronics_power_W / 1000.0;
  return (propulsion_kW + electronics_kW) * 1000.0;
}

double los_probability(const LinkParams& lp, double elevation_rad) {
  double theta_deg = 180.0 / M_PI * elevation_rad;
  return 1.0 / (1.0 + lp.env_alpha * std::exp(-lp.env_beta * (theta_deg - lp.env_alpha)));
}

double mean_path_loss_at(const LinkParams& lp, double distance_m,
                         double elevation_rad) {
  if (distance_m <= 0)
    throw std::invalid_argument("mean_path_loss: distance must be > 0");
  double free_space = 20.0 * std::log10(4.0 * M_PI * lp.carrier_freq_Hz *
                                        distance_m / kSpeedOfLight);
  double p_los = los_probability(lp, elevation_rad);
  double l_los = free_space + lp.excess_loss_los_dB;
  double l_nlos = free_space + lp.excess_loss_nlos_dB;
  return p_los * l_los + (1.0 - p_los) * l_nlos;
}

double mean_path_loss(const LinkParams& lp, double distance_m) {
  if (distance_m <= 0)
    throw std::invalid_argument("mean_path_loss: distance must be > 0");
  if (distance_m < lp.altitude_m)
    throw std::invalid_argument("mean_path_loss: distance shorter than altitude");
  double ground = std::sqrt(distance_m * distance_m - lp.altitude_m * lp.altitude_m);
  double elevation = (ground == 0.0) ? M_PI / 2.0 : std::atan(lp.altitude_m / ground);
  return mean_path_loss_at(lp, distance_m, elevation);
}

double required_tx_power_at(const LinkParams& lp, double distance_m,
                            double elevation_rad) {
  return lp.required_rx_power_dB + mean_path_loss_at(lp, distance_m, elevation_rad);
}

double required_tx_power(const LinkParams& lp, double distance_m) {
  return lp.required_rx_power_dB + mean_path_loss(lp, distance_m);
}

EnergyProfile energy_profile(const Scenario& s) {
  EnergyProfile p;
  p.hover_power_W = hover_power(s.power);
  p.travel_power_W = travel_power(s.power);

  double tx_W = s.power.tx_power_W;
  if (s.power.tx_power_from_link) {
    // Link budget at the cell edge: slant distance from altitude and radius.
    const LinkParams& l = s.link;
    double slant = std::sqrt(l.coverage_radius_m * l.coverage_radius_m +
                             l.altitude_m * l.altitude_m);
    double elevation = std::atan2(l.altitude_m, l.coverage_radius_m);
    double tx_dB = required_tx_power_at(l, slant, elevation);
    tx_W = std::pow(10.0, tx_dB / 10.0);
  }
  p.coverage_power_W = p.hover_power_W + tx_W;

  // Exact mirrors: quantize the irrational power values once, then stay
  // rational. Hop energy multiplies the exact travel time.
  p.coverage_power = Rat::from_double_quantized(p.coverage_power_W);
  Rat travel_exact = Rat::from_double_quantized(p.travel_power_W);
  p.hop_energy = travel_exact * s.travel_time_s;
  p.hop_energy_J = p.travel_power_W * s.travel_time_s.to_double();
  p.battery = s.battery_capacity_J;

  if (p.hop_energy >= p.battery)
    throw InfeasibleError("battery cannot complete a single hop");
  return p;
}

}  // namespace uavcov
