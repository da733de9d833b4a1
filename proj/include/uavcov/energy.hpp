#pragma once

#include "uavcov/rational.hpp"
#include "uavcov/scenario.hpp"

namespace uavcov {

// Per-scenario energy quantities the planner consumes. The double fields
// are convenience views; the Rat fields are the authoritative exact values
// (quantized once at this boundary, see Rat::from_double_quantized).
struct EnergyProfile {
  double hover_power_W = 0.0;
  double travel_power_W = 0.0;
  double coverage_power_W = 0.0;  // hover + transmit
  double hop_energy_J = 0.0;      // travel power * hop time

  Rat coverage_power;  // exact watts
  Rat hop_energy;      // exact joules
  Rat battery;         // exact joules, copied from the scenario
};

// Hover power in watts: 4 * T^(3/2) / sqrt(2*Q*S) + p, with T the per-rotor
// thrust share (total weight / 4) in newtons.
double hover_power(const PowerParams& pp);

// Forward-flight power in watts: (m_p+m_v)*v[km/h] / (370*eta*r) kW plus
// electronics.
double travel_power(const PowerParams& pp);

// Probability of a line-of-sight link at the given elevation angle.
double los_probability(const LinkParams& lp, double elevation_rad);

// Mean path loss in dB at straight-line distance d; the elevation angle is
// derived from the configured altitude unless supplied explicitly.
double mean_path_loss(const LinkParams& lp, double distance_m);
double mean_path_loss_at(const LinkParams& lp, double distance_m,
                         double elevation_rad);

// Required transmit power in dB: receiver threshold plus mean path loss.
double required_tx_power(const LinkParams& lp, double distance_m);
double required_tx_power_at(const LinkParams& lp, double distance_m,
                            double elevation_rad);

// Derives the full profile. Throws InfeasibleError when a single hop
// already exceeds the battery.
EnergyProfile energy_profile(const Scenario& s);

inline constexpr double kGravity = 9.81;           // m/s^2
inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

}  // namespace uavcov
