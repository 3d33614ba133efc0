#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "magnonics/params.hpp"

namespace magnonics {

// Flat key = value configuration. Frequencies are entered per-2pi with an
// explicit *_over_2pi_hz key suffix (a *_rad_per_s spelling is accepted as
// an alternative for each of them); values are stored here exactly as
// entered so emit/parse round-trips bit-for-bit. Unset keys default to the
// baseline operating point.
struct Config {
  double verdet_rad_per_m = 377.0;
  double refractive_index = 2.19;
  double spin_density_per_m3 = 2.1e28;
  double radius_m = 125.0e-6;
  double b0_t = 0.1;
  double pump_power_w = 15.0e-3;
  double pump_wavelength_m = 1550.0e-9;
  double q_optical = 5.0e7;
  double omega_b_over_2pi_hz = 9.0e9;
  double kappa_m_over_2pi_hz = 1.0e6;
  double kappa_b_over_2pi_hz = 1.0e6;
  double temperature_k = 0.01;
  double delta_m_over_2pi_hz = 0.0;
  double delta_a_over_2pi_hz = 0.0;
  double delta_b_over_2pi_hz = 0.0;
  double g_mb_over_2pi_hz = 6.8e6;

  // Numerics / sweep-default / output overrides.
  double stability_margin_scale = 1e-9;
  double sweep_delta_min_over_2pi_hz = -20.0e6;
  double sweep_delta_max_over_2pi_hz = 20.0e6;
  int sweep_delta_count = 401;
  std::optional<std::string> output_dir;

  // Same bounds the physics layer enforces, reported against config key
  // names; throws ConfigError.
  void validate() const;

  PhysicalParams to_physical_params() const;

  bool operator==(const Config&) const = default;
};

// Parses flat key = value text ('#' starts a comment). Unknown or
// duplicate keys, malformed numbers, and giving both unit spellings of the
// same quantity are ConfigErrors naming the key.
Config parse_config(const std::string& text);
Config load_config(const std::string& path);  // ConfigError if unreadable

// Canonical emission: every numeric key once, in fixed order, with
// round-trip (%.17g) precision; output_dir only when set.
std::string emit_config(const Config& c);

}  // namespace magnonics
