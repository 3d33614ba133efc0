#pragma once

#include <numbers>

namespace magnonics {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

// Fundamental constants (SI, CODATA 2018). gamma_gyro is the electron
// gyromagnetic ratio in rad s^-1 T^-1.
struct PhysicalConstants {
  double c = 299792458.0;
  double hbar = 1.054571817e-34;
  double k_b = 1.380649e-23;
  double gamma_gyro = two_pi * 28.0e9;

  // Throws std::invalid_argument naming the field if anything is
  // non-positive or gamma_gyro strays more than 0.1% from 2pi x 28 GHz/T.
  void validate() const;
};

// YIG sphere material data and geometry.
struct MaterialParams {
  double verdet = 377.0;     // Verdet constant, rad/m
  double n_r = 2.19;         // refractive index
  double n_spin = 2.1e28;    // spin density, m^-3
  double radius = 125.0e-6;  // sphere radius, m

  void validate() const;
};

// Full experiment description. Defaults are the baseline operating point;
// rates are angular frequencies (rad/s), detunings are signed.
struct PhysicalParams {
  MaterialParams material;

  double b0 = 0.1;                    // bias magnetic field, T
  double pump_power = 15.0e-3;        // optical drive power, W
  double pump_wavelength = 1550.0e-9; // m
  double q_optical = 5.0e7;           // loaded optical quality factor
  double omega_b = two_pi * 9.0e9;    // microwave resonance, rad/s
  double kappa_m = two_pi * 1.0e6;    // magnon linewidth, rad/s
  double kappa_b = two_pi * 1.0e6;    // microwave linewidth, rad/s
  double temperature = 0.01;          // K
  double delta_m = 0.0;               // magnon drive detuning, rad/s
  double delta_a = 0.0;               // optical drive detuning, rad/s
  double delta_b = 0.0;               // microwave drive detuning, rad/s
  double g_mb = two_pi * 6.8e6;       // magnon-microwave coupling, rad/s

  void validate() const;
};

// Everything computed from PhysicalParams before the dynamics can be built.
struct DerivedParams {
  double omega_m;   // magnon frequency gamma*B0, rad/s
  double omega_p;   // pump (= optical cavity) frequency, rad/s
  double omega_a;   // optical cavity frequency, rad/s
  double kappa_a;   // total optical linewidth omega_a / Q, rad/s
  double kappa_a1;  // input-coupler part; single-port cavity, so = kappa_a
  double v_sphere;  // sphere volume, m^3
  double g_ma;      // single-photon optomagnonic coupling, rad/s
  double n_pump;    // steady intracavity photon number
  double g_ma_eff;  // pump-enhanced coupling g_ma * sqrt(n_pump), rad/s
  double n_m;       // thermal occupation at omega_m
  double n_a;       // thermal occupation at omega_a
  double n_b;       // thermal occupation at omega_b
};

// Bose-Einstein occupation 1 / (exp(hbar w / kB T) - 1); exactly 0 at
// T = 0, overflow-safe for any positive frequency and temperature.
double thermal_occupation(double omega, double temperature,
                          const PhysicalConstants& pc = {});

// Single-photon optomagnonic coupling from Faraday rotation:
// g = V (c / n_r) sqrt(2 / (n_spin V_sphere)).
double coupling_g_ma(const MaterialParams& m, const PhysicalConstants& pc = {});

// Intracavity photon number for a resonantly pumped single-port cavity:
// 4 P / (kappa_a1 hbar omega_p).
double intracavity_photons(double pump_power, double kappa_a1, double omega_p,
                           const PhysicalConstants& pc = {});

// Computes every derived quantity; pure, no caching.
DerivedParams derive(const PhysicalParams& p, const PhysicalConstants& pc = {});

}  // namespace magnonics
