#include "magnonics/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace magnonics {

namespace {

void require_positive(double v, const char* field) {
  if (!(v > 0.0) || !std::isfinite(v))
    throw std::invalid_argument(std::string(field) + " must be positive and finite");
}

void require_nonnegative(double v, const char* field) {
  if (!(v >= 0.0) || !std::isfinite(v))
    throw std::invalid_argument(std::string(field) + " must be non-negative and finite");
}

void require_finite(double v, const char* field) {
  if (!std::isfinite(v)) throw std::invalid_argument(std::string(field) + " must be finite");
}

}  // namespace

void PhysicalConstants::validate() const {
  require_positive(c, "c");
  require_positive(hbar, "hbar");
  require_positive(k_b, "k_b");
  require_positive(gamma_gyro, "gamma_gyro");
  if (std::abs(gamma_gyro / (two_pi * 28.0e9) - 1.0) > 1e-3)
    throw std::invalid_argument("gamma_gyro must stay within 0.1% of 2pi x 28 GHz/T");
}

void MaterialParams::validate() const {
  require_positive(verdet, "verdet");
  require_positive(n_r, "n_r");
  require_positive(n_spin, "n_spin");
  require_positive(radius, "radius");
}

void PhysicalParams::validate() const {
  material.validate();
  require_positive(b0, "b0");
  require_nonnegative(pump_power, "pump_power");
  require_positive(pump_wavelength, "pump_wavelength");
  require_positive(q_optical, "q_optical");
  require_positive(omega_b, "omega_b");
  require_positive(kappa_m, "kappa_m");
  require_positive(kappa_b, "kappa_b");
  require_nonnegative(temperature, "temperature");
  require_finite(delta_m, "delta_m");
  require_finite(delta_a, "delta_a");
  require_finite(delta_b, "delta_b");
  require_nonnegative(g_mb, "g_mb");
}

double thermal_occupation(double omega, double temperature, const PhysicalConstants& pc) {
  require_positive(omega, "omega");
  require_nonnegative(temperature, "temperature");
  if (temperature == 0.0) return 0.0;
  // expm1 keeps the classical limit kT/hbar w accurate and overflows to
  // +inf (giving exactly 0) deep in the quantum regime.
  return 1.0 / std::expm1(pc.hbar * omega / (pc.k_b * temperature));
}

double coupling_g_ma(const MaterialParams& m, const PhysicalConstants& pc) {
  m.validate();
  const double v_sphere = (4.0 / 3.0) * pi * m.radius * m.radius * m.radius;
  return m.verdet * (pc.c / m.n_r) * std::sqrt(2.0 / (m.n_spin * v_sphere));
}

double intracavity_photons(double pump_power, double kappa_a1, double omega_p,
                           const PhysicalConstants& pc) {
  require_nonnegative(pump_power, "pump_power");
  require_positive(kappa_a1, "kappa_a1");
  require_positive(omega_p, "omega_p");
  return 4.0 * pump_power / (kappa_a1 * pc.hbar * omega_p);
}

DerivedParams derive(const PhysicalParams& p, const PhysicalConstants& pc) {
  pc.validate();
  p.validate();

  DerivedParams d{};
  d.omega_m = pc.gamma_gyro * p.b0;
  d.omega_p = two_pi * pc.c / p.pump_wavelength;
  d.omega_a = d.omega_p;  // pump sits on the optical resonance
  d.kappa_a = d.omega_a / p.q_optical;
  d.kappa_a1 = d.kappa_a;
  d.v_sphere = (4.0 / 3.0) * pi * p.material.radius * p.material.radius * p.material.radius;
  d.g_ma = coupling_g_ma(p.material, pc);
  d.n_pump = intracavity_photons(p.pump_power, d.kappa_a1, d.omega_p, pc);
  d.g_ma_eff = d.g_ma * std::sqrt(d.n_pump);
  d.n_m = thermal_occupation(d.omega_m, p.temperature, pc);
  d.n_a = thermal_occupation(d.omega_a, p.temperature, pc);
  d.n_b = thermal_occupation(p.omega_b, p.temperature, pc);
  return d;
}

}  // namespace magnonics
