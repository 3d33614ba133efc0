#include "magnonics/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "magnonics/errors.hpp"

namespace magnonics {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

double parse_double(const std::string& key, const std::string& value) {
  const std::string v = trim(value);
  if (v.empty()) throw ConfigError("empty value", key);
  char* end = nullptr;
  const double out = std::strtod(v.c_str(), &end);
  if (end != v.c_str() + v.size()) throw ConfigError("malformed number '" + v + "'", key);
  if (!std::isfinite(out)) throw ConfigError("value must be finite", key);
  return out;
}

int parse_int(const std::string& key, const std::string& value) {
  const double d = parse_double(key, value);
  if (d != std::floor(d) || std::abs(d) > 1e9)
    throw ConfigError("value must be an integer", key);
  return static_cast<int>(d);
}

std::string format_full(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Numeric key registry in canonical emission order. Frequencies carry an
// alternative rad/s spelling that divides by 2pi on entry.
struct KeyEntry {
  const char* key;
  const char* alt_rad_per_s;  // nullptr when there is no alternative form
  double Config::*member;
};

constexpr KeyEntry kKeys[] = {
    {"verdet_rad_per_m", nullptr, &Config::verdet_rad_per_m},
    {"refractive_index", nullptr, &Config::refractive_index},
    {"spin_density_per_m3", nullptr, &Config::spin_density_per_m3},
    {"radius_m", nullptr, &Config::radius_m},
    {"b0_t", nullptr, &Config::b0_t},
    {"pump_power_w", nullptr, &Config::pump_power_w},
    {"pump_wavelength_m", nullptr, &Config::pump_wavelength_m},
    {"q_optical", nullptr, &Config::q_optical},
    {"omega_b_over_2pi_hz", "omega_b_rad_per_s", &Config::omega_b_over_2pi_hz},
    {"kappa_m_over_2pi_hz", "kappa_m_rad_per_s", &Config::kappa_m_over_2pi_hz},
    {"kappa_b_over_2pi_hz", "kappa_b_rad_per_s", &Config::kappa_b_over_2pi_hz},
    {"temperature_k", nullptr, &Config::temperature_k},
    {"delta_m_over_2pi_hz", "delta_m_rad_per_s", &Config::delta_m_over_2pi_hz},
    {"delta_a_over_2pi_hz", "delta_a_rad_per_s", &Config::delta_a_over_2pi_hz},
    {"delta_b_over_2pi_hz", "delta_b_rad_per_s", &Config::delta_b_over_2pi_hz},
    {"g_mb_over_2pi_hz", "g_mb_rad_per_s", &Config::g_mb_over_2pi_hz},
    {"stability_margin_scale", nullptr, &Config::stability_margin_scale},
    {"sweep_delta_min_over_2pi_hz", nullptr, &Config::sweep_delta_min_over_2pi_hz},
    {"sweep_delta_max_over_2pi_hz", nullptr, &Config::sweep_delta_max_over_2pi_hz},
};

}  // namespace

Config parse_config(const std::string& text) {
  Config c;
  std::set<std::string> seen;  // canonical key of every assignment so far

  const auto mark = [&seen](const std::string& canonical, const std::string& as_written) {
    if (!seen.insert(canonical).second)
      throw ConfigError("key assigned more than once (directly or via its alternative unit form)",
                        as_written);
  };

  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) + " is not of the form key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError("line " + std::to_string(lineno) + " has an empty key");

    bool handled = false;
    for (const auto& entry : kKeys) {
      if (key == entry.key) {
        mark(entry.key, key);
        c.*(entry.member) = parse_double(key, value);
        handled = true;
        break;
      }
      if (entry.alt_rad_per_s && key == entry.alt_rad_per_s) {
        mark(entry.key, key);
        c.*(entry.member) = parse_double(key, value) / two_pi;
        handled = true;
        break;
      }
    }
    if (handled) continue;

    if (key == "sweep_delta_count") {
      mark(key, key);
      c.sweep_delta_count = parse_int(key, value);
    } else if (key == "output_dir") {
      mark(key, key);
      if (value.empty()) throw ConfigError("empty value", key);
      c.output_dir = value;
    } else {
      throw ConfigError("unknown key", key);
    }
  }
  return c;
}

Config load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string emit_config(const Config& c) {
  std::ostringstream out;
  for (const auto& entry : kKeys) out << entry.key << " = " << format_full(c.*(entry.member)) << "\n";
  out << "sweep_delta_count = " << c.sweep_delta_count << "\n";
  if (c.output_dir) out << "output_dir = " << *c.output_dir << "\n";
  return out.str();
}

void Config::validate() const {
  const auto positive = [](double v, const char* key) {
    if (!(v > 0.0) || !std::isfinite(v)) throw ConfigError("must be positive and finite", key);
  };
  const auto nonneg = [](double v, const char* key) {
    if (!(v >= 0.0) || !std::isfinite(v)) throw ConfigError("must be non-negative and finite", key);
  };
  const auto finite = [](double v, const char* key) {
    if (!std::isfinite(v)) throw ConfigError("must be finite", key);
  };
  positive(verdet_rad_per_m, "verdet_rad_per_m");
  positive(refractive_index, "refractive_index");
  positive(spin_density_per_m3, "spin_density_per_m3");
  positive(radius_m, "radius_m");
  positive(b0_t, "b0_t");
  nonneg(pump_power_w, "pump_power_w");
  positive(pump_wavelength_m, "pump_wavelength_m");
  positive(q_optical, "q_optical");
  positive(omega_b_over_2pi_hz, "omega_b_over_2pi_hz");
  positive(kappa_m_over_2pi_hz, "kappa_m_over_2pi_hz");
  positive(kappa_b_over_2pi_hz, "kappa_b_over_2pi_hz");
  nonneg(temperature_k, "temperature_k");
  finite(delta_m_over_2pi_hz, "delta_m_over_2pi_hz");
  finite(delta_a_over_2pi_hz, "delta_a_over_2pi_hz");
  finite(delta_b_over_2pi_hz, "delta_b_over_2pi_hz");
  nonneg(g_mb_over_2pi_hz, "g_mb_over_2pi_hz");
  positive(stability_margin_scale, "stability_margin_scale");
  finite(sweep_delta_min_over_2pi_hz, "sweep_delta_min_over_2pi_hz");
  finite(sweep_delta_max_over_2pi_hz, "sweep_delta_max_over_2pi_hz");
  if (sweep_delta_count < 2) throw ConfigError("must be at least 2", "sweep_delta_count");
}

PhysicalParams Config::to_physical_params() const {
  validate();
  PhysicalParams p;
  p.material.verdet = verdet_rad_per_m;
  p.material.n_r = refractive_index;
  p.material.n_spin = spin_density_per_m3;
  p.material.radius = radius_m;
  p.b0 = b0_t;
  p.pump_power = pump_power_w;
  p.pump_wavelength = pump_wavelength_m;
  p.q_optical = q_optical;
  p.omega_b = two_pi * omega_b_over_2pi_hz;
  p.kappa_m = two_pi * kappa_m_over_2pi_hz;
  p.kappa_b = two_pi * kappa_b_over_2pi_hz;
  p.temperature = temperature_k;
  p.delta_m = two_pi * delta_m_over_2pi_hz;
  p.delta_a = two_pi * delta_a_over_2pi_hz;
  p.delta_b = two_pi * delta_b_over_2pi_hz;
  p.g_mb = two_pi * g_mb_over_2pi_hz;
  return p;
}

}  // namespace magnonics
