#include "magnonics/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "magnonics/dynamics.hpp"
#include "magnonics/errors.hpp"

namespace magnonics {

OutputFormat format_from_name(const std::string& name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json-lines") return OutputFormat::json_lines;
  throw ConfigError("unknown format '" + name + "' (expected csv or json-lines)");
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::vector<std::string> table_columns(const SweepResult& r) {
  std::vector<std::string> cols;
  for (const auto& ax : r.spec.axes) cols.push_back(ax.field);
  if (r.spec.optimize_delta) cols.push_back(r.spec.inner_delta.field);
  cols.insert(cols.end(), {"stable", "max_real_eig", "en_light_microwave", "en_light_magnon",
                           "en_microwave_magnon"});
  return cols;
}

void write_sweep_csv(std::ostream& out, const SweepResult& r) {
  const auto cols = table_columns(r);
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << "\n";
  const auto cell = [](const std::optional<double>& v) {
    return v ? format_number(*v) : std::string{};
  };
  for (const SweepRow& row : r.rows) {
    for (double v : row.axis_values) out << format_number(v) << ",";
    if (r.spec.optimize_delta) out << cell(row.opt_delta_over_2pi_hz) << ",";
    out << (row.stable ? "1" : "0") << "," << format_number(row.max_real_eig) << ","
        << cell(row.en_light_microwave) << "," << cell(row.en_light_magnon) << ","
        << cell(row.en_microwave_magnon) << "\n";
  }
}

void write_sweep_json_lines(std::ostream& out, const SweepResult& r) {
  const auto cols = table_columns(r);
  for (const SweepRow& row : r.rows) {
    nlohmann::ordered_json j;
    for (std::size_t ax = 0; ax < row.axis_values.size(); ++ax)
      j[cols[ax]] = row.axis_values[ax];
    if (r.spec.optimize_delta && row.opt_delta_over_2pi_hz)
      j[r.spec.inner_delta.field] = *row.opt_delta_over_2pi_hz;
    j["stable"] = row.stable;
    j["max_real_eig"] = row.max_real_eig;
    if (row.en_light_microwave) j["en_light_microwave"] = *row.en_light_microwave;
    if (row.en_light_magnon) j["en_light_magnon"] = *row.en_light_magnon;
    if (row.en_microwave_magnon) j["en_microwave_magnon"] = *row.en_microwave_magnon;
    if (!row.error.empty()) j["error"] = row.error;
    out << j.dump() << "\n";
  }
}

void write_sweep(std::ostream& out, const SweepResult& r, OutputFormat format) {
  if (format == OutputFormat::csv)
    write_sweep_csv(out, r);
  else
    write_sweep_json_lines(out, r);
}

namespace {

std::string timestamp_utc() {
  std::time_t t = std::time(nullptr);
  if (const char* sde = std::getenv("SOURCE_DATE_EPOCH")) {
    char* end = nullptr;
    const long long v = std::strtoll(sde, &end, 10);
    if (end && *end == '\0') t = static_cast<std::time_t>(v);
  }
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

std::string manifest_text(const Config& c, const std::string& command,
                          const std::vector<std::pair<std::string, std::string>>& summary) {
  std::string out;
  out += "# manifest version = " + std::string(version) + "\n";
  out += "# timestamp = " + timestamp_utc() + "\n";
  out += "# command = " + command + "\n";
  for (const auto& [k, v] : summary) out += "# " + k + " = " + v + "\n";

  const PhysicalParams p = c.to_physical_params();
  const DerivedParams d = derive(p);
  const auto derived_line = [&out](const char* k, double v) {
    out += "# derived " + std::string(k) + " = " + format_number(v) + "\n";
  };
  derived_line("omega_m_rad_per_s", d.omega_m);
  derived_line("omega_p_rad_per_s", d.omega_p);
  derived_line("kappa_a_rad_per_s", d.kappa_a);
  derived_line("v_sphere_m3", d.v_sphere);
  derived_line("g_ma_rad_per_s", d.g_ma);
  derived_line("n_pump", d.n_pump);
  derived_line("g_ma_eff_rad_per_s", d.g_ma_eff);
  derived_line("n_m", d.n_m);
  derived_line("n_a", d.n_a);
  derived_line("n_b", d.n_b);

  out += emit_config(c);
  return out;
}

}  // namespace magnonics
