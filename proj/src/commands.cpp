#include "magnonics/commands.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "magnonics/dynamics.hpp"
#include "magnonics/entanglement.hpp"
#include "magnonics/errors.hpp"
#include "magnonics/oracle.hpp"
#include "magnonics/sweep.hpp"

namespace magnonics {

namespace {

namespace fs = std::filesystem;

std::string effective_out_dir(const CommandOptions& opt) {
  if (!opt.out_dir.empty()) return opt.out_dir;
  if (opt.config.output_dir) return *opt.config.output_dir;
  return ".";
}

bool out_dir_requested(const CommandOptions& opt) {
  return !opt.out_dir.empty() || opt.config.output_dir.has_value();
}

// Returns false (-> exit 4) when the directory cannot be created or the
// file cannot be fully written.
bool write_file(const std::string& dir, const std::string& name, const std::string& content,
                std::ostream& err) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    err << "cannot create output directory '" << dir << "': " << ec.message() << "\n";
    return false;
  }
  const fs::path path = fs::path(dir) / name;
  std::ofstream f(path, std::ios::binary);
  f << content;
  f.flush();
  if (!f) {
    err << "cannot write '" << path.string() << "'\n";
    return false;
  }
  return true;
}

std::string table_file_name(const std::string& stem, OutputFormat format) {
  return stem + (format == OutputFormat::csv ? ".csv" : ".jsonl");
}

std::string render_sweep(const SweepResult& r, OutputFormat format) {
  std::ostringstream buf;
  write_sweep(buf, r, format);
  return buf.str();
}

struct PointReport {
  DerivedParams derived;
  StabilityReport stability;
  PairEntanglement pairs;  // valid only when stability.stable
};

void print_point_text(std::ostream& out, const PointReport& rep) {
  const auto line = [&out](const char* k, double v) {
    out << k << " = " << format_number(v) << "\n";
  };
  line("omega_m_rad_per_s", rep.derived.omega_m);
  line("omega_p_rad_per_s", rep.derived.omega_p);
  line("omega_a_rad_per_s", rep.derived.omega_a);
  line("kappa_a_rad_per_s", rep.derived.kappa_a);
  line("v_sphere_m3", rep.derived.v_sphere);
  line("g_ma_rad_per_s", rep.derived.g_ma);
  line("n_pump", rep.derived.n_pump);
  line("g_ma_eff_rad_per_s", rep.derived.g_ma_eff);
  line("n_m", rep.derived.n_m);
  line("n_a", rep.derived.n_a);
  line("n_b", rep.derived.n_b);
  out << "stable = " << (rep.stability.stable ? "1" : "0") << "\n";
  line("max_real_eig", rep.stability.max_real_eig);
  if (rep.stability.stable) {
    line("en_light_microwave", rep.pairs.light_microwave.e_n);
    line("en_light_magnon", rep.pairs.light_magnon.e_n);
    line("en_microwave_magnon", rep.pairs.microwave_magnon.e_n);
  }
}

void print_point_json(std::ostream& out, const PointReport& rep) {
  nlohmann::ordered_json j;
  j["derived"] = {{"omega_m_rad_per_s", rep.derived.omega_m},
                  {"omega_p_rad_per_s", rep.derived.omega_p},
                  {"omega_a_rad_per_s", rep.derived.omega_a},
                  {"kappa_a_rad_per_s", rep.derived.kappa_a},
                  {"v_sphere_m3", rep.derived.v_sphere},
                  {"g_ma_rad_per_s", rep.derived.g_ma},
                  {"n_pump", rep.derived.n_pump},
                  {"g_ma_eff_rad_per_s", rep.derived.g_ma_eff},
                  {"n_m", rep.derived.n_m},
                  {"n_a", rep.derived.n_a},
                  {"n_b", rep.derived.n_b}};
  j["stable"] = rep.stability.stable;
  j["max_real_eig"] = rep.stability.max_real_eig;
  if (rep.stability.stable) {
    j["en_light_microwave"] = rep.pairs.light_microwave.e_n;
    j["en_light_magnon"] = rep.pairs.light_magnon.e_n;
    j["en_microwave_magnon"] = rep.pairs.microwave_magnon.e_n;
  }
  out << j.dump() << "\n";
}

int write_point_manifest(const CommandOptions& opt, const PointReport& rep, std::ostream& err) {
  if (!out_dir_requested(opt)) return exit_ok;
  std::vector<std::pair<std::string, std::string>> summary = {
      {"stable", rep.stability.stable ? "1" : "0"},
      {"max_real_eig", format_number(rep.stability.max_real_eig)}};
  if (!write_file(effective_out_dir(opt), "manifest.txt",
                  manifest_text(opt.config, "point", summary), err))
    return exit_unwritable;
  return exit_ok;
}

}  // namespace

int cmd_point(const CommandOptions& opt, std::ostream& out, std::ostream& err) {
  const PhysicalParams p = opt.config.to_physical_params();
  PointReport rep;
  rep.derived = derive(p);
  const SystemMatrices m = build_matrices(rep.derived, p);
  rep.stability = check_stability(m, opt.config.stability_margin_scale);
  if (rep.stability.stable) {
    const SteadyState ss = steady_state(m, opt.config.stability_margin_scale);
    rep.pairs = all_pairs(ss.v);
  }

  if (opt.format == OutputFormat::csv)
    print_point_text(out, rep);
  else
    print_point_json(out, rep);

  if (const int rc = write_point_manifest(opt, rep, err); rc != exit_ok) return rc;
  if (!rep.stability.stable) {
    err << "unstable operating point: max_real_eig = " << format_number(rep.stability.max_real_eig)
        << " (kappa_ref units)\n";
    return exit_unstable;
  }
  return exit_ok;
}

int cmd_sweep(const CommandOptions& opt, std::ostream& out, std::ostream& err) {
  SweepSpec spec;
  spec.base = opt.config.to_physical_params();
  spec.margin_scale = opt.config.stability_margin_scale;
  spec.axes = {Axis{.field = "delta_over_2pi_hz",
                    .start = opt.config.sweep_delta_min_over_2pi_hz,
                    .stop = opt.config.sweep_delta_max_over_2pi_hz,
                    .count = opt.config.sweep_delta_count}};
  const SweepResult r = run_sweep(spec, opt.workers);

  const std::string dir = effective_out_dir(opt);
  const std::string file = table_file_name("sweep", opt.format);
  if (!write_file(dir, file, render_sweep(r, opt.format), err)) return exit_unwritable;

  std::size_t stable_rows = 0;
  for (const auto& row : r.rows) stable_rows += row.stable ? 1 : 0;
  const std::vector<std::pair<std::string, std::string>> summary = {
      {"rows", std::to_string(r.rows.size())},
      {"stable_rows", std::to_string(stable_rows)},
      {"table", file}};
  if (!write_file(dir, "manifest.txt", manifest_text(opt.config, "sweep", summary), err))
    return exit_unwritable;

  out << "wrote " << (fs::path(dir) / file).string() << " (" << r.rows.size() << " rows, "
      << stable_rows << " stable)\n";
  return exit_ok;
}

namespace {

const char* figure_readme =
    "Column-to-figure mapping\n"
    "========================\n"
    "\n"
    "All tables share the trailing columns\n"
    "  stable               1 if the drift matrix is stable at this point\n"
    "  max_real_eig         largest eigenvalue real part, in kappa_ref = 2pi x 1 MHz units\n"
    "  en_light_microwave   logarithmic negativity, optical-microwave bipartition\n"
    "  en_light_magnon      logarithmic negativity, optical-magnon bipartition\n"
    "  en_microwave_magnon  logarithmic negativity, microwave-magnon bipartition\n"
    "Unstable rows leave the en_* cells empty.\n"
    "\n"
    "fig2a.csv        plot en_light_microwave over the (delta_a_over_2pi_hz,\n"
    "                 delta_b_over_2pi_hz) plane (density plot).\n"
    "fig2b_*.csv      plot en_light_microwave vs delta_over_2pi_hz; one curve per\n"
    "                 magnon detuning delta_m (0, 2, 5 MHz).\n"
    "fig3_*.csv       plot en_light_microwave vs delta_over_2pi_hz; one curve per\n"
    "                 optical quality factor Q (5e6, 1e7, 5e7).\n"
    "fig4_*.csv       plot en_light_microwave and en_light_magnon vs\n"
    "                 delta_over_2pi_hz; one file per magnon-microwave coupling\n"
    "                 g_mb (1x, 2x, 4x, 8x of 3.4 MHz).\n"
    "fig5_*.csv       plot en_light_microwave vs temperature_k (log axis); the\n"
    "                 delta_over_2pi_hz column records the optimizing detuning at\n"
    "                 each temperature; same g_mb family as fig4.\n"
    "\n"
    "delta_over_2pi_hz is the linked detuning delta_a = -delta_b = 2pi x value.\n";

}  // namespace

int cmd_figure(const std::string& figure, const CommandOptions& opt, std::ostream& out,
               std::ostream& err) {
  Figure which;
  try {
    which = figure_from_name(figure);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }

  const FigureDataset ds = figure_dataset(which, opt.workers);
  const std::string dir = effective_out_dir(opt);

  std::vector<std::pair<std::string, std::string>> summary;
  for (const FigureCurve& curve : ds.curves) {
    const std::string stem = ds.curves.size() == 1
                                 ? std::string(figure_name(which))
                                 : std::string(figure_name(which)) + "_" + curve.label;
    const std::string file = table_file_name(stem, opt.format);
    if (!write_file(dir, file, render_sweep(curve.data, opt.format), err)) return exit_unwritable;
    summary.emplace_back("table " + file, std::to_string(curve.data.rows.size()) + " rows");
    out << "wrote " << (fs::path(dir) / file).string() << " (" << curve.data.rows.size()
        << " rows)\n";
  }
  if (!write_file(dir, "README.txt", figure_readme, err)) return exit_unwritable;
  if (!write_file(dir, "manifest.txt",
                  manifest_text(opt.config, std::string("figure ") + figure_name(which), summary),
                  err))
    return exit_unwritable;
  return exit_ok;
}

int cmd_validate(const CommandOptions& opt, std::ostream& out, std::ostream& err) {
  const PhysicalParams p = opt.config.to_physical_params();
  const DerivedParams dp = derive(p);
  const SystemMatrices m = build_matrices(dp, p);
  const StabilityReport rep = check_stability(m, opt.config.stability_margin_scale);
  out << "stable = " << (rep.stable ? "1" : "0") << "\n";
  out << "max_real_eig = " << format_number(rep.max_real_eig) << "\n";
  if (!rep.stable) {
    err << "unstable operating point: validation needs a stationary state\n";
    return exit_unstable;
  }

  const SteadyState ss = steady_state(m, opt.config.stability_margin_scale);
  const Mat v_int =
      integrate_covariance(m, default_integration_spec(rep.max_real_eig));
  const double rel_disagreement =
      frobenius_norm(ss.v - v_int) / frobenius_norm(ss.v);
  out << "lyapunov_residual = " << format_number(ss.residual) << "\n";
  out << "integration_disagreement = " << format_number(rel_disagreement) << "\n";

  bool pass = rel_disagreement < 1e-6;
  for (ModePair pair :
       {ModePair::light_microwave, ModePair::light_magnon, ModePair::microwave_magnon}) {
    const BipartiteCov b = reduce(ss.v, pair);
    const EntanglementResult closed = log_negativity(b);
    const double eta_oracle = brute_force_eta(b);
    const double diff = std::abs(closed.eta_minus - eta_oracle);
    out << "eta_minus_" << pair_name(pair) << " = " << format_number(closed.eta_minus) << "\n";
    out << "eta_minus_oracle_" << pair_name(pair) << " = " << format_number(eta_oracle) << "\n";
    pass = pass && diff < 1e-8;
  }
  out << "validation = " << (pass ? "PASS" : "FAIL") << "\n";

  if (out_dir_requested(opt)) {
    const std::vector<std::pair<std::string, std::string>> summary = {
        {"validation", pass ? "PASS" : "FAIL"},
        {"integration_disagreement", format_number(rel_disagreement)}};
    if (!write_file(effective_out_dir(opt), "manifest.txt",
                    manifest_text(opt.config, "validate", summary), err))
      return exit_unwritable;
  }
  return pass ? exit_ok : exit_validation;
}

}  // namespace magnonics
