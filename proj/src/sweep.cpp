#include "magnonics/sweep.hpp"

#include <omp.h>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "magnonics/dynamics.hpp"
#include "magnonics/errors.hpp"

namespace magnonics {

std::vector<double> Axis::grid() const {
  if (!values.empty()) {
    if (values.size() < 2)
      throw std::invalid_argument("Axis: explicit grid needs at least 2 values");
    return values;
  }
  if (count < 2) throw std::invalid_argument("Axis: count must be at least 2");
  std::vector<double> g(static_cast<std::size_t>(count));
  if (log_spaced) {
    if (!(start > 0.0) || !(stop > 0.0))
      throw std::invalid_argument("Axis: log spacing needs positive endpoints");
    const double l0 = std::log(start);
    const double l1 = std::log(stop);
    for (int i = 0; i < count; ++i)
      g[static_cast<std::size_t>(i)] = std::exp(l0 + (l1 - l0) * i / (count - 1));
  } else {
    const double step = (stop - start) / (count - 1);
    for (int i = 0; i < count; ++i) g[static_cast<std::size_t>(i)] = start + step * i;
  }
  return g;
}

void apply_field(PhysicalParams& p, const std::string& field, double value) {
  if (field == "delta_over_2pi_hz") {
    // Linked convention: one symbol drives both drive detunings.
    p.delta_a = two_pi * value;
    p.delta_b = -two_pi * value;
  } else if (field == "delta_m_over_2pi_hz") {
    p.delta_m = two_pi * value;
  } else if (field == "delta_a_over_2pi_hz") {
    p.delta_a = two_pi * value;
  } else if (field == "delta_b_over_2pi_hz") {
    p.delta_b = two_pi * value;
  } else if (field == "g_mb_over_2pi_hz") {
    p.g_mb = two_pi * value;
  } else if (field == "kappa_m_over_2pi_hz") {
    p.kappa_m = two_pi * value;
  } else if (field == "kappa_b_over_2pi_hz") {
    p.kappa_b = two_pi * value;
  } else if (field == "omega_b_over_2pi_hz") {
    p.omega_b = two_pi * value;
  } else if (field == "temperature_k") {
    p.temperature = value;
  } else if (field == "q_optical") {
    p.q_optical = value;
  } else if (field == "pump_power_w") {
    p.pump_power = value;
  } else if (field == "pump_wavelength_m") {
    p.pump_wavelength = value;
  } else if (field == "b0_t") {
    p.b0 = value;
  } else {
    throw std::invalid_argument("apply_field: unknown field '" + field + "'");
  }
}

namespace {

constexpr double g_base_over_2pi_hz = 3.4e6;

SweepRow evaluate_point(const PhysicalParams& p, double margin_scale) {
  SweepRow row;
  row.max_real_eig = std::numeric_limits<double>::quiet_NaN();
  try {
    const DerivedParams dp = derive(p);
    const SystemMatrices m = build_matrices(dp, p);
    const StabilityReport rep = check_stability(m, margin_scale);
    row.stable = rep.stable;
    row.max_real_eig = rep.max_real_eig;
    if (rep.stable) {
      const Mat v = lyapunov_solve(m.a, m.d, margin_scale);
      const PairEntanglement pe = all_pairs(v);
      row.en_light_microwave = pe.light_microwave.e_n;
      row.en_light_magnon = pe.light_magnon.e_n;
      row.en_microwave_magnon = pe.microwave_magnon.e_n;
    }
  } catch (const std::exception& e) {
    row.error = e.what();
    row.en_light_microwave.reset();
    row.en_light_magnon.reset();
    row.en_microwave_magnon.reset();
  }
  return row;
}

// Inner linked-detuning optimization: returns the best stable inner point
// by light-microwave E_N (first occurrence wins ties).
SweepRow evaluate_optimized_point(const PhysicalParams& p, const Axis& inner,
                                  double margin_scale) {
  SweepRow best;
  best.max_real_eig = std::numeric_limits<double>::quiet_NaN();
  double best_en = -std::numeric_limits<double>::infinity();
  bool found = false;
  for (double dv : inner.grid()) {
    PhysicalParams q = p;
    apply_field(q, inner.field, dv);
    SweepRow r = evaluate_point(q, margin_scale);
    if (r.en_light_microwave && *r.en_light_microwave > best_en) {
      best_en = *r.en_light_microwave;
      best = std::move(r);
      best.opt_delta_over_2pi_hz = dv;
      found = true;
    }
  }
  if (!found) best = SweepRow{.max_real_eig = std::numeric_limits<double>::quiet_NaN()};
  return best;
}

struct Grids {
  std::vector<std::vector<double>> axis_grids;
  std::size_t total = 1;
};

Grids materialize(const SweepSpec& spec) {
  if (spec.axes.empty() || spec.axes.size() > 2)
    throw std::invalid_argument("SweepSpec: need 1 or 2 axes");
  {
    // Field names must resolve before any point is evaluated.
    PhysicalParams probe = spec.base;
    for (const auto& ax : spec.axes) apply_field(probe, ax.field, ax.start);
    if (spec.optimize_delta) apply_field(probe, spec.inner_delta.field, spec.inner_delta.start);
  }
  Grids g;
  for (const auto& ax : spec.axes) {
    g.axis_grids.push_back(ax.grid());
    g.total *= g.axis_grids.back().size();
  }
  return g;
}

SweepRow evaluate_row(const SweepSpec& spec, const Grids& g, std::size_t flat) {
  std::vector<double> axis_values(g.axis_grids.size());
  std::size_t rem = flat;
  for (std::size_t ax = g.axis_grids.size(); ax-- > 0;) {
    const auto& grid = g.axis_grids[ax];
    axis_values[ax] = grid[rem % grid.size()];
    rem /= grid.size();
  }
  PhysicalParams p = spec.base;
  for (std::size_t ax = 0; ax < axis_values.size(); ++ax)
    apply_field(p, spec.axes[ax].field, axis_values[ax]);
  SweepRow row = spec.optimize_delta
                     ? evaluate_optimized_point(p, spec.inner_delta, spec.margin_scale)
                     : evaluate_point(p, spec.margin_scale);
  row.axis_values = std::move(axis_values);
  return row;
}

SweepResult run_sweep_impl(const SweepSpec& spec, int workers, bool parallel) {
  const Grids g = materialize(spec);
  SweepResult result;
  result.spec = spec;
  result.base_derived = derive(spec.base);
  result.rows.resize(g.total);

  if (parallel) {
    const int nthreads = workers > 0 ? workers : omp_get_max_threads();
    const long long total = static_cast<long long>(g.total);
#pragma omp parallel for schedule(static) num_threads(nthreads)
    for (long long k = 0; k < total; ++k)
      result.rows[static_cast<std::size_t>(k)] =
          evaluate_row(spec, g, static_cast<std::size_t>(k));
  } else {
    for (std::size_t k = 0; k < g.total; ++k) result.rows[k] = evaluate_row(spec, g, k);
  }
  return result;
}

}  // namespace

SweepResult run_sweep(const SweepSpec& spec, int workers) {
  return run_sweep_impl(spec, workers, /*parallel=*/true);
}

SweepResult run_sweep_serial(const SweepSpec& spec) {
  return run_sweep_impl(spec, 1, /*parallel=*/false);
}

Optimum find_optimum(const SweepResult& result, ModePair pair) {
  Optimum best;
  bool found = false;
  double best_en = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < result.rows.size(); ++i) {
    const SweepRow& row = result.rows[i];
    if (!row.stable) continue;
    const std::optional<double>* en = nullptr;
    switch (pair) {
      case ModePair::light_magnon: en = &row.en_light_magnon; break;
      case ModePair::light_microwave: en = &row.en_light_microwave; break;
      case ModePair::microwave_magnon: en = &row.en_microwave_magnon; break;
    }
    if (!en->has_value()) continue;
    if (**en > best_en) {
      best_en = **en;
      best = {i, row, **en};
      found = true;
    }
  }
  if (!found)
    throw AllUnstableError("find_optimum: no stable grid point carries pair " +
                           std::string(pair_name(pair)));
  return best;
}

Optimum find_optimum(const SweepSpec& spec, ModePair pair, int workers) {
  return find_optimum(run_sweep(spec, workers), pair);
}

Figure figure_from_name(const std::string& name) {
  if (name == "fig2a") return Figure::fig2a;
  if (name == "fig2b") return Figure::fig2b;
  if (name == "fig3") return Figure::fig3;
  if (name == "fig4") return Figure::fig4;
  if (name == "fig5") return Figure::fig5;
  throw std::invalid_argument("unknown figure '" + name +
                              "' (expected fig2a, fig2b, fig3, fig4, or fig5)");
}

const char* figure_name(Figure which) {
  switch (which) {
    case Figure::fig2a: return "fig2a";
    case Figure::fig2b: return "fig2b";
    case Figure::fig3: return "fig3";
    case Figure::fig4: return "fig4";
    case Figure::fig5: return "fig5";
  }
  return "?";
}

namespace {

Axis linked_delta_axis() { return {.field = "delta_over_2pi_hz", .start = -20.0e6, .stop = 20.0e6, .count = 401}; }

}  // namespace

FigureDataset figure_dataset(Figure which, int workers) {
  FigureDataset out;
  out.which = which;
  const PhysicalParams base;  // defaults are the baseline operating point

  switch (which) {
    case Figure::fig2a: {
      SweepSpec s;
      s.base = base;
      s.base.q_optical = 2.0e7;
      s.axes = {Axis{.field = "delta_a_over_2pi_hz", .start = -20.0e6, .stop = 20.0e6, .count = 201},
                Axis{.field = "delta_b_over_2pi_hz", .start = -20.0e6, .stop = 20.0e6, .count = 201}};
      out.curves.push_back({"surface", "", 0.0, run_sweep(s, workers)});
      break;
    }
    case Figure::fig2b: {
      const std::pair<const char*, double> family[] = {
          {"delta_m_0mhz", 0.0}, {"delta_m_2mhz", 2.0e6}, {"delta_m_5mhz", 5.0e6}};
      for (const auto& [label, dm] : family) {
        SweepSpec s;
        s.base = base;
        apply_field(s.base, "delta_m_over_2pi_hz", dm);
        s.axes = {linked_delta_axis()};
        out.curves.push_back({label, "delta_m_over_2pi_hz", dm, run_sweep(s, workers)});
      }
      break;
    }
    case Figure::fig3: {
      const std::pair<const char*, double> family[] = {
          {"q_5e6", 5.0e6}, {"q_1e7", 1.0e7}, {"q_5e7", 5.0e7}};
      for (const auto& [label, q] : family) {
        SweepSpec s;
        s.base = base;
        s.base.q_optical = q;
        s.axes = {linked_delta_axis()};
        out.curves.push_back({label, "q_optical", q, run_sweep(s, workers)});
      }
      break;
    }
    case Figure::fig4:
    case Figure::fig5: {
      const std::pair<const char*, double> family[] = {{"g_mb_1x", 1.0},
                                                       {"g_mb_2x", 2.0},
                                                       {"g_mb_4x", 4.0},
                                                       {"g_mb_8x", 8.0}};
      for (const auto& [label, mult] : family) {
        const double g_mb = mult * g_base_over_2pi_hz;
        SweepSpec s;
        s.base = base;
        apply_field(s.base, "g_mb_over_2pi_hz", g_mb);
        if (which == Figure::fig4) {
          s.axes = {linked_delta_axis()};
        } else {
          s.axes = {Axis{.field = "temperature_k",
                         .start = 0.01,
                         .stop = 2.0,
                         .count = 100,
                         .log_spaced = true}};
          s.optimize_delta = true;
          s.inner_delta = linked_delta_axis();
        }
        out.curves.push_back({label, "g_mb_over_2pi_hz", g_mb, run_sweep(s, workers)});
      }
      break;
    }
  }
  return out;
}

}  // namespace magnonics
