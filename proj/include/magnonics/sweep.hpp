#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "magnonics/entanglement.hpp"
#include "magnonics/params.hpp"

namespace magnonics {

inline constexpr const char* version = "1.0.0";

// One swept field. The field name selects both the PhysicalParams member
// and its unit convention ("*_over_2pi_hz" keys are entered per-2pi and
// converted to rad/s internally). The pseudo-field "delta_over_2pi_hz"
// binds the linked constraint delta_a = -delta_b = 2pi * value.
struct Axis {
  std::string field;
  double start = 0.0;
  double stop = 0.0;
  int count = 0;
  bool log_spaced = false;
  // Explicit grid values (field units); overrides start/stop/count so
  // non-arithmetic families can be swept.
  std::vector<double> values;

  std::vector<double> grid() const;  // materialized grid, size >= 2
};

// Writes one axis value into the parameter set; throws
// std::invalid_argument for a field name that is not sweepable.
void apply_field(PhysicalParams& p, const std::string& field, double value);

struct SweepSpec {
  PhysicalParams base;
  std::vector<Axis> axes;  // 1 or 2; row-major order, last axis fastest
  double margin_scale = 1e-9;
  // Per-point inner optimization: at each grid point, sweep inner_delta
  // (linked detunings) and keep the point maximizing light-microwave E_N.
  bool optimize_delta = false;
  Axis inner_delta;
};

struct SweepRow {
  std::vector<double> axis_values;  // one per axis, field units
  bool stable = false;
  double max_real_eig = 0.0;  // kappa_ref units; NaN if evaluation failed
  std::optional<double> en_light_microwave;
  std::optional<double> en_light_magnon;
  std::optional<double> en_microwave_magnon;
  // Optimizing linked detuning (field units), when optimize_delta is set
  // and at least one inner point was stable.
  std::optional<double> opt_delta_over_2pi_hz;
  std::string error;  // non-empty when evaluation failed outside instability
};

struct SweepResult {
  SweepSpec spec;             // echo of the evaluated spec
  DerivedParams base_derived; // derived quantities at the base point
  std::string code_version = version;
  std::vector<SweepRow> rows; // row-major over axes
};

// Evaluates derive -> build_matrices -> check_stability -> steady_state ->
// all_pairs at every grid point. Row order is row-major over the axes and
// byte-identical regardless of worker count; per-point failures are
// recorded in the row, never aborting the sweep. workers <= 0 uses the
// OpenMP default.
SweepResult run_sweep(const SweepSpec& spec, int workers = 0);

// Single-threaded reference implementation with no OpenMP in the loop;
// must produce results identical to run_sweep.
SweepResult run_sweep_serial(const SweepSpec& spec);

struct Optimum {
  std::size_t index = 0;  // row-major index into rows
  SweepRow row;
  double e_n = 0.0;
};

// Grid argmax of E_N for the pair over stable rows; ties break to the
// first row-major occurrence. Throws AllUnstableError when no stable row
// carries the pair.
Optimum find_optimum(const SweepResult& result, ModePair pair);
Optimum find_optimum(const SweepSpec& spec, ModePair pair, int workers = 0);

enum class Figure { fig2a, fig2b, fig3, fig4, fig5 };

Figure figure_from_name(const std::string& name);  // throws std::invalid_argument
const char* figure_name(Figure which);

// One emitted table: a family member (fixed outer value) or, for fig2a,
// the single 2-D surface.
struct FigureCurve {
  std::string label;       // file-name fragment, e.g. "q_5e7"
  std::string outer_field; // empty for fig2a
  double outer_value = 0.0;
  SweepResult data;
};

struct FigureDataset {
  Figure which;
  std::vector<FigureCurve> curves;
};

// Baked-in preset datasets; see README for the exact grids.
FigureDataset figure_dataset(Figure which, int workers = 0);

}  // namespace magnonics
