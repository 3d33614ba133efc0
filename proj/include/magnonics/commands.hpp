#pragma once

#include <iosfwd>
#include <string>

#include "magnonics/config.hpp"
#include "magnonics/io.hpp"

namespace magnonics {

// Exit codes shared by all subcommands.
inline constexpr int exit_ok = 0;
inline constexpr int exit_internal = 1;
inline constexpr int exit_config = 2;
inline constexpr int exit_unstable = 3;
inline constexpr int exit_unwritable = 4;
inline constexpr int exit_validation = 5;

struct CommandOptions {
  Config config;
  std::string out_dir;  // --out; empty means "not given"
  int workers = 0;      // 0 = hardware default
  OutputFormat format = OutputFormat::csv;
};

// Single operating point: derived parameters, stability verdict, and the
// three logarithmic negativities.
int cmd_point(const CommandOptions& opt, std::ostream& out, std::ostream& err);

// Linked-detuning sweep over [sweep_delta_min, sweep_delta_max] from the
// config; writes sweep.csv (or .jsonl) plus manifest.txt into the output
// directory.
int cmd_sweep(const CommandOptions& opt, std::ostream& out, std::ostream& err);

// Named preset dataset: one table per curve/surface, a README describing
// the column-to-figure mapping, and the manifest.
int cmd_figure(const std::string& figure, const CommandOptions& opt, std::ostream& out,
               std::ostream& err);

// Cross-route check at the configured point: direct Lyapunov solve vs time
// integration, and closed-form eta-minus vs the symplectic-spectrum route.
int cmd_validate(const CommandOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace magnonics
