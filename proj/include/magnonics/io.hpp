#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "magnonics/config.hpp"
#include "magnonics/sweep.hpp"

namespace magnonics {

enum class OutputFormat { csv, json_lines };

OutputFormat format_from_name(const std::string& name);  // "csv" | "json-lines"

// 12 significant digits, '.' decimal separator; the one numeric format
// every table cell goes through.
std::string format_number(double v);

// Column names for a result table: the axis fields (plus the optimizing
// delta column when the sweep optimized over it), then
// stable, max_real_eig, en_light_microwave, en_light_magnon,
// en_microwave_magnon.
std::vector<std::string> table_columns(const SweepResult& r);

// CSV with a header row, LF endings, empty cells for absent values.
void write_sweep_csv(std::ostream& out, const SweepResult& r);

// One JSON object per row, same fields; absent values are omitted and a
// per-row "error" key appears when evaluation failed.
void write_sweep_json_lines(std::ostream& out, const SweepResult& r);

void write_sweep(std::ostream& out, const SweepResult& r, OutputFormat format);

// Flat key = value manifest: '#' comment lines carry version, timestamp,
// and per-command summary entries, followed by the resolved config, so the
// whole file parses back through parse_config. The timestamp honours
// SOURCE_DATE_EPOCH for reproducible output.
std::string manifest_text(const Config& c, const std::string& command,
                          const std::vector<std::pair<std::string, std::string>>& summary);

}  // namespace magnonics
