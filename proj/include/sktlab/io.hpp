#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "sktlab/grid.hpp"
#include "sktlab/monitors.hpp"

namespace sktlab {

/// Shortest round-trip-safe text for x with 17 significant digits,
/// independent of the C locale. Non-finite values print as nan / inf / -inf.
std::string format_double(double x);

/// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);
std::string read_file(const std::filesystem::path& path);

/// Snapshot text: `# t`, `# grid`, `# h`, `# species` header lines, then one
/// line per cell (row-major, x fastest) holding the species values.
std::string snapshot_text(const Grid& g, const StateField& s);
/// Parses snapshot text; the grid shape in the header must match g.
StateField parse_snapshot(std::string_view text, const Grid& g);

/// monitors.csv: one header line, one row per recorded sample.
std::string monitors_csv(const MonitorBundle& b);
/// Per-step bookkeeping (mass changes, corrections, Lp residuals).
std::string steps_csv(const MonitorBundle& b);

}  // namespace sktlab
