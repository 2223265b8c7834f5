#pragma once

#include "ghv/report.hpp"

namespace ghv {

/// Runs the selected verification suites for the given configuration.
/// Deterministic for a fixed (config, seed).
Report run_suites(const RunConfig& config);

void run_graph_suite(const RunConfig& config, Report& report);
void run_leonard_suite(const RunConfig& config, Report& report);
void run_hv_suite(const RunConfig& config, Report& report);
void run_nonsym_suite(const RunConfig& config, Report& report);

/// Byte-stable table emission (one file per table) into the directory.
/// Returns the file names written. which: "clique-intersection",
/// "cell-sizes", "recurrence", "systems", "weights", "gram" or "all";
/// table_format: "csv" or "json".
std::vector<std::string> emit_tables(const RunConfig& config, const std::string& which,
                                     const std::string& out_dir,
                                     const std::string& table_format = "csv");

} // namespace ghv
