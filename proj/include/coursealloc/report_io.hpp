#pragma once

#include <string>
#include <vector>

#include "coursealloc/metrics.hpp"

namespace coursealloc {

// One header row, one row per run, and one aggregate row per configuration
// group (same algorithm and config echo, in first-seen order). Aggregate rows
// carry means in the metric columns and population standard deviations in the
// *_sd columns; they are marked by an empty seed cell. Numbers are written
// with enough digits to round-trip exactly.
void write_reports(const std::vector<RunReport>& reports, const std::string& path);

// Long-format series for plotting: one row per (algorithm, metric, sweep
// value) with mean and standard deviation over the repetitions at that point.
// `axis` names the swept field: "n", "q", or "w".
void write_plot_data(const std::vector<RunReport>& reports, const std::string& axis,
                     const std::string& path);

// Per-round anytime curve of a search run: round, best illegal count so far,
// best utility so far.
void write_anytime_trace(const RunReport& report, const std::string& path);

std::string csv_header();
std::string csv_row(const RunReport& report);

}  // namespace coursealloc
