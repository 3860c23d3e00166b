#pragma once

#include <filesystem>
#include <string>

#include "fsw/harness/config.hpp"
#include "fsw/integrator.hpp"

namespace fsw {

struct RunRecord {
  ExperimentConfig config;
  Trajectory run;
};

inline constexpr const char* kSeriesHeader = "t,H,Hs_norm,linf_slope,inf_slope,sup_slope,xi_inf,xi_sup,slope_integral";

/// Writes config.txt, series.csv, snapshot_<i>.csv and manifest.txt into `dir`
/// (created if needed). Errors carry the offending path.
void write_record(const RunRecord& record, const std::filesystem::path& dir);

/// Reads a directory written by write_record. Floats reload bit-exactly.
RunRecord read_record(const std::filesystem::path& dir);

std::string series_csv(const std::vector<SeriesRow>& series);

/// Writes `text` to `path`, creating parent directories.
void write_text(const std::filesystem::path& path, const std::string& text);
std::string read_text(const std::filesystem::path& path);

}  // namespace fsw
