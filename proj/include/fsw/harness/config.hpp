#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "fsw/grid.hpp"
#include "fsw/integrator.hpp"

namespace fsw {

enum class InitialFamily { gaussian, sech2, sine_packet, steep_ramp };

std::string to_string(InitialFamily f);
InitialFamily parse_initial_family(const std::string& s);

struct InitialDataSpec {
  InitialFamily family = InitialFamily::gaussian;
  double amplitude = 0.1;
  double width = 2.0;
  double center = 0.0;
  /// Required for sine_packet, ignored otherwise.
  std::optional<int> wavenumber;

  void validate() const;
  bool operator==(const InitialDataSpec&) const = default;
};

struct ExperimentConfig {
  GridSpec grid{1024, 20.0 * std::numbers::pi};
  InitialDataSpec initial;
  SolverConfig solver;
  double sobolev_s = 1.75;
  std::filesystem::path output_dir = "out";

  /// Throws std::invalid_argument when any part is inconsistent.
  void validate() const;

  /// Canonical key=value text, one key per line in a fixed order, floats in
  /// shortest round-trip form. Parsing it yields an equal config.
  std::string to_text() const;

  /// 16 hex digits of FNV-1a over to_text() without the output_dir line.
  std::string id() const;

  bool operator==(const ExperimentConfig&) const = default;
};

/// Parses key=value lines. Blank lines and lines starting with '#' are skipped.
/// Unknown keys, duplicate keys and malformed values are errors. Real values
/// accept a trailing "pi" factor ("20pi", "0.5*pi").
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Shortest decimal text that parses back to exactly `v`.
std::string format_double(double v);
double parse_double(const std::string& s);

}  // namespace fsw
