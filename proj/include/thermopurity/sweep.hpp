#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "thermopurity/errors.hpp"

namespace thermopurity {

inline constexpr const char* kVersion = "1.0.0";

enum class SweepMode { eta_theta, beta_theta, eta_beta, curve_beta, high_t };

enum class OutputFormat { csv, json };

struct Axis {
  std::string name;  // one of eta, theta, beta
  double min = 0.0;
  double max = 0.0;
  int count = 0;
};

/// Parameter-grid description for figure datasets and ad-hoc sweeps.
/// Axis parameters and fixed parameters must be disjoint and jointly cover
/// {eta, theta, beta} (high_t mode has no beta). In curve_beta mode the fixed
/// map may instead carry identical-particle inputs {c1, c3, m1[, hbar]}.
struct SweepSpec {
  SweepMode mode = SweepMode::eta_theta;
  std::map<std::string, double> fixed;
  Axis axis1;
  std::optional<Axis> axis2;
  OutputFormat format = OutputFormat::csv;
  std::string output_path;
};

struct SweepRow {
  double eta;
  double theta;
  double beta;
  double purity;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  // Metadata: spec echo + code version. No timestamp: output files are
  // byte-identical for identical spec + code version.
  SweepSpec spec;
  std::string version = kVersion;
  std::vector<std::string> anomalies;  // rows that failed the (0, 1] range check
};

const char* mode_name(SweepMode mode);
SweepMode mode_from_name(const std::string& name);

/// Throws InvalidSpec naming the violated invariant.
void validate_spec(const SweepSpec& spec);

/// Evaluates the purity over the grid, axis1 outer and axis2 inner.
/// Row evaluation may run on up to THERMOPURITY_THREADS threads (0 = auto);
/// output order is deterministic regardless.
SweepResult run_sweep(const SweepSpec& spec);

/// Writes the result to spec.output_path in the requested format.
void emit(const SweepResult& result, const SweepSpec& spec);

/// Preset files are flat key-value text, one "name.field = value" per line.
SweepSpec load_preset(const std::string& path, const std::string& name);

}  // namespace thermopurity
