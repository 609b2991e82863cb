#pragma once

// Scenario configuration, built-in presets and separation sweeps.

#include <optional>
#include <string>
#include <vector>

#include "gaindoublet/medium.hpp"
#include "gaindoublet/propagator.hpp"

namespace gaindoublet {

enum class OutputKind { Traces, Metrics, Profile };

std::string to_string(OutputKind kind);
OutputKind output_kind_from_string(const std::string& text);

struct PulseSpec {
  double t0{0.6};  // s
  double peak_time{0.0};
  bool operator==(const PulseSpec&) const = default;
};

struct GridSpec {
  Eigen::Index n_samples{8192};
  double dt{0.005};  // s
  bool operator==(const GridSpec&) const = default;
};

struct AnalysisSpec {
  double beat_threshold{0.1};
  double gain_cap{50.0};
  bool operator==(const AnalysisSpec&) const = default;
};

struct ScenarioConfig {
  std::string name;
  MediumSpecd medium;
  PulseSpec pulse;
  GridSpec grid;
  AnalysisSpec analysis;
  std::vector<OutputKind> outputs;

  bool operator==(const ScenarioConfig&) const = default;
};

struct SweepRow {
  double separation{0};  // Hz, 2Δ
  double peak_shift{0};  // s
  double fwhm_in{0};
  double fwhm_out{0};
  double compression{1};  // fwhm_out / fwhm_in
  std::optional<double> beat;
  double energy_gain{1};
};

struct PresetInfo {
  std::string name;
  std::string description;
};

const std::vector<PresetInfo>& preset_catalog();
std::vector<ScenarioConfig> preset(const std::string& name);

// Distance between the two lines of a doublet; 0 for any other line count.
double separation_of(const MediumSpecd& medium);

void validate(const ScenarioConfig& config);

PropagationOptions propagation_options(const ScenarioConfig& config);
TimeTrace make_input_pulse(const ScenarioConfig& config);
PropagationResult run_config(const ScenarioConfig& config);

// One row per separation, in input order. Points run on up to `jobs` threads
// (0 = hardware concurrency); the doublet is rebuilt from the first line of
// base.medium at ±separation/2.
std::vector<SweepRow> run_sweep(const ScenarioConfig& base, const std::vector<double>& separations,
                                unsigned jobs = 0);

SweepRow to_sweep_row(double separation, const PulseMetrics& metrics);

}  // namespace gaindoublet
