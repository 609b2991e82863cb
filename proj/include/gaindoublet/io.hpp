#pragma once

// Scenario config text (JSON, strict schema) and CSV result files.
//
// Config schema, all units SI / Hz:
//   {
//     "name": "free text",                              optional
//     "medium": {
//       "convention": "ordinary-frequency" | "angular-frequency",
//       "mean_index": 2.4,                               optional
//       "length": 0.005,                                 optional, m
//       "lines": [ {"center_offset": Hz, "strength": Γ0·d, "response_time": s}, ... ]
//     },
//     "pulse": {"t0": s, "peak_time": s},
//     "grid": {"n_samples": power of two >= 64, "dt": s},
//     "analysis": {"beat_threshold": 0.1, "gain_cap": 50},  optional
//     "outputs": ["traces", "metrics", "profile"]          optional
//   }
// Unknown keys anywhere are rejected.

#include <filesystem>
#include <string>
#include <vector>

#include "gaindoublet/heterodyne.hpp"
#include "gaindoublet/medium.hpp"
#include "gaindoublet/sweep.hpp"

namespace gaindoublet {

std::string config_to_text(const ScenarioConfig& config);
ScenarioConfig parse_config(const std::string& text);

// Applies `dotted.path=value` assignments left to right and returns the
// rewritten config text. Values are parsed as JSON, falling back to a string.
std::string apply_overrides(const std::string& text, const std::vector<std::string>& overrides);

ScenarioConfig read_config(const std::filesystem::path& path);
void write_config(const ScenarioConfig& config, const std::filesystem::path& path);

// Shortest round-trip decimal form.
std::string format_number(double value);

std::string sweep_csv(const std::vector<SweepRow>& rows);
std::string metrics_csv(double separation, const PulseMetrics& metrics);
std::string trace_csv(const TimeTrace& trace);
// Coupling profile plus the dispersion slope and the normalized input-pulse
// spectrum |S(f)| = exp(-(π f t0)²) on the same detunings.
std::string profile_csv(const CouplingProfiled& profile, const MediumSpecd& medium, double pulse_t0);
std::string dispersion_csv(const DispersionTrace& trace);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace gaindoublet
