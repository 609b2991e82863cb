#include "gaindoublet/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <sstream>
#include <thread>

namespace gaindoublet {

namespace {

// Doublet separations of the four panels, Hz.
const std::vector<double> kPanelSeparations{0.0, 1.0, 2.0, 4.0};

constexpr double kStrength = 6.0;     // Γ0·d per line
constexpr double kResponseTime = 1.1; // s
constexpr double kPulseT0 = 0.6;      // s
constexpr double kSpsResponseTime = 1e-3;

ScenarioConfig panel_config(const std::string& stem, std::size_t index, double separation, double scale,
                            std::vector<OutputKind> outputs) {
  ScenarioConfig config;
  std::ostringstream name;
  name << stem << "[" << index << "] separation " << separation << " Hz";
  config.name = name.str();
  config.medium = make_doublet(separation / 2.0, kStrength, kResponseTime * scale,
                               DetuningConvention::AngularFrequency);
  config.pulse = PulseSpec{kPulseT0 * scale, 0.0};
  config.grid = GridSpec{8192, 0.005 * scale};
  config.outputs = std::move(outputs);
  return config;
}

std::vector<ScenarioConfig> panel_set(const std::string& stem, double scale, std::vector<OutputKind> outputs) {
  std::vector<ScenarioConfig> configs;
  for (std::size_t i = 0; i < kPanelSeparations.size(); ++i)
    configs.push_back(panel_config(stem, i, kPanelSeparations[i] / scale, scale, outputs));
  return configs;
}

}  // namespace

std::string to_string(OutputKind kind) {
  switch (kind) {
    case OutputKind::Traces:
      return "traces";
    case OutputKind::Metrics:
      return "metrics";
    case OutputKind::Profile:
      return "profile";
  }
  return "unknown";
}

OutputKind output_kind_from_string(const std::string& text) {
  if (text == "traces") return OutputKind::Traces;
  if (text == "metrics") return OutputKind::Metrics;
  if (text == "profile") return OutputKind::Profile;
  throw ConfigError("unknown output kind '" + text + "' (expected traces, metrics or profile)");
}

const std::vector<PresetInfo>& preset_catalog() {
  static const std::vector<PresetInfo> catalog{
      {"fig1", "coupling profiles and pulse spectrum for doublet separations 0, 1, 2, 4 Hz"},
      {"fig2", "simulated propagation for doublet separations 0, 1, 2, 4 Hz (delay, beat, advance, compression)"},
      {"fig4", "same runs as fig2, for comparison against the measured delay/advance values"},
      {"sps", "fig2 rescaled to a 1 ms response time: identical Γ0d, Δ·τ and t0/τ, time axis x 1/1100"},
  };
  return catalog;
}

std::vector<ScenarioConfig> preset(const std::string& name) {
  if (name == "fig1") return panel_set("fig1", 1.0, {OutputKind::Profile});
  if (name == "fig2") return panel_set("fig2", 1.0, {OutputKind::Traces, OutputKind::Metrics});
  if (name == "fig4") return panel_set("fig4", 1.0, {OutputKind::Traces, OutputKind::Metrics});
  if (name == "sps")
    return panel_set("sps", kSpsResponseTime / kResponseTime, {OutputKind::Traces, OutputKind::Metrics});
  std::string known;
  for (const auto& info : preset_catalog()) known += (known.empty() ? "" : ", ") + info.name;
  throw ConfigError("unknown preset '" + name + "' (available: " + known + ")");
}

double separation_of(const MediumSpecd& medium) {
  if (medium.lines.size() != 2) return 0.0;
  return std::abs(medium.lines[0].center_offset - medium.lines[1].center_offset);
}

void validate(const ScenarioConfig& config) {
  validate(config.medium);
  (void)make_grid(config.grid.n_samples, config.grid.dt);
  if (!(config.pulse.t0 > 0) || !std::isfinite(config.pulse.t0)) throw ConfigError("pulse t0 must be > 0");
  if (!std::isfinite(config.pulse.peak_time)) throw ConfigError("pulse peak_time must be finite");
  if (!(config.analysis.beat_threshold >= 0)) throw ConfigError("analysis beat_threshold must be >= 0");
  if (!(config.analysis.gain_cap > 0)) throw ConfigError("analysis gain_cap must be > 0");
}

PropagationOptions propagation_options(const ScenarioConfig& config) {
  PropagationOptions options;
  options.gain_cap = config.analysis.gain_cap;
  options.metrics.beat_threshold = config.analysis.beat_threshold;
  return options;
}

TimeTrace make_input_pulse(const ScenarioConfig& config) {
  validate(config);
  return gaussian_pulse(config.pulse.t0, config.pulse.peak_time, make_grid(config.grid.n_samples, config.grid.dt));
}

PropagationResult run_config(const ScenarioConfig& config) {
  return run_scenario(make_input_pulse(config), config.medium, propagation_options(config));
}

SweepRow to_sweep_row(double separation, const PulseMetrics& metrics) {
  return SweepRow{separation,        metrics.peak_shift,     metrics.fwhm_in,    metrics.fwhm_out,
                  metrics.compression_ratio, metrics.beat_frequency, metrics.energy_gain};
}

std::vector<SweepRow> run_sweep(const ScenarioConfig& base, const std::vector<double>& separations, unsigned jobs) {
  validate(base);
  for (double s : separations)
    if (!(s >= 0) || !std::isfinite(s)) throw ConfigError("sweep separations must be finite and >= 0");

  const GainLined& line = base.medium.lines.front();
  auto run_point = [&](double separation) {
    ScenarioConfig config = base;
    config.medium = make_doublet(separation / 2.0, line.strength, line.response_time, base.medium.convention);
    config.medium.mean_index = base.medium.mean_index;
    config.medium.length = base.medium.length;
    return to_sweep_row(separation, run_config(config).metrics);
  };

  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  std::vector<SweepRow> rows(separations.size());
  for (std::size_t start = 0; start < separations.size(); start += jobs) {
    const std::size_t stop = std::min(separations.size(), start + jobs);
    std::vector<std::future<SweepRow>> batch;
    for (std::size_t i = start; i < stop; ++i)
      batch.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred, run_point, separations[i]));
    for (std::size_t i = start; i < stop; ++i) rows[i] = batch[i - start].get();
  }
  return rows;
}

}  // namespace gaindoublet
