#include "gaindoublet/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

namespace gaindoublet {

namespace {

using Json = nlohmann::ordered_json;

std::string join_path(const std::string& parent, const std::string& key) {
  return parent.empty() ? key : parent + "." + key;
}

int line_of_offset(const std::string& text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

void expect_object(const Json& j, const std::string& path) {
  if (!j.is_object()) throw ParseError("config field '" + path + "' must be an object", path);
}

void reject_unknown(const Json& j, const std::string& path, const std::set<std::string>& allowed) {
  for (const auto& item : j.items()) {
    if (!allowed.count(item.key())) {
      const std::string field = join_path(path, item.key());
      throw ParseError("unknown config field '" + field + "'", field);
    }
  }
}

const Json& require(const Json& j, const std::string& path, const std::string& key) {
  if (!j.contains(key)) {
    const std::string field = join_path(path, key);
    throw ParseError("missing required config field '" + field + "'", field);
  }
  return j.at(key);
}

double as_number(const Json& j, const std::string& field) {
  if (!j.is_number()) throw ParseError("config field '" + field + "' must be a number", field);
  return j.get<double>();
}

std::string as_string(const Json& j, const std::string& field) {
  if (!j.is_string()) throw ParseError("config field '" + field + "' must be a string", field);
  return j.get<std::string>();
}

double number_or(const Json& j, const std::string& path, const std::string& key, double fallback) {
  return j.contains(key) ? as_number(j.at(key), join_path(path, key)) : fallback;
}

GainLined parse_line(const Json& j, const std::string& path) {
  expect_object(j, path);
  reject_unknown(j, path, {"center_offset", "strength", "response_time"});
  GainLined line;
  line.center_offset = as_number(require(j, path, "center_offset"), join_path(path, "center_offset"));
  line.strength = as_number(require(j, path, "strength"), join_path(path, "strength"));
  line.response_time = as_number(require(j, path, "response_time"), join_path(path, "response_time"));
  return line;
}

MediumSpecd parse_medium(const Json& j) {
  const std::string path = "medium";
  expect_object(j, path);
  reject_unknown(j, path, {"convention", "mean_index", "length", "lines"});
  MediumSpecd medium;
  const std::string convention = as_string(require(j, path, "convention"), "medium.convention");
  try {
    medium.convention = convention_from_string(convention);
  } catch (const ConfigError& e) {
    throw ParseError(std::string("config field 'medium.convention': ") + e.what(), "medium.convention");
  }
  medium.mean_index = number_or(j, path, "mean_index", medium.mean_index);
  medium.length = number_or(j, path, "length", medium.length);
  const Json& lines = require(j, path, "lines");
  if (!lines.is_array()) throw ParseError("config field 'medium.lines' must be an array", "medium.lines");
  for (std::size_t i = 0; i < lines.size(); ++i)
    medium.lines.push_back(parse_line(lines[i], "medium.lines." + std::to_string(i)));
  return medium;
}

Json medium_to_json(const MediumSpecd& medium) {
  Json lines = Json::array();
  for (const auto& line : medium.lines)
    lines.push_back(
        {{"center_offset", line.center_offset}, {"strength", line.strength}, {"response_time", line.response_time}});
  return {{"convention", to_string(medium.convention)},
          {"mean_index", medium.mean_index},
          {"length", medium.length},
          {"lines", lines}};
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    const int line = line_of_offset(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("config parse error at line " + std::to_string(line) + ": " + e.what(), {}, line);
  }
}

}  // namespace

std::string config_to_text(const ScenarioConfig& config) {
  Json outputs = Json::array();
  for (auto kind : config.outputs) outputs.push_back(to_string(kind));
  Json j{{"name", config.name},
         {"medium", medium_to_json(config.medium)},
         {"pulse", {{"t0", config.pulse.t0}, {"peak_time", config.pulse.peak_time}}},
         {"grid", {{"n_samples", config.grid.n_samples}, {"dt", config.grid.dt}}},
         {"analysis", {{"beat_threshold", config.analysis.beat_threshold}, {"gain_cap", config.analysis.gain_cap}}},
         {"outputs", outputs}};
  return j.dump(2) + "\n";
}

ScenarioConfig parse_config(const std::string& text) {
  const Json j = parse_json(text);
  expect_object(j, "<root>");
  reject_unknown(j, "", {"name", "medium", "pulse", "grid", "analysis", "outputs"});

  ScenarioConfig config;
  if (j.contains("name")) config.name = as_string(j.at("name"), "name");
  config.medium = parse_medium(require(j, "", "medium"));

  const Json& pulse = require(j, "", "pulse");
  expect_object(pulse, "pulse");
  reject_unknown(pulse, "pulse", {"t0", "peak_time"});
  config.pulse.t0 = as_number(require(pulse, "pulse", "t0"), "pulse.t0");
  config.pulse.peak_time = number_or(pulse, "pulse", "peak_time", 0.0);

  const Json& grid = require(j, "", "grid");
  expect_object(grid, "grid");
  reject_unknown(grid, "grid", {"n_samples", "dt"});
  const Json& n = require(grid, "grid", "n_samples");
  if (!n.is_number_integer()) throw ParseError("config field 'grid.n_samples' must be an integer", "grid.n_samples");
  config.grid.n_samples = n.get<Eigen::Index>();
  config.grid.dt = as_number(require(grid, "grid", "dt"), "grid.dt");

  if (j.contains("analysis")) {
    const Json& analysis = j.at("analysis");
    expect_object(analysis, "analysis");
    reject_unknown(analysis, "analysis", {"beat_threshold", "gain_cap"});
    config.analysis.beat_threshold = number_or(analysis, "analysis", "beat_threshold", config.analysis.beat_threshold);
    config.analysis.gain_cap = number_or(analysis, "analysis", "gain_cap", config.analysis.gain_cap);
  }

  if (j.contains("outputs")) {
    const Json& outputs = j.at("outputs");
    if (!outputs.is_array()) throw ParseError("config field 'outputs' must be an array", "outputs");
    for (std::size_t i = 0; i < outputs.size(); ++i) {
      const std::string field = "outputs." + std::to_string(i);
      try {
        config.outputs.push_back(output_kind_from_string(as_string(outputs[i], field)));
      } catch (const ConfigError& e) {
        throw ParseError("config field '" + field + "': " + e.what(), field);
      }
    }
  } else {
    config.outputs = {OutputKind::Traces, OutputKind::Metrics};
  }

  validate(config);
  return config;
}

std::string apply_overrides(const std::string& text, const std::vector<std::string>& overrides) {
  Json j = parse_json(text);
  for (const auto& assignment : overrides) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0)
      throw ConfigError("override '" + assignment + "' must have the form key.path=value");
    const std::string path = assignment.substr(0, eq);
    const std::string raw = assignment.substr(eq + 1);

    std::vector<std::string> segments;
    std::stringstream ss(path);
    for (std::string seg; std::getline(ss, seg, '.');) {
      if (seg.empty()) throw ConfigError("override path '" + path + "' has an empty segment");
      segments.push_back(seg);
    }

    Json* node = &j;
    for (std::size_t i = 0; i < segments.size(); ++i) {
      const std::string& seg = segments[i];
      const bool last = i + 1 == segments.size();
      if (node->is_array()) {
        std::size_t index = 0;
        const auto [ptr, ec] = std::from_chars(seg.data(), seg.data() + seg.size(), index);
        if (ec != std::errc{} || ptr != seg.data() + seg.size() || index >= node->size())
          throw ConfigError("override path '" + path + "': '" + seg + "' is not a valid index (array has " +
                            std::to_string(node->size()) + " entries)");
        node = &(*node)[index];
      } else if (node->is_object()) {
        if (!last && !node->contains(seg)) (*node)[seg] = Json::object();
        node = &(*node)[seg];
      } else {
        throw ConfigError("override path '" + path + "': '" + seg + "' addresses into a scalar value");
      }
    }
    Json value;
    try {
      value = Json::parse(raw);
    } catch (const Json::parse_error&) {
      value = raw;
    }
    *node = std::move(value);
  }
  return j.dump(2) + "\n";
}

ScenarioConfig read_config(const std::filesystem::path& path) { return parse_config(read_text_file(path)); }

void write_config(const ScenarioConfig& config, const std::filesystem::path& path) {
  write_text_file(path, config_to_text(config));
}

std::string format_number(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

namespace {

constexpr const char* kSweepHeader = "separation_hz,peak_shift_s,fwhm_in_s,fwhm_out_s,compression,beat_hz,energy_gain";

std::string row_fields(const SweepRow& row) {
  std::string out = format_number(row.separation) + "," + format_number(row.peak_shift) + "," +
                    format_number(row.fwhm_in) + "," + format_number(row.fwhm_out) + "," +
                    format_number(row.compression) + ",";
  if (row.beat) out += format_number(*row.beat);
  out += "," + format_number(row.energy_gain);
  return out;
}

}  // namespace

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = std::string(kSweepHeader) + "\n";
  for (const auto& row : rows) out += row_fields(row) + "\n";
  return out;
}

std::string metrics_csv(double separation, const PulseMetrics& metrics) {
  return std::string(kSweepHeader) + ",centroid_shift_s\n" + row_fields(to_sweep_row(separation, metrics)) + "," +
         format_number(metrics.centroid_shift) + "\n";
}

std::string trace_csv(const TimeTrace& trace) {
  const Eigen::ArrayXd intensity = trace.intensity();
  const double peak = intensity.maxCoeff();
  std::string out = "time_s,normalized_intensity\n";
  for (Eigen::Index k = 0; k < intensity.size(); ++k)
    out += format_number(trace.grid.time(k)) + "," + format_number(peak > 0 ? intensity(k) / peak : 0.0) + "\n";
  return out;
}

std::string profile_csv(const CouplingProfiled& profile, const MediumSpecd& medium, double pulse_t0) {
  std::string out = "detuning_hz,gamma_in,gamma_ph,gamma_ph_slope_s,pulse_spectrum\n";
  for (Eigen::Index i = 0; i < profile.detunings.size(); ++i) {
    const double f = profile.detunings(i);
    const double spectrum = std::exp(-std::pow(std::numbers::pi * f * pulse_t0, 2));
    out += format_number(f) + "," + format_number(profile.gamma_in(i)) + "," + format_number(profile.gamma_ph(i)) +
           "," + format_number(gamma_ph_slope(f, medium)) + "," + format_number(spectrum) + "\n";
  }
  return out;
}

std::string dispersion_csv(const DispersionTrace& trace) {
  std::string out;
  out += "# pump_offset_hz=" + format_number(trace.pump_offset) + "\n";
  out += "# modulation_frequency_hz=" + format_number(trace.modulation_frequency) + "\n";
  out += "# lockin_gain=" + format_number(trace.lockin_gain) + " (assumed, not calibrated)\n";
  out += "# lockin_offset_rad=" + format_number(trace.lockin_offset) + " (assumed, not calibrated)\n";
  out += "detuning_hz,probe_detuning_hz,phase_rad\n";
  for (Eigen::Index k = 0; k < trace.detunings.size(); ++k)
    out += format_number(trace.detunings(k)) + "," + format_number(trace.pump_offset + trace.detunings(k)) + "," +
           format_number(trace.phase(k)) + "\n";
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << content;
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

}  // namespace gaindoublet
