#include "gaindoublet/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>

#include "gaindoublet/heterodyne.hpp"
#include "gaindoublet/io.hpp"
#include "gaindoublet/medium.hpp"
#include "gaindoublet/propagator.hpp"
#include "gaindoublet/svg.hpp"
#include "gaindoublet/sweep.hpp"

namespace gaindoublet {

namespace fs = std::filesystem;

namespace {

// Raised while resolving inputs; maps to exit code 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ScenarioArgs {
  std::string preset;
  std::size_t index{0};
  std::string config_path;
  std::vector<std::string> overrides;
  std::string output_dir;
  bool svg{false};
};

struct Resolved {
  ScenarioConfig config;
  std::string text;  // resolved config as written next to outputs
  std::string stem;  // deterministic file-name prefix
  std::vector<double> preset_separations;
};

void add_scenario_options(CLI::App* cmd, ScenarioArgs& args, bool needs_output) {
  cmd->add_option("--preset", args.preset, "built-in preset name (see `presets`)");
  cmd->add_option("--index", args.index, "scenario index within the preset")->default_val(0);
  cmd->add_option("-c,--config", args.config_path, "scenario config file (JSON)");
  cmd->add_option("--set", args.overrides, "override a config value, e.g. medium.lines.0.strength=0 (repeatable)")
      ->allow_extra_args(false);
  auto* out = cmd->add_option("-o,--output-dir", args.output_dir, "directory for output files");
  if (needs_output) out->required();
  cmd->add_flag("--svg", args.svg, "also write SVG plots");
}

Resolved resolve(const std::string& command, const ScenarioArgs& args) {
  if (args.preset.empty() == args.config_path.empty()) throw UsageError("give exactly one of --preset or --config");
  Resolved r;
  std::string base_text;
  try {
    if (!args.preset.empty()) {
      const auto configs = preset(args.preset);
      if (args.index >= configs.size())
        throw UsageError("--index " + std::to_string(args.index) + " out of range; preset '" + args.preset +
                         "' has " + std::to_string(configs.size()) + " scenarios");
      base_text = config_to_text(configs[args.index]);
      for (const auto& c : configs) r.preset_separations.push_back(separation_of(c.medium));
      r.stem = command + "_" + args.preset + (command == "sweep" ? "" : "_" + std::to_string(args.index));
    } else {
      base_text = read_text_file(args.config_path);
      r.stem = command + "_" + fs::path(args.config_path).stem().string();
    }
    r.config = parse_config(apply_overrides(base_text, args.overrides));
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  } catch (const ConfigError& e) {
    throw UsageError(e.what());
  } catch (const IoError& e) {
    throw UsageError(e.what());
  }
  r.text = config_to_text(r.config);
  return r;
}

fs::path prepare_output_dir(const std::string& dir) {
  fs::path path(dir);
  std::error_code ec;
  fs::create_directories(path, ec);
  if (ec) throw IoError("cannot create output directory '" + dir + "': " + ec.message());
  return path;
}

bool wants(const ScenarioConfig& config, OutputKind kind) {
  return std::find(config.outputs.begin(), config.outputs.end(), kind) != config.outputs.end();
}

void print_metrics(std::ostream& out, const ScenarioConfig& config, const PulseMetrics& m) {
  out << "scenario: " << config.name << "\n"
      << "  separation_hz   " << separation_of(config.medium) << "\n"
      << "  regime          " << to_string(classify_dispersion(config.medium)) << "\n"
      << "  group_delay_s   " << group_delay(config.medium) << "\n"
      << "  peak_shift_s    " << m.peak_shift << "\n"
      << "  centroid_shift  " << m.centroid_shift << "\n"
      << "  compression     " << m.compression_ratio << "\n"
      << "  beat_hz         " << (m.beat_frequency ? format_number(*m.beat_frequency) : std::string("none")) << "\n"
      << "  energy_gain     " << m.energy_gain << "\n";
}

void write_profile(const fs::path& dir, const std::string& stem, const ScenarioConfig& config, double fmin,
                   double fmax, Eigen::Index points, bool svg) {
  if (!(fmax > fmin) || points < 2) throw UsageError("profile range needs fmin < fmax and at least 2 points");
  const Eigen::ArrayXd grid = Eigen::ArrayXd::LinSpaced(points, fmin, fmax);
  const auto profile = dispersion_profile(config.medium, grid);
  write_text_file(dir / (stem + "_profile.csv"), profile_csv(profile, config.medium, config.pulse.t0));
  if (svg) write_text_file(dir / (stem + "_profile.svg"), profile_svg(profile, config.name));
}

int cmd_presets(const std::string& name, std::ostream& out) {
  if (name.empty()) {
    for (const auto& info : preset_catalog()) out << info.name << "\t" << info.description << "\n";
    return kExitOk;
  }
  std::vector<ScenarioConfig> configs;
  try {
    configs = preset(name);
  } catch (const ConfigError& e) {
    throw UsageError(e.what());
  }
  for (std::size_t i = 0; i < configs.size(); ++i) out << "# index " << i << "\n" << config_to_text(configs[i]);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& argv_in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pulse propagation through a two-pump photorefractive gain doublet", "gaindoublet"};
  app.require_subcommand(1);

  ScenarioArgs coeffs_args, propagate_args, sweep_args, heterodyne_args;

  auto* coeffs = app.add_subcommand("coeffs", "write the coupling/dispersion profile (CSV)");
  add_scenario_options(coeffs, coeffs_args, true);
  double fmin = -4.0, fmax = 4.0;
  Eigen::Index profile_points = 801;
  coeffs->add_option("--fmin", fmin, "lowest detuning, Hz")->default_val(-4.0);
  coeffs->add_option("--fmax", fmax, "highest detuning, Hz")->default_val(4.0);
  coeffs->add_option("--points", profile_points, "number of detuning samples")->default_val(801);

  auto* propagate = app.add_subcommand("propagate", "propagate the Gaussian probe and write traces + metrics");
  add_scenario_options(propagate, propagate_args, true);

  auto* sweep = app.add_subcommand("sweep", "sweep the doublet separation and write one CSV row per point");
  add_scenario_options(sweep, sweep_args, true);
  std::vector<double> separations;
  unsigned jobs = 0;
  sweep->add_option("--separations", separations, "separations 2Δ in Hz (default: the preset's)")->delimiter(',');
  sweep->add_option("-j,--jobs", jobs, "worker threads (0 = all cores)")->default_val(0);

  auto* heterodyne = app.add_subcommand("heterodyne", "simulate the swept-probe dispersion measurement");
  add_scenario_options(heterodyne, heterodyne_args, true);
  ScanSpec scan;
  std::string pump = "both";
  heterodyne->add_option("--ramp-min", scan.ramp_min, "scan start relative to the pump, Hz")->default_val(-0.5);
  heterodyne->add_option("--ramp-max", scan.ramp_max, "scan end relative to the pump, Hz")->default_val(0.5);
  heterodyne->add_option("--points", scan.n_points, "scan points")->default_val(201);
  heterodyne->add_option("--modulation", scan.modulation_frequency, "PZT modulation frequency, Hz (metadata)")
      ->default_val(1000.0);
  heterodyne->add_option("--pump", pump, "line index to scan, or 'both' for one trace per pump")->default_val("both");

  auto* presets = app.add_subcommand("presets", "list built-in presets, or print one preset's configs");
  std::string preset_name;
  presets->add_option("name", preset_name, "preset to describe");

  try {
    std::vector<std::string> reversed(argv_in.rbegin(), argv_in.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::optional<Resolved> resolved;
  ScenarioArgs* args = nullptr;
  std::string command;
  const std::vector<std::pair<CLI::App*, ScenarioArgs*>> scenario_commands{
      {coeffs, &coeffs_args}, {propagate, &propagate_args}, {sweep, &sweep_args}, {heterodyne, &heterodyne_args}};
  for (const auto& [cmd, a] : scenario_commands) {
    if (cmd->parsed()) {
      args = a;
      command = cmd->get_name();
    }
  }

  try {
    if (presets->parsed()) return cmd_presets(preset_name, out);

    resolved = resolve(command, *args);
    if (command == "heterodyne") {
      validate(scan);
      if (pump != "both") {
        try {
          scan.pump_index = std::stoul(pump);
        } catch (const std::exception&) {
          throw UsageError("--pump must be a line index or 'both'");
        }
        if (scan.pump_index >= resolved->config.medium.lines.size())
          throw UsageError("--pump " + pump + " out of range");
      }
    }
    if (command == "coeffs" && (!(fmax > fmin) || profile_points < 2))
      throw UsageError("profile range needs --fmin < --fmax and --points >= 2");
    if (command == "sweep" && separations.empty()) {
      separations = resolved->preset_separations.empty()
                        ? std::vector<double>{separation_of(resolved->config.medium)}
                        : resolved->preset_separations;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    const ScenarioConfig& config = resolved->config;
    const std::string& stem = resolved->stem;
    const fs::path dir = prepare_output_dir(args->output_dir);
    write_text_file(dir / (stem + "_resolved_config.json"), resolved->text);

    if (command == "coeffs") {
      write_profile(dir, stem, config, fmin, fmax, profile_points, args->svg);
      out << "wrote " << (dir / (stem + "_profile.csv")).string() << "\n";
    } else if (command == "propagate") {
      const PropagationResult result = run_config(config);
      if (wants(config, OutputKind::Traces)) {
        write_text_file(dir / (stem + "_" + result.reference.label + ".csv"), trace_csv(result.reference));
        write_text_file(dir / (stem + "_" + result.output.label + ".csv"), trace_csv(result.output));
        if (args->svg)
          write_text_file(dir / (stem + "_traces.svg"), traces_svg(result.reference, result.output, config.name));
      }
      if (wants(config, OutputKind::Metrics))
        write_text_file(dir / (stem + "_metrics.csv"), metrics_csv(separation_of(config.medium), result.metrics));
      if (wants(config, OutputKind::Profile)) write_profile(dir, stem, config, fmin, fmax, profile_points, args->svg);
      print_metrics(out, config, result.metrics);
    } else if (command == "sweep") {
      const auto rows = run_sweep(config, separations, jobs);
      write_text_file(dir / (stem + ".csv"), sweep_csv(rows));
      out << sweep_csv(rows);
    } else if (command == "heterodyne") {
      std::vector<DispersionTrace> traces;
      if (pump == "both" && config.medium.lines.size() == 2) {
        auto [lower, upper] = dual_trace(config.medium, scan);
        traces = {lower, upper};
      } else {
        traces = {simulate_scan(config.medium, scan)};
      }
      for (std::size_t i = 0; i < traces.size(); ++i) {
        const std::string name = stem + "_trace" + std::to_string(i) + ".csv";
        write_text_file(dir / name, dispersion_csv(traces[i]));
        out << "wrote " << (dir / name).string() << " (pump at " << traces[i].pump_offset << " Hz)\n";
      }
      if (args->svg) write_text_file(dir / (stem + "_dispersion.svg"), dispersion_svg(traces, config.name));
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitComputation;
  }
  return kExitOk;
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace gaindoublet
