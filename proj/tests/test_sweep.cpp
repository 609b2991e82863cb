#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <sstream>

#include "gaindoublet/io.hpp"
#include "gaindoublet/sweep.hpp"

using namespace gaindoublet;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

std::size_t count_lines(const std::string& text) {
  std::size_t n = 0;
  for (char c : text) n += (c == '\n');
  return n;
}

}  // namespace

TEST_CASE("preset catalog", "[sweep]") {
  std::vector<std::string> names;
  for (const auto& info : preset_catalog()) names.push_back(info.name);
  CHECK(names == std::vector<std::string>{"fig1", "fig2", "fig4", "sps"});

  for (const auto& name : names) {
    const auto configs = preset(name);
    REQUIRE(configs.size() == 4);
    for (const auto& c : configs) CHECK_NOTHROW(validate(c));
  }
  CHECK_THROWS_AS(preset("fig3"), ConfigError);
  CHECK_THROWS_WITH(preset("fig3"), ContainsSubstring("fig1") && ContainsSubstring("sps"));
}

TEST_CASE("fig2 preset parameters", "[sweep]") {
  const auto configs = preset("fig2");
  const std::vector<double> expected{0.0, 1.0, 2.0, 4.0};
  for (std::size_t i = 0; i < configs.size(); ++i) {
    const auto& c = configs[i];
    CHECK(separation_of(c.medium) == expected[i]);
    CHECK(c.pulse.t0 == 0.6);
    CHECK(c.pulse.peak_time == 0.0);
    REQUIRE(c.medium.lines.size() == 2);
    for (const auto& line : c.medium.lines) {
      CHECK(line.strength == 6.0);
      CHECK(line.response_time == 1.1);
    }
    CHECK(is_symmetric_doublet(c.medium));
    CHECK(c.outputs == std::vector<OutputKind>{OutputKind::Traces, OutputKind::Metrics});
  }
  CHECK(preset("fig1")[0].outputs == std::vector<OutputKind>{OutputKind::Profile});
  CHECK(preset("fig4")[2].medium == configs[2].medium);
}

TEST_CASE("sps preset keeps the dimensionless products of fig2", "[sweep]") {
  const auto fig2 = preset("fig2");
  const auto sps = preset("sps");
  for (std::size_t i = 0; i < fig2.size(); ++i) {
    const auto& a = fig2[i];
    const auto& b = sps[i];
    CHECK_THAT(b.medium.lines[0].response_time, WithinRel(1e-3, 1e-15));
    CHECK(b.medium.convention == a.medium.convention);
    CHECK(b.grid.n_samples == a.grid.n_samples);
    const double ta = a.medium.lines[0].response_time, tb = b.medium.lines[0].response_time;
    CHECK(b.medium.lines[0].strength == a.medium.lines[0].strength);
    CHECK_THAT(b.pulse.t0 / tb, WithinRel(a.pulse.t0 / ta, 1e-14));
    CHECK_THAT(b.grid.dt / tb, WithinRel(a.grid.dt / ta, 1e-14));
    CHECK_THAT(separation_of(b.medium) * tb, WithinAbs(separation_of(a.medium) * ta, 1e-14));
  }
}

TEST_CASE("config text round trip", "[sweep][io]") {
  for (const auto& name : {"fig1", "fig2", "fig4", "sps"}) {
    for (const auto& config : preset(name)) {
      const auto text = config_to_text(config);
      CHECK(parse_config(text) == config);
      CHECK(config_to_text(parse_config(text)) == text);
    }
  }

  SECTION("through a file") {
    const auto config = preset("fig2")[1];
    const auto path = std::filesystem::temp_directory_path() / "gaindoublet_test_sweep_config.json";
    write_config(config, path);
    CHECK(read_config(path) == config);
    std::filesystem::remove(path);
    CHECK_THROWS_AS(read_config(path), IoError);
  }
}

TEST_CASE("config parse errors", "[sweep][io]") {
  const auto base = config_to_text(preset("fig2")[0]);

  SECTION("unknown field is named") {
    const auto text = apply_overrides(base, {"pulse.width=0.6"});
    try {
      parse_config(text);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.field == "pulse.width");
      CHECK_THAT(std::string(e.what()), ContainsSubstring("pulse.width"));
    }
    CHECK_THROWS_AS(parse_config(apply_overrides(base, {"medium.lines.0.tau=1"})), ParseError);
    CHECK_THROWS_AS(parse_config(apply_overrides(base, {"extra=1"})), ParseError);
  }
  SECTION("syntax error reports the line") {
    std::string text = base;
    const auto pos = text.find("\"pulse\"");
    REQUIRE(pos != std::string::npos);
    text.insert(pos, "@@ ");
    const int line = 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<long>(pos), '\n'));
    try {
      parse_config(text);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line == line);
      CHECK_THAT(std::string(e.what()), ContainsSubstring("line " + std::to_string(line)));
    }
  }
  SECTION("type and value errors") {
    CHECK_THROWS_AS(parse_config(apply_overrides(base, {"pulse.t0=\"long\""})), ParseError);
    CHECK_THROWS_AS(parse_config(apply_overrides(base, {"medium.convention=\"radians\""})), ParseError);
    CHECK_THROWS_AS(parse_config(apply_overrides(base, {"grid.n_samples=1000.5"})), ParseError);
    CHECK_THROWS_AS(parse_config(apply_overrides(base, {"outputs=[\"movie\"]"})), ParseError);
    CHECK_THROWS_AS(parse_config(apply_overrides(base, {"grid.n_samples=1000"})), ConfigError);
    CHECK_THROWS_AS(parse_config(apply_overrides(base, {"pulse.t0=-1"})), ConfigError);
    CHECK_THROWS_AS(parse_config(apply_overrides(base, {"medium.lines=[]"})), ConfigError);
  }
  SECTION("optional sections take defaults") {
    const std::string minimal = R"({
  "medium": {"convention": "ordinary-frequency",
             "lines": [{"center_offset": 0.5, "strength": 6, "response_time": 1.1}]},
  "pulse": {"t0": 0.6, "peak_time": 0},
  "grid": {"n_samples": 8192, "dt": 0.005}
})";
    const auto c = parse_config(minimal);
    CHECK(c.analysis == AnalysisSpec{});
    CHECK(c.medium.mean_index == 2.4);
    CHECK(c.outputs == std::vector<OutputKind>{OutputKind::Traces, OutputKind::Metrics});
    CHECK(c.medium.convention == DetuningConvention::OrdinaryFrequency);
  }
}

TEST_CASE("overrides", "[sweep][io]") {
  const auto base = config_to_text(preset("fig2")[0]);
  SECTION("compose left to right, last wins") {
    const auto c = parse_config(apply_overrides(
        base, {"medium.lines.0.strength=1", "pulse.t0=0.5", "medium.lines.0.strength=2.5", "name=custom run"}));
    CHECK(c.medium.lines[0].strength == 2.5);
    CHECK(c.medium.lines[1].strength == 6.0);
    CHECK(c.pulse.t0 == 0.5);
    CHECK(c.name == "custom run");
  }
  SECTION("no overrides leaves the text unchanged") {
    CHECK(parse_config(apply_overrides(base, {})) == preset("fig2")[0]);
  }
  SECTION("malformed assignments") {
    CHECK_THROWS_AS(apply_overrides(base, {"pulse.t0"}), ConfigError);
    CHECK_THROWS_AS(apply_overrides(base, {"medium.lines.7.strength=1"}), ConfigError);
    CHECK_THROWS_AS(apply_overrides(base, {"pulse.t0.x=1"}), ConfigError);
    CHECK_THROWS_AS(apply_overrides(base, {"pulse..t0=1"}), ConfigError);
  }
}

TEST_CASE("run_sweep", "[sweep]") {
  const auto base = preset("fig2")[0];

  SECTION("empty list gives an empty table") {
    CHECK(run_sweep(base, {}).empty());
    CHECK(count_lines(sweep_csv({})) == 1);
  }
  SECTION("degenerate doublet delays") {
    const auto rows = run_sweep(base, {0.0});
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].peak_shift > 0.0);
    CHECK(rows[0].separation == 0.0);
  }
  SECTION("rows follow the input order and match single runs") {
    const std::vector<double> separations{4.0, 0.0, 2.0, 1.0};
    const auto rows = run_sweep(base, separations, 3);
    REQUIRE(rows.size() == separations.size());
    const auto presets = preset("fig2");
    for (std::size_t i = 0; i < rows.size(); ++i) {
      CHECK(rows[i].separation == separations[i]);
      const auto index = static_cast<std::size_t>(separations[i] == 4.0 ? 3 : separations[i]);
      const auto single = run_config(presets[index]).metrics;
      CHECK(rows[i].peak_shift == single.peak_shift);
      CHECK(rows[i].fwhm_out == single.fwhm_out);
      CHECK(rows[i].energy_gain == single.energy_gain);
      CHECK(rows[i].beat == single.beat_frequency);
    }
  }
  SECTION("advance at 2 Hz exceeds the advance at 4 Hz") {
    const auto rows = run_sweep(base, {2.0, 4.0});
    CHECK(rows[0].peak_shift < 0.0);
    CHECK(rows[0].peak_shift < rows[1].peak_shift);
  }
  SECTION("thread count does not change the bits") {
    const std::vector<double> separations{0.0, 0.5, 1.0, 2.0, 3.0, 4.0};
    const auto serial = sweep_csv(run_sweep(base, separations, 1));
    CHECK(sweep_csv(run_sweep(base, separations, 4)) == serial);
    CHECK(sweep_csv(run_sweep(base, separations, 0)) == serial);
    CHECK(count_lines(serial) == separations.size() + 1);
  }
  SECTION("invalid separations") {
    CHECK_THROWS_AS(run_sweep(base, {1.0, -1.0}), ConfigError);
    CHECK_THROWS_AS(run_sweep(base, {std::nan("")}), ConfigError);
  }
}

TEST_CASE("anomalous-center presets compress", "[sweep]") {
  for (const auto& config : preset("fig2")) {
    const auto& line = config.medium.lines[0];
    const double u = convention_factor<double>(config.medium.convention);
    const double threshold = 2.0 / (line.response_time * u);
    if (separation_of(config.medium) < threshold) continue;
    REQUIRE(classify_dispersion(config.medium) == DispersionRegime::Anomalous);
    CHECK(run_config(config).metrics.compression_ratio < 1.0);
  }
}

TEST_CASE("detected beats sit at the doublet separation", "[sweep]") {
  for (const auto& config : preset("fig2")) {
    const auto m = run_config(config).metrics;
    const double df = make_grid(config.grid.n_samples, config.grid.dt).df();
    if (m.beat_frequency) {
      CHECK_THAT(*m.beat_frequency, WithinAbs(separation_of(config.medium), df));
      CHECK(*m.beat_frequency > 0.0);
    }
  }
}

TEST_CASE("sweep csv layout", "[sweep][io]") {
  SweepRow with_beat{1.0, 0.5, 0.7, 0.6, 0.6 / 0.7, 1.0, 10.0};
  SweepRow without_beat{0.0, 1.25, 0.7, 0.9, 0.9 / 0.7, std::nullopt, 20.0};
  const auto csv = sweep_csv({with_beat, without_beat});
  std::istringstream in(csv);
  std::string header, first, second;
  std::getline(in, header);
  std::getline(in, first);
  std::getline(in, second);
  CHECK(header == "separation_hz,peak_shift_s,fwhm_in_s,fwhm_out_s,compression,beat_hz,energy_gain");
  CHECK(first.rfind("1,0.5,0.7,0.6,", 0) == 0);
  CHECK(second == "0,1.25,0.7,0.9," + format_number(0.9 / 0.7) + ",,20");
  CHECK(format_number(0.1) == "0.1");
  CHECK(std::stod(format_number(1.0 / 3.0)) == 1.0 / 3.0);
}
