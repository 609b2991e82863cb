#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "gaindoublet/propagator.hpp"

using namespace gaindoublet;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

constexpr auto kOrdinary = DetuningConvention::OrdinaryFrequency;
constexpr auto kAngular = DetuningConvention::AngularFrequency;

const SampleGrid kGrid = make_grid(8192, 0.005);

double relative_error(const Eigen::ArrayXcd& a, const Eigen::ArrayXcd& b) {
  return (a - b).matrix().norm() / b.matrix().norm();
}

}  // namespace

TEST_CASE("apply_medium", "[propagator]") {
  const auto pulse = gaussian_pulse(0.6, 0.0, kGrid);
  const auto spectrum = forward_transform(pulse);
  const Eigen::Index carrier = kGrid.n_samples / 2;

  SECTION("zero-strength medium leaves the spectrum unchanged") {
    const auto out = apply_medium(spectrum, make_doublet(1.0, 0.0, 1.1));
    CHECK((out.samples == spectrum.samples).all());
  }
  SECTION("carrier bin gain") {
    // Degenerate doublet: one effective line with peak coupling Γ0d = 6.
    const auto out = apply_medium(spectrum, make_doublet(0.0, 6.0, 1.1));
    CHECK_THAT(std::abs(out.samples(carrier) / spectrum.samples(carrier)), WithinRel(std::exp(6.0), 1e-13));
    // A lone line of strength 6 peaks at strength/2.
    const auto single = apply_medium(spectrum, make_single_line(0.0, 6.0, 1.1));
    CHECK_THAT(std::abs(single.samples(carrier) / spectrum.samples(carrier)), WithinRel(std::exp(3.0), 1e-13));
  }
  SECTION("symmetric doublet: even magnitude, odd phase on a real even input") {
    const auto out = apply_medium(spectrum, make_doublet(0.7, 6.0, 1.1, kAngular));
    // Even magnitude and odd phase together mean S(-f) = conj(S(f)).
    const double scale = out.samples.abs().maxCoeff();
    for (Eigen::Index d = 1; d < carrier; ++d) {
      const auto up = out.samples(carrier + d);
      const auto down = out.samples(carrier - d);
      CHECK(std::abs(up - std::conj(down)) <= 1e-12 * scale);
    }
  }
  SECTION("gain overflow guard") {
    CHECK_THROWS_AS(apply_medium(spectrum, make_doublet(0.0, 60.0, 1.1)), GainOverflowError);
    CHECK_NOTHROW(apply_medium(spectrum, make_doublet(0.0, 60.0, 1.1), 70.0));
  }
}

TEST_CASE("run_scenario", "[propagator]") {
  const auto pulse = gaussian_pulse(0.6, 0.0, kGrid);

  SECTION("identity medium reproduces the input") {
    const auto r = run_scenario(pulse, make_doublet(0.0, 0.0, 1.1));
    CHECK(relative_error(r.output.samples, pulse.samples) <= 1e-12);
    CHECK_THAT(r.metrics.peak_shift, WithinAbs(0.0, 1e-9));
    CHECK_THAT(r.metrics.energy_gain, WithinRel(1.0, 1e-12));
    CHECK((r.reference.samples == pulse.samples).all());
    CHECK(r.output.grid == pulse.grid);
  }
  SECTION("single effective line delays the pulse") {
    const auto r = run_scenario(pulse, make_doublet(0.0, 6.0, 1.1, kAngular));
    CHECK(r.metrics.peak_shift > 0.0);
    CHECK(r.metrics.centroid_shift > 0.0);
  }
  SECTION("output energy equals the filtered-spectrum energy") {
    const auto medium = make_doublet(1.0, 6.0, 1.1, kAngular);
    const auto r = run_scenario(pulse, medium);
    const auto filtered = apply_medium(forward_transform(pulse), medium);
    CHECK_THAT(energy(r.output), WithinRel(energy(filtered), 1e-10));
    CHECK_THAT(r.metrics.energy_gain, WithinRel(energy(filtered) / energy(pulse), 1e-10));
  }
  SECTION("linear in the input amplitude") {
    const auto medium = make_doublet(0.5, 6.0, 1.1, kAngular);
    TimeTrace scaled = pulse;
    const std::complex<double> a(2.5, -1.0);
    scaled.samples *= a;
    const auto r1 = run_scenario(pulse, medium);
    const auto r2 = run_scenario(scaled, medium);
    CHECK(relative_error(r2.output.samples, a * r1.output.samples) <= 1e-12);
    CHECK_THAT(r2.metrics.peak_shift, WithinAbs(r1.metrics.peak_shift, 1e-9));
    CHECK_THAT(r2.metrics.fwhm_out, WithinAbs(r1.metrics.fwhm_out, 1e-9));
  }
  SECTION("propagates the gain-overflow error") {
    CHECK_THROWS_AS(run_scenario(pulse, make_doublet(0.0, 200.0, 1.1)), GainOverflowError);
  }
}

TEST_CASE("narrowband limit converges to the group delay", "[propagator]") {
  for (auto convention : {kOrdinary, kAngular}) {
    const double tau = 1.1;
    const double u = convention_factor<double>(convention);
    const double gain_width = 1.0 / (tau * u);
    const double t0 = 10.0 / gain_width;
    const auto grid = make_grid(16384, t0 / 40.0);
    for (double offset : {0.0, 0.3 * gain_width, 2.0 * gain_width}) {
      const auto medium = make_doublet(offset, 6.0, tau, convention);
      const auto r = run_scenario(gaussian_pulse(t0, 0.0, grid), medium);
      const double expected = group_delay(medium);
      CHECK_THAT(r.metrics.peak_shift, WithinRel(expected, 0.05));
    }
  }
}

TEST_CASE("energy gain of a spectrally narrow pulse approaches e^12", "[propagator]") {
  const double tau = 1.1, t0 = 11.0;
  const auto grid = make_grid(16384, t0 / 40.0);
  const auto pulse = gaussian_pulse(t0, 0.0, grid);
  const auto medium = make_doublet(0.0, 6.0, tau);
  const auto r = run_scenario(pulse, medium);

  // Direct bin arithmetic: Σ|S|²·e^{2Γ_in} / Σ|S|², with the Lorentzian written out.
  const auto spectrum = forward_transform(pulse);
  double num = 0.0, den = 0.0;
  for (Eigen::Index j = 0; j < grid.n_samples; ++j) {
    const double x = grid.detuning(j) * tau;
    const double g = 6.0 / (1.0 + x * x);
    num += std::norm(spectrum.samples(j)) * std::exp(2.0 * g);
    den += std::norm(spectrum.samples(j));
  }
  CHECK_THAT(r.metrics.energy_gain, WithinRel(num / den, 1e-10));
  CHECK_THAT(r.metrics.energy_gain, WithinRel(std::exp(12.0), 0.05));
  CHECK(r.metrics.energy_gain < std::exp(12.0));

  const auto lossy = run_scenario(pulse, make_doublet(0.0, -2.0, tau));
  CHECK(lossy.metrics.energy_gain < 1.0);
}

TEST_CASE("peak advance stays within the in-band slope bound", "[propagator]") {
  const auto pulse = gaussian_pulse(0.6, 0.0, kGrid);
  const auto spectrum = forward_transform(pulse);
  const double floor = 1e-3 * spectrum.samples.abs().maxCoeff();
  for (double separation : {0.0, 1.0, 2.0, 4.0}) {
    for (auto convention : {kOrdinary, kAngular}) {
      const auto medium = make_doublet(separation / 2.0, 6.0, 1.1, convention);
      double bound = 0.0;
      for (Eigen::Index j = 0; j < kGrid.n_samples; ++j)
        if (std::abs(spectrum.samples(j)) >= floor)
          bound = std::max(bound, std::abs(gamma_ph_slope(kGrid.detuning(j), medium)));
      const auto r = run_scenario(pulse, medium);
      if (r.metrics.peak_shift < 0) CHECK(-r.metrics.peak_shift <= bound);
    }
  }
}

TEST_CASE("normalized intensity", "[propagator]") {
  auto pulse = gaussian_pulse(0.6, 0.0, kGrid);
  pulse.samples *= 3.0;
  const auto n = normalized_intensity(pulse);
  CHECK(n.maxCoeff() == 1.0);
  CHECK_THAT(n(kGrid.t0_index + 120), WithinRel(std::exp(-2.0), 1e-12));
}
